// Copyright 2026 The optcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "optcs/core.hpp"
#include "optcs/graph_kit.hpp"
#include "optcs/type_dp.hpp"

namespace optcs {

class GameInstance;

// [q; w_1, ..., w_n]: a coalition wins iff its weight sum reaches the quota.
struct WeightedVotingGame {
  Value quota = 0;
  std::vector<Value> weights;
};

// Conjunction of component games over a shared player set: a coalition wins
// iff it wins every component.
struct MultiWeightedVotingGame {
  std::vector<WeightedVotingGame> components;
};

// Simple game given by its set of minimal winning coalitions.
struct MinimalWinningGame {
  int player_count = 0;
  std::vector<Coalition> minimal_winning;
};

// Players are vertices; a coalition is worth the total weight of its induced
// edges. positive_only marks the restriction to strictly positive weights.
struct GraphGame {
  int vertex_count = 0;
  std::vector<WeightedEdge> edges;
  bool positive_only = false;
};

// Players are edges; a coalition wins iff it contains a spanning tree.
struct SpanningConnectivityGame {
  int vertex_count = 0;
  std::vector<Edge> edges;
};

// Players are edges; a coalition wins iff it admits an s-t path.
struct EdgePathGame {
  int vertex_count = 0;
  int source = 0;
  int sink = 0;
  bool directed = false;
  std::vector<Edge> edges;
};

// Players are the vertices other than s and t (player p is the p-th
// non-terminal vertex in ascending order; s and t are always available);
// a coalition wins iff its vertices admit an s-t path.
struct VertexPathGame {
  int vertex_count = 0;
  int source = 0;
  int sink = 0;
  bool directed = false;
  std::vector<Edge> edges;

  std::vector<int> player_vertices() const;
};

// Players are arcs; a coalition is worth the maximum flow using its arcs.
struct NetworkFlowGame {
  int vertex_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<Arc> arcs;
};

// Players are vertices; a coalition is worth the maximum-weight matching of
// its induced subgraph.
struct MatchingGame {
  int vertex_count = 0;
  std::vector<WeightedEdge> edges;
};

// Players are vertices; a coalition is worth the maximum independent set of
// its induced subgraph. Single evaluations are capped (the value itself is
// NP-hard); the solver never needs them.
struct IndependentSetGame {
  int vertex_count = 0;
  std::vector<Edge> edges;
};

struct SkillTask {
  std::vector<int> required_skills;
  Value weight = 0;
};

// Weighted task skill game: a coalition earns the weight of every task
// whose required skills its members jointly cover.
struct WeightedTaskSkillGame {
  std::vector<std::string> skill_names;
  std::vector<std::vector<int>> player_skills;
  std::vector<SkillTask> tasks;
};

// Full value table, one entry per coalition bitmask.
struct ExplicitGame {
  int player_count = 0;
  std::vector<Value> table;  // size 1 << player_count, table[0] == 0
};

// 0/1 game winning exactly where the inner game reaches the threshold.
struct ThresholdGame {
  std::shared_ptr<const GameInstance> inner;
  Value threshold = 0;
};

// Tagged union over all supported representations. Class invariants are
// enforced on construction, so a GameInstance in hand is always valid.
class GameInstance {
 public:
  using Variant =
      std::variant<WeightedVotingGame, MultiWeightedVotingGame,
                   MinimalWinningGame, GraphGame, SpanningConnectivityGame,
                   EdgePathGame, VertexPathGame, NetworkFlowGame, MatchingGame,
                   IndependentSetGame, WeightedTaskSkillGame, ExplicitGame,
                   ThresholdGame>;

  explicit GameInstance(Variant data);

  const Variant& data() const { return data_; }
  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&data_);
  }
  template <typename T>
  bool holds() const {
    return std::holds_alternative<T>(data_);
  }

  int player_count() const;

 private:
  Variant data_;
};

// Short class tag, matching the file format ("wvg", "nfg", ...).
std::string class_name(const GameInstance& game);

// Exact characteristic-function value of the coalition under the instance's
// class definition. Throws PlayerOutOfRange when C is not a subset of the
// player set, and IntractableEvaluation for over-cap independent-set
// queries.
Value evaluate(const GameInstance& game, const Coalition& coalition);

// Groups players with identical syntactic descriptions: equal weight (WVG),
// equal weight vector (MWVG), or equal skill set (WTSG). Classes are ordered
// by least member. Throws NoSyntacticTypes for every other class.
TypePartition extract_type_partition(const GameInstance& game);

// Wraps a monotone game into its threshold version. Throws NonMonotoneInner
// for graph games with negative weights and for non-monotone explicit
// tables; throws InvariantError for thresholds below 1.
GameInstance make_threshold(GameInstance inner, Value threshold);

// True when the representation guarantees monotonicity (everything except
// graph games with a negative edge and non-monotone explicit tables).
bool is_monotone(const GameInstance& game);

// ValuationOracle view over an instance. The adapter borrows the instance,
// which must outlive it.
class GameOracle final : public ValuationOracle {
 public:
  explicit GameOracle(const GameInstance& game) : game_(&game) {}
  int player_count() const override { return game_->player_count(); }
  Value value(const Coalition& c) const override {
    return evaluate(*game_, c);
  }

 private:
  const GameInstance* game_;
};

}  // namespace optcs
