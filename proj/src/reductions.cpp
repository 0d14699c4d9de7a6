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

#include "optcs/reductions.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

namespace optcs {
namespace {

constexpr int kExhaustiveCutCap = 20;

std::string join_values(const std::vector<Value>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) os << ',';
    os << values[i];
  }
  return os.str();
}

bool maxcut_connected(int vertex_count, const std::vector<WeightedEdge>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count));
  for (const WeightedEdge& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int to : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(to)]) {
        seen[static_cast<std::size_t>(to)] = 1;
        ++reached;
        stack.push_back(to);
      }
    }
  }
  return reached == vertex_count;
}

Value exhaustive_maxcut(int vertex_count,
                        const std::vector<WeightedEdge>& edges) {
  Value best = 0;
  const std::uint32_t sides = std::uint32_t{1}
                              << static_cast<std::uint32_t>(vertex_count - 1);
  for (std::uint32_t side = 0; side < sides; ++side) {
    Value cut = 0;
    for (const WeightedEdge& e : edges) {
      const bool ua = e.u == 0 || ((side >> (e.u - 1)) & 1u);
      const bool va = e.v == 0 || ((side >> (e.v - 1)) & 1u);
      if (ua != va) cut += e.w;
    }
    best = std::max(best, cut);
  }
  return best;
}

}  // namespace

ReductionInstance gen_wvg_from_partition(const std::vector<Value>& weights,
                                         int k) {
  if (weights.empty()) throw InvariantError("weight multiset is empty");
  for (Value w : weights) {
    if (w <= 0) throw InvariantError("weights must be positive");
  }
  if (k < 2) throw InvariantError("part count must be at least 2");
  const Value total = std::accumulate(weights.begin(), weights.end(), Value{0});
  if (total % k != 0) {
    throw NotDivisible("total weight " + std::to_string(total) +
                       " is not divisible by " + std::to_string(k));
  }
  ReductionInstance out{
      GameInstance(WeightedVotingGame{total / k, weights}),
      "partition-wvg",
      "multiset {" + join_values(weights) + "}, k=" + std::to_string(k),
      "the multiset splits into k equal-sum parts iff the optimal welfare "
      "equals k",
      std::nullopt,
      k};
  return out;
}

ReductionInstance gen_gg_from_maxcut(int vertex_count,
                                     const std::vector<WeightedEdge>& edges) {
  if (vertex_count < 2) {
    throw InvariantError("max-cut reduction needs at least two vertices");
  }
  for (const WeightedEdge& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw InvariantError("edge endpoint out of range");
    }
    if (e.u == e.v) throw InvariantError("self loop");
    if (e.w < 0) throw InvariantError("max-cut weights must be non-negative");
  }
  if (!maxcut_connected(vertex_count, edges)) {
    throw Disconnected("max-cut reduction input must be connected");
  }
  const Value total = std::accumulate(
      edges.begin(), edges.end(), Value{0},
      [](Value acc, const WeightedEdge& e) { return acc + e.w; });
  if (total < 1) {
    throw InvariantError(
        "max-cut reduction needs at least one positive-weight edge");
  }

  const int apex1 = vertex_count;
  const int apex2 = vertex_count + 1;
  GraphGame gg{vertex_count + 2, {}, false};
  for (const WeightedEdge& e : edges) gg.edges.push_back({e.u, e.v, -e.w});
  for (int v = 0; v < vertex_count; ++v) {
    gg.edges.push_back({apex1, v, total + 1});
    gg.edges.push_back({apex2, v, total + 1});
  }
  gg.edges.push_back({apex1, apex2, -(vertex_count + 1) * total});

  ReductionInstance out{
      GameInstance(std::move(gg)),
      "maxcut-gg",
      std::to_string(vertex_count) + " vertices, " +
          std::to_string(edges.size()) + " edges, total weight " +
          std::to_string(total),
      "optimal structures split the two apex vertices and attain "
      "|V|(W+1) - W + maxcut",
      std::nullopt,
      0};
  if (vertex_count <= kExhaustiveCutCap) {
    const Value cut = exhaustive_maxcut(vertex_count, edges);
    out.predicted_welfare = vertex_count * (total + 1) - total + cut;
    out.target = cut;
  }
  return out;
}

ReductionInstance gen_mwc_from_clique(int vertex_count,
                                      const std::vector<Edge>& edges) {
  if (vertex_count < 2) {
    throw InvariantError("clique reduction needs at least two vertices");
  }
  std::vector<std::vector<char>> adjacent(
      static_cast<std::size_t>(vertex_count),
      std::vector<char>(static_cast<std::size_t>(vertex_count), 0));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw InvariantError("edge endpoint out of range");
    }
    if (e.u == e.v) throw InvariantError("self loop");
    adjacent[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    adjacent[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }

  // Player p <-> the p-th pair {u,v}, u < v, in lexicographic order.
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = u + 1; v < vertex_count; ++v) pairs.emplace_back(u, v);
  }
  auto pair_index = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<int>(std::lower_bound(pairs.begin(), pairs.end(),
                                             std::make_pair(u, v)) -
                            pairs.begin());
  };

  std::set<std::vector<int>> winning;  // set semantics collapse duplicates
  for (int i = 0; i < vertex_count; ++i) {
    std::vector<int> members;
    for (int j = 0; j < vertex_count; ++j) {
      if (j != i && !adjacent[static_cast<std::size_t>(i)]
                             [static_cast<std::size_t>(j)]) {
        members.push_back(pair_index(i, j));
      }
    }
    if (members.empty()) {
      throw UniversalVertex("vertex " + std::to_string(i) +
                            " is adjacent to all others");
    }
    std::sort(members.begin(), members.end());
    winning.insert(std::move(members));
  }

  // The raw family need not be an antichain: when i's only non-neighbor is
  // j, the coalition of i is contained in the coalition of j. A containing
  // coalition is redundant for "wins iff it covers some listed coalition",
  // so the game's true minimal winning coalitions are the minimal elements.
  MinimalWinningGame game{static_cast<int>(pairs.size()), {}};
  for (const auto& members : winning) {
    const bool dominated =
        std::any_of(winning.begin(), winning.end(), [&](const auto& other) {
          return other != members &&
                 std::includes(members.begin(), members.end(), other.begin(),
                               other.end());
        });
    if (!dominated) game.minimal_winning.emplace_back(members);
  }

  return ReductionInstance{
      GameInstance(std::move(game)),
      "clique-mwc",
      std::to_string(vertex_count) + " vertices, " +
          std::to_string(edges.size()) + " edges",
      "the optimal welfare equals the clique number of the source graph",
      std::nullopt,
      0};
}

ReductionInstance gen_threshold_embedding(const WeightedVotingGame& game,
                                          ThresholdTarget target) {
  GameInstance source(game);  // validates quota and weights
  const int n = static_cast<int>(game.weights.size());
  ReductionInstance out{
      source, "", "[" + std::to_string(game.quota) + "; " +
                      join_values(game.weights) + "]",
      "the optimal welfare equals the source game's optimal welfare",
      std::nullopt, 0};

  if (target == ThresholdTarget::kNetworkFlow) {
    NetworkFlowGame nfg{2, 0, 1, {}};
    for (Value w : game.weights) nfg.arcs.push_back({0, 1, w});
    out.game = make_threshold(GameInstance(std::move(nfg)), game.quota);
    out.reduction = "wvg-tnfg";
  } else {
    MatchingGame mg{2 * n, {}};
    for (int i = 0; i < n; ++i) {
      mg.edges.push_back({2 * i, 2 * i + 1,
                          game.weights[static_cast<std::size_t>(i)]});
    }
    out.game = make_threshold(GameInstance(std::move(mg)), game.quota);
    out.reduction = "wvg-tmatching";
  }
  return out;
}

}  // namespace optcs
