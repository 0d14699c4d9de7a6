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

#include "optcs/games.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace optcs {
namespace {

constexpr int kIsgEvaluationCap = kExactSearchCap;
constexpr int kMaxExplicitPlayers = 24;
constexpr int kMaxSkills = 62;

void require(bool ok, const char* message) {
  if (!ok) throw InvariantError(message);
}

void validate(const WeightedVotingGame& g) {
  require(!g.weights.empty(), "weighted voting game needs players");
  require(g.quota >= 1, "quota must be at least 1");
  for (Value w : g.weights) require(w >= 0, "weights must be non-negative");
}

void validate(const MultiWeightedVotingGame& g) {
  require(!g.components.empty(), "multiple weighted voting game needs components");
  for (const auto& c : g.components) {
    validate(c);
    require(c.weights.size() == g.components.front().weights.size(),
            "components must share the player set");
  }
}

void validate(const MinimalWinningGame& g) {
  require(g.player_count >= 1, "game needs players");
  for (const Coalition& c : g.minimal_winning) {
    require(!c.empty(), "empty minimal winning coalition");
    require(c.max_member() < g.player_count,
            "minimal winning coalition member out of range");
  }
  for (std::size_t i = 0; i < g.minimal_winning.size(); ++i) {
    for (std::size_t j = 0; j < g.minimal_winning.size(); ++j) {
      if (i == j) continue;
      if (g.minimal_winning[i] == g.minimal_winning[j]) {
        throw InvariantError("duplicate minimal winning coalition");
      }
      if (g.minimal_winning[i].subset_of(g.minimal_winning[j])) {
        throw InvariantError(
            "minimal winning coalition contained in another");
      }
    }
  }
}

void check_edges(int vertex_count, const std::vector<Edge>& edges) {
  for (const Edge& e : edges) {
    require(e.u >= 0 && e.u < vertex_count && e.v >= 0 && e.v < vertex_count,
            "edge endpoint out of range");
    require(e.u != e.v, "self loop");
  }
}

void check_edges(int vertex_count, const std::vector<WeightedEdge>& edges) {
  for (const WeightedEdge& e : edges) {
    require(e.u >= 0 && e.u < vertex_count && e.v >= 0 && e.v < vertex_count,
            "edge endpoint out of range");
    require(e.u != e.v, "self loop");
  }
}

bool connected(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count <= 0) return false;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count));
  for (const Edge& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int to : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(to)]) {
        seen[static_cast<std::size_t>(to)] = 1;
        ++reached;
        q.push_back(to);
      }
    }
  }
  return reached == vertex_count;
}

void validate(const GraphGame& g) {
  require(g.vertex_count >= 1, "game needs players");
  check_edges(g.vertex_count, g.edges);
  if (g.positive_only) {
    for (const WeightedEdge& e : g.edges) {
      require(e.w >= 1, "positive-only graph game has a non-positive weight");
    }
  }
}

void validate(const SpanningConnectivityGame& g) {
  require(g.vertex_count >= 2,
          "spanning connectivity game needs at least two vertices");
  require(!g.edges.empty(), "game needs players");
  check_edges(g.vertex_count, g.edges);
  if (!connected(g.vertex_count, g.edges)) {
    throw Disconnected("spanning connectivity game graph must be connected");
  }
}

void validate(const EdgePathGame& g) {
  require(g.vertex_count >= 2, "path game needs at least two vertices");
  require(g.source != g.sink, "source and sink must differ");
  require(g.source >= 0 && g.source < g.vertex_count && g.sink >= 0 &&
              g.sink < g.vertex_count,
          "terminal out of range");
  require(!g.edges.empty(), "game needs players");
  check_edges(g.vertex_count, g.edges);
}

void validate(const VertexPathGame& g) {
  require(g.vertex_count >= 3,
          "vertex path game needs a vertex besides the terminals");
  require(g.source != g.sink, "source and sink must differ");
  require(g.source >= 0 && g.source < g.vertex_count && g.sink >= 0 &&
              g.sink < g.vertex_count,
          "terminal out of range");
  check_edges(g.vertex_count, g.edges);
}

void validate(const NetworkFlowGame& g) {
  require(g.vertex_count >= 2, "flow network needs at least two vertices");
  require(g.source != g.sink, "source and sink must differ");
  require(g.source >= 0 && g.source < g.vertex_count && g.sink >= 0 &&
              g.sink < g.vertex_count,
          "terminal out of range");
  require(!g.arcs.empty(), "game needs players");
  for (const Arc& a : g.arcs) {
    require(a.from >= 0 && a.from < g.vertex_count && a.to >= 0 &&
                a.to < g.vertex_count,
            "arc endpoint out of range");
    require(a.from != a.to, "self-loop arc");
    require(a.capacity >= 0, "capacities must be non-negative");
  }
}

void validate(const MatchingGame& g) {
  require(g.vertex_count >= 1, "game needs players");
  check_edges(g.vertex_count, g.edges);
  for (const WeightedEdge& e : g.edges) {
    require(e.w >= 0, "matching weights must be non-negative");
  }
}

void validate(const IndependentSetGame& g) {
  require(g.vertex_count >= 1, "game needs players");
  check_edges(g.vertex_count, g.edges);
}

void validate(const WeightedTaskSkillGame& g) {
  require(!g.player_skills.empty(), "game needs players");
  const int k = static_cast<int>(g.skill_names.size());
  require(k <= kMaxSkills, "too many skills");
  for (const auto& skills : g.player_skills) {
    for (int s : skills) require(s >= 0 && s < k, "skill id out of range");
  }
  for (const SkillTask& t : g.tasks) {
    require(t.weight >= 0, "task weights must be non-negative");
    for (int s : t.required_skills) {
      require(s >= 0 && s < k, "skill id out of range");
    }
  }
}

void validate(const ExplicitGame& g) {
  require(g.player_count >= 1, "game needs players");
  require(g.player_count <= kMaxExplicitPlayers,
          "explicit table capped at 24 players");
  require(g.table.size() == (std::size_t{1} << g.player_count),
          "explicit table must have one entry per coalition");
  require(g.table[0] == 0, "explicit table must value the empty coalition 0");
}

bool explicit_is_monotone(const ExplicitGame& g) {
  const std::size_t size = g.table.size();
  for (std::size_t mask = 0; mask < size; ++mask) {
    for (int i = 0; i < g.player_count; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if ((mask & bit) == 0 && g.table[mask | bit] < g.table[mask]) {
        return false;
      }
    }
  }
  return true;
}

void validate(const ThresholdGame& g) {
  require(g.inner != nullptr, "threshold wrapper needs an inner game");
  require(g.threshold >= 1, "threshold must be at least 1");
  if (!is_monotone(*g.inner)) {
    throw NonMonotoneInner(
        "threshold wrapper requires a monotone inner game");
  }
}

std::uint64_t skill_mask(const std::vector<int>& skills) {
  std::uint64_t m = 0;
  for (int s : skills) m |= std::uint64_t{1} << s;
  return m;
}

void check_players(const GameInstance& game, const Coalition& c) {
  if (c.max_member() >= game.player_count()) {
    throw PlayerOutOfRange("coalition member outside the player set");
  }
}

std::vector<char> membership(int n, const Coalition& c) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int p : c.members()) in[static_cast<std::size_t>(p)] = 1;
  return in;
}

Value evaluate_impl(const WeightedVotingGame& g, const Coalition& c) {
  Value sum = 0;
  for (int p : c.members()) sum += g.weights[static_cast<std::size_t>(p)];
  return sum >= g.quota ? 1 : 0;
}

Value evaluate_impl(const MultiWeightedVotingGame& g, const Coalition& c) {
  for (const auto& component : g.components) {
    if (evaluate_impl(component, c) == 0) return 0;
  }
  return 1;
}

Value evaluate_impl(const MinimalWinningGame& g, const Coalition& c) {
  for (const Coalition& mwc : g.minimal_winning) {
    if (mwc.subset_of(c)) return 1;
  }
  return 0;
}

Value evaluate_impl(const GraphGame& g, const Coalition& c) {
  const std::vector<char> in = membership(g.vertex_count, c);
  Value sum = 0;
  for (const WeightedEdge& e : g.edges) {
    if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)])
      sum += e.w;
  }
  return sum;
}

Value evaluate_impl(const SpanningConnectivityGame& g, const Coalition& c) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      v = parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    }
    return v;
  };
  int components = g.vertex_count;
  for (int id : c.members()) {
    const Edge& e = g.edges[static_cast<std::size_t>(id)];
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1 ? 1 : 0;
}

bool reaches_sink(int vertex_count, int s, int t,
                  const std::vector<std::vector<int>>& adj,
                  const std::vector<char>& allowed) {
  if (!allowed[static_cast<std::size_t>(s)] ||
      !allowed[static_cast<std::size_t>(t)]) {
    return false;
  }
  std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
  std::deque<int> q{s};
  seen[static_cast<std::size_t>(s)] = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    if (v == t) return true;
    for (int to : adj[static_cast<std::size_t>(v)]) {
      if (allowed[static_cast<std::size_t>(to)] &&
          !seen[static_cast<std::size_t>(to)]) {
        seen[static_cast<std::size_t>(to)] = 1;
        q.push_back(to);
      }
    }
  }
  return false;
}

Value evaluate_impl(const EdgePathGame& g, const Coalition& c) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count));
  for (int id : c.members()) {
    const Edge& e = g.edges[static_cast<std::size_t>(id)];
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    if (!g.directed) adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> allowed(static_cast<std::size_t>(g.vertex_count), 1);
  return reaches_sink(g.vertex_count, g.source, g.sink, adj, allowed) ? 1 : 0;
}

Value evaluate_impl(const VertexPathGame& g, const Coalition& c) {
  std::vector<char> allowed(static_cast<std::size_t>(g.vertex_count), 0);
  allowed[static_cast<std::size_t>(g.source)] = 1;
  allowed[static_cast<std::size_t>(g.sink)] = 1;
  const std::vector<int> players = g.player_vertices();
  for (int p : c.members()) {
    allowed[static_cast<std::size_t>(players[static_cast<std::size_t>(p)])] = 1;
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count));
  for (const Edge& e : g.edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    if (!g.directed) adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return reaches_sink(g.vertex_count, g.source, g.sink, adj, allowed) ? 1 : 0;
}

Value evaluate_impl(const NetworkFlowGame& g, const Coalition& c) {
  FlowNetwork net{g.vertex_count, {}, g.source, g.sink};
  net.arcs.reserve(c.members().size());
  for (int id : c.members()) {
    net.arcs.push_back(g.arcs[static_cast<std::size_t>(id)]);
  }
  return max_flow(net).value;
}

Value evaluate_impl(const MatchingGame& g, const Coalition& c) {
  const std::vector<char> in = membership(g.vertex_count, c);
  std::vector<WeightedEdge> induced;
  for (const WeightedEdge& e : g.edges) {
    if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)])
      induced.push_back(e);
  }
  return max_weight_matching(g.vertex_count, induced).weight;
}

Value evaluate_impl(const IndependentSetGame& g, const Coalition& c) {
  if (c.size() > kIsgEvaluationCap) {
    throw IntractableEvaluation(
        "independent-set value is NP-hard; exact search capped at " +
        std::to_string(kIsgEvaluationCap) + " players");
  }
  // Re-index the induced subgraph on C.
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count), -1);
  for (std::size_t i = 0; i < c.members().size(); ++i) {
    index[static_cast<std::size_t>(c.members()[i])] = static_cast<int>(i);
  }
  std::vector<Edge> induced;
  for (const Edge& e : g.edges) {
    const int a = index[static_cast<std::size_t>(e.u)];
    const int b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) induced.push_back({a, b});
  }
  return max_independent_set(c.size(), induced).size;
}

Value evaluate_impl(const WeightedTaskSkillGame& g, const Coalition& c) {
  std::uint64_t covered = 0;
  for (int p : c.members()) {
    covered |= skill_mask(g.player_skills[static_cast<std::size_t>(p)]);
  }
  Value sum = 0;
  for (const SkillTask& t : g.tasks) {
    const std::uint64_t need = skill_mask(t.required_skills);
    if ((need & covered) == need) sum += t.weight;
  }
  return sum;
}

Value evaluate_impl(const ExplicitGame& g, const Coalition& c) {
  return g.table[c.mask()];
}

Value evaluate_impl(const ThresholdGame& g, const Coalition& c) {
  return evaluate(*g.inner, c) >= g.threshold ? 1 : 0;
}

// Deterministic grouping by syntactic key: classes ordered by least member.
template <typename Key>
TypePartition group_players(const std::vector<Key>& keys) {
  std::map<Key, std::vector<int>> groups;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    groups[keys[i]].push_back(static_cast<int>(i));
  }
  std::vector<std::vector<int>> classes;
  classes.reserve(groups.size());
  for (auto& [key, players] : groups) classes.push_back(std::move(players));
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  TypePartition out;
  for (auto& players : classes) out.classes.emplace_back(std::move(players));
  return out;
}

}  // namespace

std::vector<int> VertexPathGame::player_vertices() const {
  std::vector<int> players;
  players.reserve(static_cast<std::size_t>(vertex_count) - 2);
  for (int v = 0; v < vertex_count; ++v) {
    if (v != source && v != sink) players.push_back(v);
  }
  return players;
}

GameInstance::GameInstance(Variant data) : data_(std::move(data)) {
  std::visit([](const auto& g) { validate(g); }, data_);
}

int GameInstance::player_count() const {
  return std::visit(
      [](const auto& g) -> int {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, WeightedVotingGame>) {
          return static_cast<int>(g.weights.size());
        } else if constexpr (std::is_same_v<T, MultiWeightedVotingGame>) {
          return static_cast<int>(g.components.front().weights.size());
        } else if constexpr (std::is_same_v<T, MinimalWinningGame>) {
          return g.player_count;
        } else if constexpr (std::is_same_v<T, GraphGame> ||
                             std::is_same_v<T, MatchingGame> ||
                             std::is_same_v<T, IndependentSetGame>) {
          return g.vertex_count;
        } else if constexpr (std::is_same_v<T, SpanningConnectivityGame> ||
                             std::is_same_v<T, EdgePathGame>) {
          return static_cast<int>(g.edges.size());
        } else if constexpr (std::is_same_v<T, VertexPathGame>) {
          return g.vertex_count - 2;
        } else if constexpr (std::is_same_v<T, NetworkFlowGame>) {
          return static_cast<int>(g.arcs.size());
        } else if constexpr (std::is_same_v<T, WeightedTaskSkillGame>) {
          return static_cast<int>(g.player_skills.size());
        } else if constexpr (std::is_same_v<T, ExplicitGame>) {
          return g.player_count;
        } else {
          static_assert(std::is_same_v<T, ThresholdGame>);
          return g.inner->player_count();
        }
      },
      data_);
}

std::string class_name(const GameInstance& game) {
  return std::visit(
      [](const auto& g) -> std::string {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, WeightedVotingGame>) return "wvg";
        else if constexpr (std::is_same_v<T, MultiWeightedVotingGame>) return "mwvg";
        else if constexpr (std::is_same_v<T, MinimalWinningGame>) return "mwc";
        else if constexpr (std::is_same_v<T, GraphGame>)
          return g.positive_only ? "ggplus" : "gg";
        else if constexpr (std::is_same_v<T, SpanningConnectivityGame>) return "scg";
        else if constexpr (std::is_same_v<T, EdgePathGame>) return "epcg";
        else if constexpr (std::is_same_v<T, VertexPathGame>) return "vpcg";
        else if constexpr (std::is_same_v<T, NetworkFlowGame>) return "nfg";
        else if constexpr (std::is_same_v<T, MatchingGame>) return "matching";
        else if constexpr (std::is_same_v<T, IndependentSetGame>) return "isg";
        else if constexpr (std::is_same_v<T, WeightedTaskSkillGame>) return "wtsg";
        else if constexpr (std::is_same_v<T, ExplicitGame>) return "oracle";
        else {
          static_assert(std::is_same_v<T, ThresholdGame>);
          return "t-" + class_name(*g.inner);
        }
      },
      game.data());
}

Value evaluate(const GameInstance& game, const Coalition& coalition) {
  check_players(game, coalition);
  return std::visit(
      [&](const auto& g) { return evaluate_impl(g, coalition); }, game.data());
}

TypePartition extract_type_partition(const GameInstance& game) {
  if (const auto* wvg = game.get_if<WeightedVotingGame>()) {
    return group_players(wvg->weights);
  }
  if (const auto* mwvg = game.get_if<MultiWeightedVotingGame>()) {
    const std::size_t n = mwvg->components.front().weights.size();
    std::vector<std::vector<Value>> vectors(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& component : mwvg->components) {
        vectors[i].push_back(component.weights[i]);
      }
    }
    return group_players(vectors);
  }
  if (const auto* wtsg = game.get_if<WeightedTaskSkillGame>()) {
    std::vector<std::uint64_t> sets;
    sets.reserve(wtsg->player_skills.size());
    for (const auto& skills : wtsg->player_skills) {
      sets.push_back(skill_mask(skills));
    }
    return group_players(sets);
  }
  throw NoSyntacticTypes("class '" + class_name(game) +
                         "' has no syntactic grouping rule");
}

bool is_monotone(const GameInstance& game) {
  if (const auto* gg = game.get_if<GraphGame>()) {
    return std::all_of(gg->edges.begin(), gg->edges.end(),
                       [](const WeightedEdge& e) { return e.w >= 0; });
  }
  if (const auto* explicit_game = game.get_if<ExplicitGame>()) {
    return explicit_is_monotone(*explicit_game);
  }
  return true;
}

GameInstance make_threshold(GameInstance inner, Value threshold) {
  return GameInstance(ThresholdGame{
      std::make_shared<const GameInstance>(std::move(inner)), threshold});
}

}  // namespace optcs
