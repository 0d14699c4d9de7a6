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

#include "optcs/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

namespace optcs {
namespace {

using Clock = std::chrono::steady_clock;

// Hard cap protecting the per-mask value caches.
constexpr int kMaskCacheCap = 24;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Lazily populated per-bitmask value cache over an oracle.
class MaskValueCache {
 public:
  MaskValueCache(const ValuationOracle& oracle, int n)
      : oracle_(&oracle),
        values_(std::size_t{1} << n, 0),
        known_(std::size_t{1} << n, 0) {
    known_[0] = 1;  // v(empty) == 0 by the oracle contract
  }

  Value get(std::uint32_t mask) {
    if (!known_[mask]) {
      values_[mask] = oracle_->value(Coalition::from_mask(mask));
      known_[mask] = 1;
      ++queries_;
    }
    return values_[mask];
  }

  std::uint64_t queries() const { return queries_; }

 private:
  const ValuationOracle* oracle_;
  std::vector<Value> values_;
  std::vector<char> known_;
  std::uint64_t queries_ = 0;
};

struct BruteSearch {
  MaskValueCache& cache;
  int n;
  std::vector<std::uint32_t> block_masks;
  std::vector<int> labels;
  std::vector<int> best_labels;
  Value best = std::numeric_limits<Value>::min();
  std::uint64_t leaves = 0;

  // Lexicographic restricted-growth-string descent with incremental
  // welfare: assigning player p to a block adjusts the running total by the
  // block's value delta.
  void descend(int p, int used, Value running) {
    if (p == n) {
      ++leaves;
      if (running > best) {
        best = running;
        best_labels = labels;
      }
      return;
    }
    const std::uint32_t bit = std::uint32_t{1} << p;
    for (int label = 0; label <= used; ++label) {
      const std::uint32_t old_mask =
          block_masks[static_cast<std::size_t>(label)];
      const std::uint32_t new_mask = old_mask | bit;
      const Value delta =
          cache.get(new_mask) - (old_mask ? cache.get(old_mask) : 0);
      labels[static_cast<std::size_t>(p)] = label;
      block_masks[static_cast<std::size_t>(label)] = new_mask;
      descend(p + 1, label == used ? used + 1 : used, running + delta);
      block_masks[static_cast<std::size_t>(label)] = old_mask;
    }
  }
};

SolveResult solve_by_brute_force(const GameInstance& game,
                                 const SolverOptions& options) {
  GameOracle oracle(game);
  return brute_force_optcs(oracle, options.brute_cap);
}

SolveResult solve_by_typed_dp(const GameInstance& game) {
  GameOracle raw(game);
  CountingOracle oracle(raw);
  const TypePartition types = extract_type_partition(game);
  const TypeValueTable table = build_type_value_table(oracle, types);
  auto [optimum, tables] = solve_typed_dp(table, types);
  SolveResult result;
  result.structure = reconstruct_structure(tables, types);
  result.welfare = optimum;
  result.method = Method::kTypedDp;
  result.guarantee = Guarantee::kOptimal;
  result.stats.oracle_queries = oracle.queries();
  return result;
}

SolveResult exact_result(CoalitionStructure structure, Value welfare) {
  SolveResult result;
  result.structure = std::move(structure);
  result.welfare = welfare;
  result.method = Method::kExactClass;
  result.guarantee = Guarantee::kOptimal;
  return result;
}

CoalitionStructure singletons(int n) {
  CoalitionStructure s;
  for (int p = 0; p < n; ++p) s.blocks.push_back(Coalition{p});
  return s;
}

// Partition of 0..n-1 into the given groups, with every unused element
// merged into the last group.
CoalitionStructure blocks_with_leftovers(
    int n, const std::vector<std::vector<int>>& groups) {
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const auto& g : groups) {
    for (int p : g) used[static_cast<std::size_t>(p)] = 1;
  }
  CoalitionStructure out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::vector<int> members = groups[i];
    if (i + 1 == groups.size()) {
      for (int p = 0; p < n; ++p) {
        if (!used[static_cast<std::size_t>(p)]) members.push_back(p);
      }
    }
    out.blocks.emplace_back(std::move(members));
  }
  return out;
}

SolveResult solve_scg(const SpanningConnectivityGame& g) {
  const TreePacking packing = spanning_tree_packing(g.vertex_count, g.edges);
  return exact_result(
      blocks_with_leftovers(static_cast<int>(g.edges.size()), packing.trees),
      packing.size());
}

SolveResult solve_epcg(const EdgePathGame& g) {
  const std::vector<Path> paths =
      disjoint_paths(g.vertex_count, g.edges, g.directed, g.source, g.sink,
                     PathMode::kEdgeDisjoint);
  const int n = static_cast<int>(g.edges.size());
  if (paths.empty()) {
    return exact_result(CoalitionStructure{{Coalition::full(n)}}, 0);
  }
  std::vector<std::vector<int>> groups;
  groups.reserve(paths.size());
  for (const Path& p : paths) groups.push_back(p.edges);
  return exact_result(blocks_with_leftovers(n, groups),
                      static_cast<Value>(paths.size()));
}

SolveResult solve_vpcg(const VertexPathGame& g) {
  const int n = g.vertex_count - 2;
  // A direct source-sink edge makes every coalition winning, so welfare
  // equals the block count and all singletons are optimal. The disjoint-path
  // correspondence only holds without such an edge.
  for (const Edge& e : g.edges) {
    const bool forward = e.u == g.source && e.v == g.sink;
    const bool backward = e.u == g.sink && e.v == g.source;
    if (forward || (!g.directed && backward)) {
      return exact_result(singletons(n), n);
    }
  }
  const std::vector<Path> paths = disjoint_paths(
      g.vertex_count, g.edges, g.directed, g.source, g.sink,
      PathMode::kVertexDisjoint);
  if (paths.empty()) {
    return exact_result(CoalitionStructure{{Coalition::full(n)}}, 0);
  }
  std::vector<int> player_of(static_cast<std::size_t>(g.vertex_count), -1);
  const std::vector<int> players = g.player_vertices();
  for (std::size_t i = 0; i < players.size(); ++i) {
    player_of[static_cast<std::size_t>(players[i])] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> groups;
  for (const Path& p : paths) {
    std::vector<int> group;
    for (int v : p.vertices) {
      if (v != g.source && v != g.sink) {
        group.push_back(player_of[static_cast<std::size_t>(v)]);
      }
    }
    groups.push_back(std::move(group));
  }
  return exact_result(blocks_with_leftovers(n, groups),
                      static_cast<Value>(paths.size()));
}

std::string hardness_reason(const GameInstance& game) {
  if (game.holds<MinimalWinningGame>()) {
    return "optimal structures for minimal-winning-coalition games are "
           "NP-hard to approximate within any constant factor";
  }
  if (game.holds<GraphGame>()) {
    return "optimal structures for graph games with negative weights are "
           "strongly NP-hard";
  }
  if (game.holds<ThresholdGame>()) {
    return "threshold games embed weighted voting games and are NP-hard to "
           "approximate within any factor below 2";
  }
  return "the representation offers no structure to exploit";
}

SolveResult brute_or_unsolvable(const GameInstance& game,
                                const SolverOptions& options,
                                const std::string& reason) {
  if (game.player_count() <= options.brute_cap) {
    return solve_by_brute_force(game, options);
  }
  throw Unsolvable(reason + "; brute force is capped at " +
                   std::to_string(options.brute_cap) + " players");
}

// Saturating grid size; anything near SIZE_MAX is over every sane budget.
std::size_t type_grid_cells(const TypePartition& types) {
  std::size_t cells = 1;
  for (int s : types.sizes()) {
    const auto extent = static_cast<std::size_t>(s) + 1;
    if (cells > std::numeric_limits<std::size_t>::max() / extent) {
      return std::numeric_limits<std::size_t>::max();
    }
    cells *= extent;
  }
  return cells;
}

SolveResult solve_auto(const GameInstance& game, const SolverOptions& options) {
  if (const auto* scg = game.get_if<SpanningConnectivityGame>()) {
    return solve_scg(*scg);
  }
  if (const auto* epcg = game.get_if<EdgePathGame>()) {
    return solve_epcg(*epcg);
  }
  if (const auto* vpcg = game.get_if<VertexPathGame>()) {
    return solve_vpcg(*vpcg);
  }
  if (const auto* nfg = game.get_if<NetworkFlowGame>()) {
    const Value flow =
        max_flow({nfg->vertex_count, nfg->arcs, nfg->source, nfg->sink}).value;
    return exact_result(
        CoalitionStructure{{Coalition::full(game.player_count())}}, flow);
  }
  if (const auto* matching = game.get_if<MatchingGame>()) {
    const Value weight =
        max_weight_matching(matching->vertex_count, matching->edges).weight;
    return exact_result(
        CoalitionStructure{{Coalition::full(game.player_count())}}, weight);
  }
  if (const auto* gg = game.get_if<GraphGame>()) {
    // Without negative weights, splitting only loses induced edges, so the
    // grand coalition is optimal.
    if (is_monotone(game)) {
      const Value total = std::accumulate(
          gg->edges.begin(), gg->edges.end(), Value{0},
          [](Value acc, const WeightedEdge& e) { return acc + e.w; });
      return exact_result(
          CoalitionStructure{{Coalition::full(game.player_count())}}, total);
    }
    return brute_or_unsolvable(game, options, hardness_reason(game));
  }
  if (game.holds<IndependentSetGame>()) {
    const int n = game.player_count();
    return exact_result(singletons(n), n);
  }
  if (game.holds<WeightedVotingGame>() ||
      game.holds<MultiWeightedVotingGame>() ||
      game.holds<WeightedTaskSkillGame>()) {
    const TypePartition types = extract_type_partition(game);
    if (type_grid_cells(types) <= options.dp_cell_budget) {
      return solve_by_typed_dp(game);
    }
    if (const auto* wvg = game.get_if<WeightedVotingGame>()) {
      return wvg_greedy_2approx(*wvg);
    }
    return brute_or_unsolvable(game, options,
                               "the type grid exceeds the cell budget");
  }
  return brute_or_unsolvable(game, options, hardness_reason(game));
}

void verify(const GameInstance& game, const SolveResult& result) {
  if (!result.structure.is_partition_of(game.player_count())) {
    throw Error("internal error: solver returned a non-partition");
  }
  GameOracle oracle(game);
  if (welfare(result.structure, oracle) != result.welfare) {
    throw Error("internal error: solver welfare does not recompute");
  }
}

}  // namespace

std::string method_name(Method method) {
  switch (method) {
    case Method::kExactClass: return "exact-class";
    case Method::kTypedDp: return "typed-dp";
    case Method::kGreedy2Approx: return "greedy-2approx";
    case Method::kBruteForce: return "brute-force";
  }
  return "unknown";
}

std::string guarantee_name(Guarantee guarantee) {
  return guarantee == Guarantee::kOptimal ? "optimal" : "2-approx";
}

SolveResult wvg_greedy_2approx(const WeightedVotingGame& game) {
  const auto start = Clock::now();
  const int n = static_cast<int>(game.weights.size());

  // Descending stable order over original indices; weights capped at the
  // quota (capping never changes which coalitions win).
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return game.weights[static_cast<std::size_t>(a)] >
           game.weights[static_cast<std::size_t>(b)];
  });
  std::vector<Value> capped(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    capped[static_cast<std::size_t>(i)] = std::min(
        game.weights[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])],
        game.quota);
  }
  std::vector<Value> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    suffix[static_cast<std::size_t>(i)] =
        suffix[static_cast<std::size_t>(i) + 1] +
        capped[static_cast<std::size_t>(i)];
  }

  SolveResult result;
  result.method = Method::kGreedy2Approx;
  result.guarantee = Guarantee::kTwoApprox;

  int begin = 0;
  while (begin < n) {
    int end;
    if (suffix[static_cast<std::size_t>(begin)] < game.quota) {
      end = n;  // light remainder: one final, possibly losing block
    } else {
      Value sum = 0;
      end = begin;
      while (sum < game.quota) {
        sum += capped[static_cast<std::size_t>(end)];
        ++end;
      }
    }
    std::vector<int> members(order.begin() + begin, order.begin() + end);
    Value block_weight = 0;
    for (int p : members) {
      block_weight += game.weights[static_cast<std::size_t>(p)];
    }
    if (block_weight >= game.quota) result.welfare += 1;
    result.structure.blocks.emplace_back(std::move(members));
    begin = end;
  }

  result.stats.elapsed_ms = ms_since(start);
  return result;
}

SolveResult brute_force_optcs(const ValuationOracle& oracle, int player_cap) {
  const auto start = Clock::now();
  const int n = oracle.player_count();
  if (n > player_cap) {
    throw TooManyPlayers("brute force enumerates Bell(n) partitions and is "
                         "capped at " +
                         std::to_string(player_cap) + " players");
  }
  if (n > kMaskCacheCap) {
    throw TooManyPlayers("brute-force value cache supports at most " +
                         std::to_string(kMaskCacheCap) + " players");
  }
  if (n <= 0) {
    throw InvariantError("brute force needs at least one player");
  }

  MaskValueCache cache(oracle, n);
  BruteSearch search{cache,
                     n,
                     std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0),
                     std::vector<int>(static_cast<std::size_t>(n), 0),
                     {},
                     std::numeric_limits<Value>::min(),
                     0};
  search.descend(0, 0, 0);

  SolveResult result;
  result.method = Method::kBruteForce;
  result.guarantee = Guarantee::kOptimal;
  result.welfare = search.best;
  const int block_count =
      1 + *std::max_element(search.best_labels.begin(),
                            search.best_labels.end());
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(block_count));
  for (int p = 0; p < n; ++p) {
    blocks[static_cast<std::size_t>(search.best_labels[static_cast<std::size_t>(p)])]
        .push_back(p);
  }
  for (auto& members : blocks) {
    result.structure.blocks.emplace_back(std::move(members));
  }
  result.stats.oracle_queries = cache.queries();
  result.stats.partitions_enumerated = search.leaves;
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

TypeValidation validate_type_partition(const ValuationOracle& oracle,
                                       const TypePartition& candidate,
                                       int player_cap) {
  const int n = oracle.player_count();
  if (n > player_cap || n > kMaskCacheCap) {
    throw TooManyPlayers(
        "type-partition validation checks all context coalitions and is "
        "capped at " +
        std::to_string(std::min(player_cap, kMaskCacheCap)) + " players");
  }
  candidate.validate_partition_of(n);

  MaskValueCache cache(oracle, n);
  for (const Coalition& cls : candidate.classes) {
    const auto& members = cls.members();
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const int i = members[a];
        const int j = members[b];
        std::vector<int> rest;
        rest.reserve(static_cast<std::size_t>(n) - 2);
        for (int p = 0; p < n; ++p) {
          if (p != i && p != j) rest.push_back(p);
        }
        const std::uint32_t count = std::uint32_t{1}
                                    << static_cast<std::uint32_t>(rest.size());
        // Context coalitions in ascending bitmask order; the first
        // violation is the witness.
        for (std::uint32_t sub = 0; sub < count; ++sub) {
          std::uint32_t context = 0;
          for (std::uint32_t bit = 0; bit < rest.size(); ++bit) {
            if (sub & (std::uint32_t{1} << bit)) {
              context |= std::uint32_t{1} << rest[bit];
            }
          }
          const Value with_i = cache.get(context | (std::uint32_t{1} << i));
          const Value with_j = cache.get(context | (std::uint32_t{1} << j));
          if (with_i != with_j) {
            return {false, TypeWitness{i, j, Coalition::from_mask(context)}};
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

SolveResult solve_optcs(const GameInstance& game, Strategy strategy,
                        const SolverOptions& options) {
  const auto start = Clock::now();
  SolveResult result = [&] {
    switch (strategy) {
      case Strategy::kForceBrute:
        return solve_by_brute_force(game, options);
      case Strategy::kForceDp:
        return solve_by_typed_dp(game);
      case Strategy::kForceApprox: {
        const auto* wvg = game.get_if<WeightedVotingGame>();
        if (wvg == nullptr) {
          throw Unsolvable(
              "the greedy approximation applies to weighted voting games "
              "only");
        }
        return wvg_greedy_2approx(*wvg);
      }
      case Strategy::kAuto:
        break;
    }
    return solve_auto(game, options);
  }();
  verify(game, result);
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

}  // namespace optcs
