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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "optcs/games.hpp"

namespace optcs {

enum class Strategy { kAuto, kForceBrute, kForceDp, kForceApprox };
enum class Method { kExactClass, kTypedDp, kGreedy2Approx, kBruteForce };
enum class Guarantee { kOptimal, kTwoApprox };

std::string method_name(Method method);
std::string guarantee_name(Guarantee guarantee);

struct SolveStats {
  std::uint64_t oracle_queries = 0;       // queries made by the algorithm
  double elapsed_ms = 0.0;
  std::uint64_t partitions_enumerated = 0;  // brute force only
};

struct SolveResult {
  CoalitionStructure structure;
  Value welfare = 0;
  Method method = Method::kExactClass;
  Guarantee guarantee = Guarantee::kOptimal;
  SolveStats stats;
};

struct SolverOptions {
  // Player cap for brute-force enumeration (Bell-number growth).
  int brute_cap = 12;
  // Auto dispatch falls back when the type grid exceeds this many cells;
  // forced DP runs ignore it.
  std::size_t dp_cell_budget = 10'000'000;
};

// Solves OptCS by class dispatch:
//   - SCG: blocks from a maximum spanning-tree packing, leftover edges
//     merged into the last tree's block.
//   - EPCG/VPCG: blocks from maximum disjoint s-t paths, leftovers merged
//     into the last path's block.
//   - NFG, matching games, graph games without negative weights: the grand
//     coalition.
//   - ISG: all singletons.
//   - WVG/MWVG/WTSG: the typed dynamic program when the type grid fits the
//     budget; WVGs otherwise fall back to the greedy 2-approximation.
//   - Everything else: brute force up to the cap, else Unsolvable with the
//     hardness reason.
SolveResult solve_optcs(const GameInstance& game,
                        Strategy strategy = Strategy::kAuto,
                        const SolverOptions& options = {});

// Greedy prefix rule on descending capped weights: repeatedly close a block
// as soon as its weight reaches the quota. All blocks but the last are
// winning, which certifies welfare >= (blocks - 1) and optimum <=
// 2 * (blocks - 1).
SolveResult wvg_greedy_2approx(const WeightedVotingGame& game);

// Exhaustive optimum over all set partitions, enumerated as restricted
// growth strings in lexicographic order; ties resolve to the first optimum
// in enumeration order. Block values are cached per bitmask, so each
// distinct coalition is queried once.
SolveResult brute_force_optcs(const ValuationOracle& oracle,
                              int player_cap = 12);

struct TypeWitness {
  int i = 0;
  int j = 0;
  Coalition context;  // v(context + i) != v(context + j)
};

struct TypeValidation {
  bool valid = false;
  std::optional<TypeWitness> witness;
};

// Exhaustively checks that all players grouped together are strategically
// equivalent: for every in-class pair (i, j) and every C not containing
// them, v(C + i) == v(C + j). Exponential by necessity; capped.
TypeValidation validate_type_partition(const ValuationOracle& oracle,
                                       const TypePartition& candidate,
                                       int player_cap = 16);

// Visits every set partition of {0..n-1} exactly once, in lexicographic
// restricted-growth-string order. The visitor receives the label array:
// labels[p] is the block of player p.
template <typename Visitor>
void for_each_set_partition(int n, Visitor&& visit) {
  std::vector<int> labels(static_cast<std::size_t>(n > 0 ? n : 0), 0);
  auto recurse = [&](auto&& self, int p, int used) -> void {
    if (p == n) {
      visit(const_cast<const std::vector<int>&>(labels));
      return;
    }
    for (int label = 0; label <= used; ++label) {
      labels[static_cast<std::size_t>(p)] = label;
      self(self, p + 1, label == used ? used + 1 : used);
    }
  };
  recurse(recurse, 0, 0);
}

}  // namespace optcs
