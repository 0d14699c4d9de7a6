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

#include <optional>
#include <string>
#include <vector>

#include "optcs/games.hpp"

namespace optcs {

// A generated instance together with the provenance needed to check it: the
// reduction name, a description of the source instance, the predicted
// optimum when the generator can compute it outright, and the welfare
// relation the construction guarantees.
struct ReductionInstance {
  GameInstance game;
  std::string reduction;
  std::string source;
  std::string relation;
  std::optional<Value> predicted_welfare;
  Value target = 0;
};

// k-way number partitioning embedded as a weighted voting game with quota
// sum/k: the instance splits evenly iff the optimal welfare reaches k.
// Throws NotDivisible when k does not divide the total.
ReductionInstance gen_wvg_from_partition(const std::vector<Value>& weights,
                                         int k);

// Max-cut embedded as a graph game on two extra apex vertices: original
// edges get negated weights, both apexes connect to every original vertex
// with weight W+1, and the apexes repel each other with weight -(|V|+1)W.
// Optimal structures split the apexes and realize welfare
// |V|(W+1) - W + maxcut. The predicted optimum is filled in for graphs
// small enough to cut exhaustively.
ReductionInstance gen_gg_from_maxcut(int vertex_count,
                                     const std::vector<WeightedEdge>& edges);

// Max-clique embedded as a minimal-winning-coalition game: players are the
// 2-subsets of V, and vertex i contributes the coalition of its non-edges.
// The optimal welfare equals the clique number. Throws UniversalVertex when
// some vertex is adjacent to all others (its coalition would be empty).
ReductionInstance gen_mwc_from_clique(int vertex_count,
                                      const std::vector<Edge>& edges);

enum class ThresholdTarget { kNetworkFlow, kMatching };

// Embeds a weighted voting game as a threshold network-flow game (parallel
// unit arcs of capacity w_i) or a threshold matching game (disjoint edges
// of weight w_i over 2n vertices). Optimal welfare equals the source
// game's optimum.
ReductionInstance gen_threshold_embedding(const WeightedVotingGame& game,
                                          ThresholdTarget target);

}  // namespace optcs
