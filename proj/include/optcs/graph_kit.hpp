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

#include <cstddef>
#include <span>
#include <vector>

#include "optcs/core.hpp"

namespace optcs {

// Exact-search cap for the matching and independent-set solvers.
// Surfaced in TooLarge errors; compile-time by design.
inline constexpr int kExactSearchCap = 24;

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  Value w = 0;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

struct Arc {
  int from = 0;
  int to = 0;
  Value capacity = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed flow network with integer capacities. Parallel arcs are allowed.
struct FlowNetwork {
  int vertex_count = 0;
  std::vector<Arc> arcs;
  int source = 0;
  int sink = 0;
};

struct FlowResult {
  Value value = 0;
  std::vector<Value> arc_flow;  // per input arc, 0 <= flow <= capacity
};

// Maximum integral s-t flow (Dinic). Conservation holds at every vertex
// other than source and sink.
FlowResult max_flow(const FlowNetwork& net);

enum class PathMode { kEdgeDisjoint, kVertexDisjoint };

// An s-t path given as its vertex sequence and the indices of the traversed
// input edges.
struct Path {
  std::vector<int> vertices;
  std::vector<int> edges;
};

// Maximum-cardinality set of pairwise edge-disjoint (resp. internally
// vertex-disjoint) s-t paths, extracted by flow decomposition from the
// unit-capacity (resp. split-vertex) network. Undirected graphs are modeled
// with opposing arcs sharing capacity. Returns an empty list when t is
// unreachable.
std::vector<Path> disjoint_paths(int vertex_count, std::span<const Edge> edges,
                                 bool directed, int s, int t, PathMode mode);

// Pairwise edge-disjoint spanning trees, each a list of edge indices.
struct TreePacking {
  std::vector<std::vector<int>> trees;
  int size() const { return static_cast<int>(trees.size()); }
};

// Maximum-cardinality packing of edge-disjoint spanning trees, built by
// incremental matroid-union augmentation. Throws Disconnected when the
// graph does not span all vertices.
TreePacking spanning_tree_packing(int vertex_count,
                                  std::span<const Edge> edges);

struct MatchingResult {
  Value weight = 0;
  std::vector<int> edges;  // indices of matched input edges
};

// Exact maximum-weight matching via memoized search over vertex subsets.
// Requires non-negative weights and at most kExactSearchCap non-isolated
// vertices (TooLarge otherwise).
MatchingResult max_weight_matching(int vertex_count,
                                   std::span<const WeightedEdge> edges);

struct IndependentSetResult {
  int size = 0;
  std::vector<int> vertices;
};

// Exact maximum independent set; capped at kExactSearchCap vertices
// (TooLarge otherwise).
IndependentSetResult max_independent_set(int vertex_count,
                                         std::span<const Edge> edges);

}  // namespace optcs
