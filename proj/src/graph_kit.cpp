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

#include "optcs/graph_kit.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

namespace optcs {
namespace {

constexpr Value kInfCapacity = std::numeric_limits<Value>::max() / 4;

void check_vertex(int v, int vertex_count, const char* what) {
  if (v < 0 || v >= vertex_count) {
    throw InvariantError(std::string(what) + " vertex index out of range");
  }
}

// Dinic with paired residual arcs: internal arcs 2i and 2i+1 are mutual
// reverses. An undirected edge is modeled as one pair with capacity on both
// sides, so the pair's net flow is bounded by the single shared capacity.
class Dinic {
 public:
  Dinic(int n, int s, int t) : adj_(static_cast<std::size_t>(n)), s_(s), t_(t) {}

  int add_arc(int from, int to, Value cap, Value back_cap) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, cap});
    arcs_.push_back({from, back_cap});
    adj_[static_cast<std::size_t>(from)].push_back(id);
    adj_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  Value residual(int internal_id) const {
    return arcs_[static_cast<std::size_t>(internal_id)].cap;
  }

  Value run() {
    Value total = 0;
    while (bfs()) {
      iter_.assign(adj_.size(), 0);
      while (Value pushed = dfs(s_, kInfCapacity)) total += pushed;
    }
    return total;
  }

 private:
  struct InternalArc {
    int to;
    Value cap;
  };

  bool bfs() {
    level_.assign(adj_.size(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s_)] = 0;
    q.push(s_);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int id : adj_[static_cast<std::size_t>(v)]) {
        const InternalArc& a = arcs_[static_cast<std::size_t>(id)];
        if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
          level_[static_cast<std::size_t>(a.to)] =
              level_[static_cast<std::size_t>(v)] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t_)] >= 0;
  }

  Value dfs(int v, Value limit) {
    if (v == t_) return limit;
    auto& it = iter_[static_cast<std::size_t>(v)];
    for (; it < adj_[static_cast<std::size_t>(v)].size(); ++it) {
      const int id = adj_[static_cast<std::size_t>(v)][it];
      InternalArc& a = arcs_[static_cast<std::size_t>(id)];
      if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] !=
                            level_[static_cast<std::size_t>(v)] + 1) {
        continue;
      }
      const Value pushed = dfs(a.to, std::min(limit, a.cap));
      if (pushed > 0) {
        a.cap -= pushed;
        arcs_[static_cast<std::size_t>(id ^ 1)].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<InternalArc> arcs_;
  std::vector<std::vector<int>> adj_;
  int s_;
  int t_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

// Arc of the decomposition multigraph: remaining units of positive flow,
// tagged with the input edge it came from (-1 for split-vertex arcs).
struct FlowArc {
  int to;
  Value remaining;
  int edge_id;
};

// Splits an integral flow into `value` s-t paths by repeated BFS through
// positive-flow arcs; leftover flow cycles are simply never visited.
std::vector<Path> decompose(int node_count, int s, int t, Value value,
                            std::vector<std::vector<FlowArc>>& flow_adj,
                            const std::function<int(int)>& node_to_vertex) {
  std::vector<Path> paths;
  for (Value iteration = 0; iteration < value; ++iteration) {
    std::vector<int> parent_node(static_cast<std::size_t>(node_count), -1);
    std::vector<int> parent_arc(static_cast<std::size_t>(node_count), -1);
    std::deque<int> q{s};
    std::vector<char> seen(static_cast<std::size_t>(node_count), 0);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      if (v == t) break;
      auto& out = flow_adj[static_cast<std::size_t>(v)];
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].remaining <= 0) continue;
        const int to = out[i].to;
        if (seen[static_cast<std::size_t>(to)]) continue;
        seen[static_cast<std::size_t>(to)] = 1;
        parent_node[static_cast<std::size_t>(to)] = v;
        parent_arc[static_cast<std::size_t>(to)] = static_cast<int>(i);
        q.push_back(to);
      }
    }
    if (!seen[static_cast<std::size_t>(t)]) {
      throw Error("flow decomposition lost track of a unit of flow");
    }
    Path path;
    std::vector<std::pair<int, int>> hops;  // (node, arc index into parent)
    for (int v = t; v != s; v = parent_node[static_cast<std::size_t>(v)]) {
      hops.emplace_back(v, parent_arc[static_cast<std::size_t>(v)]);
    }
    std::reverse(hops.begin(), hops.end());
    path.vertices.push_back(node_to_vertex(s));
    for (const auto& [node, arc_index] : hops) {
      const int prev = parent_node[static_cast<std::size_t>(node)];
      FlowArc& arc = flow_adj[static_cast<std::size_t>(prev)]
                             [static_cast<std::size_t>(arc_index)];
      arc.remaining -= 1;
      const int mapped = node_to_vertex(node);
      if (path.vertices.back() != mapped) path.vertices.push_back(mapped);
      if (arc.edge_id >= 0) path.edges.push_back(arc.edge_id);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

// Disjoint-set forest.
class Dsu {
 public:
  explicit Dsu(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  if (net.source == net.sink) {
    throw InvariantError("flow network source equals sink");
  }
  check_vertex(net.source, net.vertex_count, "source");
  check_vertex(net.sink, net.vertex_count, "sink");
  Dinic dinic(net.vertex_count, net.source, net.sink);
  std::vector<int> internal_id;
  internal_id.reserve(net.arcs.size());
  for (const Arc& a : net.arcs) {
    check_vertex(a.from, net.vertex_count, "arc");
    check_vertex(a.to, net.vertex_count, "arc");
    if (a.capacity < 0) throw InvariantError("negative arc capacity");
    if (a.from == a.to) throw InvariantError("self-loop arc in flow network");
    internal_id.push_back(dinic.add_arc(a.from, a.to, a.capacity, 0));
  }
  FlowResult result;
  result.value = dinic.run();
  result.arc_flow.reserve(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    result.arc_flow.push_back(net.arcs[i].capacity -
                              dinic.residual(internal_id[i]));
  }
  return result;
}

std::vector<Path> disjoint_paths(int vertex_count, std::span<const Edge> edges,
                                 bool directed, int s, int t, PathMode mode) {
  if (s == t) throw InvariantError("path endpoints coincide");
  check_vertex(s, vertex_count, "source");
  check_vertex(t, vertex_count, "sink");
  for (const Edge& e : edges) {
    check_vertex(e.u, vertex_count, "edge");
    check_vertex(e.v, vertex_count, "edge");
    if (e.u == e.v) throw InvariantError("self loop");
  }

  if (mode == PathMode::kEdgeDisjoint) {
    Dinic dinic(vertex_count, s, t);
    std::vector<int> ids;
    ids.reserve(edges.size());
    for (const Edge& e : edges) {
      ids.push_back(dinic.add_arc(e.u, e.v, 1, directed ? 0 : 1));
    }
    const Value value = dinic.run();

    std::vector<std::vector<FlowArc>> flow_adj(
        static_cast<std::size_t>(vertex_count));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Value net_forward = 1 - dinic.residual(ids[i]);
      if (net_forward > 0) {
        flow_adj[static_cast<std::size_t>(edges[i].u)].push_back(
            {edges[i].v, net_forward, static_cast<int>(i)});
      } else if (!directed && net_forward < 0) {
        flow_adj[static_cast<std::size_t>(edges[i].v)].push_back(
            {edges[i].u, -net_forward, static_cast<int>(i)});
      }
    }
    return decompose(vertex_count, s, t, value, flow_adj,
                     [](int node) { return node; });
  }

  // Vertex mode: node 2v is the "in" copy, 2v+1 the "out" copy; internal
  // unit arcs only for vertices other than s and t. The walk starts at
  // s-out and ends at t-in.
  const int node_count = 2 * vertex_count;
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  Dinic dinic(node_count, source, sink);
  struct Added {
    int id;
    int from_node;
    int to_node;
    int edge_id;
  };
  std::vector<Added> added;
  for (int v = 0; v < vertex_count; ++v) {
    if (v == s || v == t) continue;
    added.push_back({dinic.add_arc(2 * v, 2 * v + 1, 1, 0), 2 * v, 2 * v + 1, -1});
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    added.push_back({dinic.add_arc(2 * e.u + 1, 2 * e.v, 1, 0), 2 * e.u + 1,
                     2 * e.v, static_cast<int>(i)});
    if (!directed) {
      added.push_back({dinic.add_arc(2 * e.v + 1, 2 * e.u, 1, 0), 2 * e.v + 1,
                       2 * e.u, static_cast<int>(i)});
    }
  }
  const Value value = dinic.run();

  std::vector<std::vector<FlowArc>> flow_adj(static_cast<std::size_t>(node_count));
  for (const Added& a : added) {
    const Value flow = 1 - dinic.residual(a.id);
    if (flow > 0) {
      flow_adj[static_cast<std::size_t>(a.from_node)].push_back(
          {a.to_node, flow, a.edge_id});
    }
  }
  return decompose(node_count, source, sink, value, flow_adj,
                   [](int node) { return node / 2; });
}

namespace {

// State of the matroid-union augmentation: every assigned edge lives in
// exactly one forest, and each forest is acyclic.
class PackingState {
 public:
  PackingState(int vertex_count, std::span<const Edge> edges)
      : vertex_count_(vertex_count),
        edges_(edges),
        owner_(edges.size(), -1) {}

  void add_forest() { forests_.push_back({}); }
  int forest_count() const { return static_cast<int>(forests_.size()); }
  int assigned() const { return assigned_; }
  bool edge_assigned(int id) const {
    return owner_[static_cast<std::size_t>(id)] >= 0;
  }
  const std::vector<std::vector<int>>& forests() const { return forests_; }

  // Tries to bring unassigned edge z into the union by a shortest chain of
  // exchanges. Returns true when the assignment grew.
  bool augment(int z) {
    rebuild();
    const int k = forest_count();
    std::vector<int> parent(edges_.size(), -2);  // -2 unvisited, -1 root
    std::deque<int> queue{z};
    parent[static_cast<std::size_t>(z)] = -1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int f = 0; f < k; ++f) {
        if (owner_[static_cast<std::size_t>(x)] == f) continue;
        const Edge& e = edges_[static_cast<std::size_t>(x)];
        if (dsu_[static_cast<std::size_t>(f)].find(e.u) !=
            dsu_[static_cast<std::size_t>(f)].find(e.v)) {
          apply_chain(x, f, parent);
          ++assigned_;
          return true;
        }
        for (int y : forest_path(f, e.u, e.v)) {
          if (parent[static_cast<std::size_t>(y)] == -2) {
            parent[static_cast<std::size_t>(y)] = x;
            queue.push_back(y);
          }
        }
      }
    }
    return false;
  }

 private:
  void rebuild() {
    dsu_.clear();
    adj_.assign(forests_.size(),
                std::vector<std::vector<std::pair<int, int>>>());
    for (std::size_t f = 0; f < forests_.size(); ++f) {
      dsu_.emplace_back(vertex_count_);
      adj_[f].assign(static_cast<std::size_t>(vertex_count_), {});
      for (int id : forests_[f]) {
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        dsu_[f].unite(e.u, e.v);
        adj_[f][static_cast<std::size_t>(e.u)].emplace_back(e.v, id);
        adj_[f][static_cast<std::size_t>(e.v)].emplace_back(e.u, id);
      }
    }
  }

  // Edge ids on the unique tree path between a and b in forest f; empty if
  // the endpoints are in different components.
  std::vector<int> forest_path(int f, int a, int b) {
    std::vector<int> prev_vertex(static_cast<std::size_t>(vertex_count_), -1);
    std::vector<int> prev_edge(static_cast<std::size_t>(vertex_count_), -1);
    std::deque<int> q{a};
    prev_vertex[static_cast<std::size_t>(a)] = a;
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      if (v == b) break;
      for (const auto& [to, id] : adj_[static_cast<std::size_t>(f)]
                                      [static_cast<std::size_t>(v)]) {
        if (prev_vertex[static_cast<std::size_t>(to)] >= 0) continue;
        prev_vertex[static_cast<std::size_t>(to)] = v;
        prev_edge[static_cast<std::size_t>(to)] = id;
        q.push_back(to);
      }
    }
    std::vector<int> path;
    if (prev_vertex[static_cast<std::size_t>(b)] < 0) return path;
    for (int v = b; v != a; v = prev_vertex[static_cast<std::size_t>(v)]) {
      path.push_back(prev_edge[static_cast<std::size_t>(v)]);
    }
    return path;
  }

  void apply_chain(int x, int into, const std::vector<int>& parent) {
    int cur = x;
    while (true) {
      const int old_owner = owner_[static_cast<std::size_t>(cur)];
      move_edge(cur, into);
      if (parent[static_cast<std::size_t>(cur)] == -1) break;
      cur = parent[static_cast<std::size_t>(cur)];
      into = old_owner;
    }
  }

  void move_edge(int id, int into) {
    const int from = owner_[static_cast<std::size_t>(id)];
    if (from >= 0) {
      auto& list = forests_[static_cast<std::size_t>(from)];
      list.erase(std::find(list.begin(), list.end(), id));
    }
    forests_[static_cast<std::size_t>(into)].push_back(id);
    owner_[static_cast<std::size_t>(id)] = into;
  }

  int vertex_count_;
  std::span<const Edge> edges_;
  std::vector<int> owner_;
  std::vector<std::vector<int>> forests_;
  int assigned_ = 0;
  std::vector<Dsu> dsu_;
  std::vector<std::vector<std::vector<std::pair<int, int>>>> adj_;
};

bool forest_is_spanning_tree(int vertex_count, std::span<const Edge> edges,
                             const std::vector<int>& tree) {
  if (static_cast<int>(tree.size()) != vertex_count - 1) return false;
  Dsu dsu(vertex_count);
  for (int id : tree) {
    const Edge& e = edges[static_cast<std::size_t>(id)];
    if (!dsu.unite(e.u, e.v)) return false;
  }
  return true;
}

}  // namespace

TreePacking spanning_tree_packing(int vertex_count,
                                  std::span<const Edge> edges) {
  if (vertex_count < 2) {
    throw InvariantError("spanning-tree packing needs at least two vertices");
  }
  Dsu connectivity(vertex_count);
  int components = vertex_count;
  for (const Edge& e : edges) {
    check_vertex(e.u, vertex_count, "edge");
    check_vertex(e.v, vertex_count, "edge");
    if (e.u == e.v) throw InvariantError("self loop");
    if (connectivity.unite(e.u, e.v)) --components;
  }
  if (components != 1) throw Disconnected("graph is not connected");

  PackingState state(vertex_count, edges);
  TreePacking packing;
  while (true) {
    state.add_forest();
    // Elements already in the union stay there; one greedy pass over the
    // rest reaches the maximum because the union of graphic matroids is
    // itself a matroid.
    for (std::size_t z = 0; z < edges.size(); ++z) {
      if (!state.edge_assigned(static_cast<int>(z))) {
        state.augment(static_cast<int>(z));
      }
    }
    if (state.assigned() != state.forest_count() * (vertex_count - 1)) {
      break;
    }
    packing.trees = state.forests();
    for (auto& tree : packing.trees) std::sort(tree.begin(), tree.end());
    for (const auto& tree : packing.trees) {
      if (!forest_is_spanning_tree(vertex_count, edges, tree)) {
        throw Error("internal error: packing produced a non-tree");
      }
    }
  }
  return packing;
}

MatchingResult max_weight_matching(int vertex_count,
                                   std::span<const WeightedEdge> edges) {
  for (const WeightedEdge& e : edges) {
    check_vertex(e.u, vertex_count, "edge");
    check_vertex(e.v, vertex_count, "edge");
    if (e.u == e.v) throw InvariantError("self loop");
    if (e.w < 0) throw InvariantError("negative matching weight");
  }
  // Isolated vertices can never be matched; drop them before the cap check.
  std::vector<int> compact(static_cast<std::size_t>(vertex_count), -1);
  int m = 0;
  for (const WeightedEdge& e : edges) {
    if (compact[static_cast<std::size_t>(e.u)] < 0) {
      compact[static_cast<std::size_t>(e.u)] = m++;
    }
    if (compact[static_cast<std::size_t>(e.v)] < 0) {
      compact[static_cast<std::size_t>(e.v)] = m++;
    }
  }
  if (m > kExactSearchCap) {
    throw TooLarge("maximum-weight matching exact search capped at " +
                   std::to_string(kExactSearchCap) +
                   " non-isolated vertices");
  }
  if (m == 0) return {};

  // Keep only the heaviest parallel edge per vertex pair.
  std::vector<Value> weight(static_cast<std::size_t>(m * m), -1);
  std::vector<int> which(static_cast<std::size_t>(m * m), -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int a = compact[static_cast<std::size_t>(edges[i].u)];
    const int b = compact[static_cast<std::size_t>(edges[i].v)];
    const auto idx = static_cast<std::size_t>(a * m + b);
    const auto idx2 = static_cast<std::size_t>(b * m + a);
    if (edges[i].w > weight[idx]) {
      weight[idx] = weight[idx2] = edges[i].w;
      which[idx] = which[idx2] = static_cast<int>(i);
    }
  }

  const std::size_t masks = std::size_t{1} << m;
  std::vector<Value> dp(masks, 0);
  for (std::size_t mask = 1; mask < masks; ++mask) {
    const int v = std::countr_zero(mask);
    const std::size_t rest = mask & (mask - 1);
    Value best = dp[rest];
    for (std::size_t r = rest; r != 0; r &= r - 1) {
      const int u = std::countr_zero(r);
      const Value w = weight[static_cast<std::size_t>(v * m + u)];
      if (w >= 0) {
        best = std::max(best, w + dp[mask ^ (std::size_t{1} << v) ^
                                     (std::size_t{1} << u)]);
      }
    }
    dp[mask] = best;
  }

  MatchingResult result;
  result.weight = dp[masks - 1];
  std::size_t mask = masks - 1;
  while (mask != 0) {
    const int v = std::countr_zero(mask);
    const std::size_t rest = mask & (mask - 1);
    if (dp[mask] == dp[rest]) {
      mask = rest;
      continue;
    }
    for (std::size_t r = rest; r != 0; r &= r - 1) {
      const int u = std::countr_zero(r);
      const Value w = weight[static_cast<std::size_t>(v * m + u)];
      if (w >= 0 && dp[mask] == w + dp[mask ^ (std::size_t{1} << v) ^
                                       (std::size_t{1} << u)]) {
        result.edges.push_back(which[static_cast<std::size_t>(v * m + u)]);
        mask ^= (std::size_t{1} << v) | (std::size_t{1} << u);
        break;
      }
    }
  }
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

namespace {

struct MisSearch {
  std::span<const std::uint32_t> neighbors;

  // Returns (size, chosen vertex mask) for the induced subgraph on `mask`.
  std::pair<int, std::uint32_t> run(std::uint32_t mask) const {
    if (mask == 0) return {0, 0};
    // Branch on a maximum-degree vertex; if everything is isolated, take it
    // all.
    int pick = -1;
    int pick_degree = -1;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(neighbors[static_cast<std::size_t>(v)] & mask);
      if (d > pick_degree) {
        pick_degree = d;
        pick = v;
      }
    }
    if (pick_degree == 0) {
      return {std::popcount(mask), mask};
    }
    const std::uint32_t bit = std::uint32_t{1} << pick;
    auto excluded = run(mask & ~bit);
    auto included =
        run(mask & ~(neighbors[static_cast<std::size_t>(pick)] | bit));
    included.first += 1;
    included.second |= bit;
    return included.first >= excluded.first ? included : excluded;
  }
};

}  // namespace

IndependentSetResult max_independent_set(int vertex_count,
                                         std::span<const Edge> edges) {
  if (vertex_count > kExactSearchCap) {
    throw TooLarge("independent-set exact search capped at " +
                   std::to_string(kExactSearchCap) + " vertices");
  }
  std::vector<std::uint32_t> neighbors(static_cast<std::size_t>(vertex_count),
                                       0);
  for (const Edge& e : edges) {
    check_vertex(e.u, vertex_count, "edge");
    check_vertex(e.v, vertex_count, "edge");
    if (e.u == e.v) throw InvariantError("self loop");
    neighbors[static_cast<std::size_t>(e.u)] |= std::uint32_t{1} << e.v;
    neighbors[static_cast<std::size_t>(e.v)] |= std::uint32_t{1} << e.u;
  }
  const std::uint32_t all =
      vertex_count == 32 ? ~std::uint32_t{0}
                         : (std::uint32_t{1} << vertex_count) - 1;
  const auto [size, chosen] = MisSearch{neighbors}.run(all);
  IndependentSetResult result;
  result.size = size;
  for (std::uint32_t rest = chosen; rest != 0; rest &= rest - 1) {
    result.vertices.push_back(std::countr_zero(rest));
  }
  return result;
}

}  // namespace optcs
