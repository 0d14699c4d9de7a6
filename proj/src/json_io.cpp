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

#include "optcs/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace optcs {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

Value get_value(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw SchemaError(std::string("field '") + key +
                      "' must be an integer");
  }
  return v.get<Value>();
}

int get_int(const Json& j, const char* key) {
  const Value v = get_value(j, key);
  if (v < INT32_MIN || v > INT32_MAX) {
    throw SchemaError(std::string("field '") + key + "' out of range");
  }
  return static_cast<int>(v);
}

bool get_bool_or(const Json& j, const char* key, bool fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) {
    throw SchemaError(std::string("field '") + key + "' must be a boolean");
  }
  return j.at(key).get<bool>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) {
    throw SchemaError(std::string("field '") + key + "' must be an array");
  }
  return v;
}

Value element_value(const Json& element, const char* what) {
  if (!element.is_number_integer()) {
    throw SchemaError(std::string(what) + " must be integers");
  }
  return element.get<Value>();
}

int element_int(const Json& element, const char* what) {
  const Value v = element_value(element, what);
  if (v < INT32_MIN || v > INT32_MAX) {
    throw SchemaError(std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

std::vector<Value> value_list(const Json& j, const char* key) {
  std::vector<Value> out;
  for (const Json& e : array_field(j, key)) {
    out.push_back(element_value(e, key));
  }
  return out;
}

std::vector<Edge> edge_pairs(const Json& j, const char* key) {
  std::vector<Edge> out;
  for (const Json& e : array_field(j, key)) {
    if (!e.is_array() || e.size() != 2) {
      throw SchemaError(std::string(key) + " entries must be [u,v] pairs");
    }
    out.push_back({element_int(e[0], key), element_int(e[1], key)});
  }
  return out;
}

std::vector<WeightedEdge> edge_triples(const Json& j, const char* key) {
  std::vector<WeightedEdge> out;
  for (const Json& e : array_field(j, key)) {
    if (!e.is_array() || e.size() != 3) {
      throw SchemaError(std::string(key) + " entries must be [u,v,w] triples");
    }
    out.push_back({element_int(e[0], key), element_int(e[1], key),
                   element_value(e[2], key)});
  }
  return out;
}

int inferred_vertex_count(const Json& j, int minimum) {
  if (j.is_object() && j.contains("n_vertices")) {
    return get_int(j, "n_vertices");
  }
  return minimum;
}

template <typename EdgeT>
int max_endpoint(const std::vector<EdgeT>& edges, int seed) {
  int m = seed;
  for (const auto& e : edges) m = std::max({m, e.u, e.v});
  return m;
}

WeightedVotingGame parse_wvg_payload(const Json& j) {
  return {get_value(j, "quota"), value_list(j, "weights")};
}

Coalition parse_member_list(const Json& j, const char* what) {
  if (!j.is_array()) {
    throw SchemaError(std::string(what) + " must be an array of players");
  }
  std::vector<int> members;
  for (const Json& e : j) members.push_back(element_int(e, what));
  return Coalition(std::move(members));
}

std::string member_key(const Coalition& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.members().size(); ++i) {
    if (i != 0) os << ',';
    os << c.members()[i];
  }
  return os.str();
}

std::uint64_t parse_member_key(const std::string& key, int n) {
  if (key.empty()) return 0;
  std::uint64_t mask = 0;
  std::istringstream is(key);
  std::string token;
  while (std::getline(is, token, ',')) {
    std::size_t used = 0;
    int p = -1;
    try {
      p = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw SchemaError("bad table key '" + key + "'");
    }
    if (used != token.size() || p < 0 || p >= n) {
      throw SchemaError("bad table key '" + key + "'");
    }
    const std::uint64_t bit = std::uint64_t{1} << p;
    if (mask & bit) throw SchemaError("duplicate player in key '" + key + "'");
    mask |= bit;
  }
  return mask;
}

ExplicitGame parse_oracle_payload(const Json& j) {
  const int n = get_int(j, "n");
  if (n < 1 || n > 24) {
    throw InvariantError("explicit table supports 1 to 24 players");
  }
  const Json& table = field(j, "table");
  if (!table.is_object()) {
    throw SchemaError("field 'table' must be an object");
  }
  ExplicitGame g{n, std::vector<Value>(std::size_t{1} << n, 0)};
  std::vector<char> present(g.table.size(), 0);
  present[0] = 1;
  for (const auto& [key, value] : table.items()) {
    const std::uint64_t mask = parse_member_key(key, n);
    if (!value.is_number_integer()) {
      throw SchemaError("table values must be integers");
    }
    if (mask == 0 && value.get<Value>() != 0) {
      throw InvariantError("the empty coalition must have value 0");
    }
    g.table[mask] = value.get<Value>();
    present[mask] = 1;
  }
  if (std::find(present.begin(), present.end(), 0) != present.end()) {
    throw InvariantError("explicit table must list every nonempty coalition");
  }
  return g;
}

WeightedTaskSkillGame parse_wtsg_payload(const Json& j) {
  WeightedTaskSkillGame g;
  for (const Json& s : array_field(j, "skills")) {
    if (!s.is_string()) throw SchemaError("skills must be strings");
    g.skill_names.push_back(s.get<std::string>());
  }
  std::map<std::string, int> skill_id;
  for (std::size_t i = 0; i < g.skill_names.size(); ++i) {
    if (!skill_id.emplace(g.skill_names[i], static_cast<int>(i)).second) {
      throw InvariantError("duplicate skill name '" + g.skill_names[i] + "'");
    }
  }
  auto lookup = [&](const Json& s) {
    if (!s.is_string()) throw SchemaError("skill references must be strings");
    const auto it = skill_id.find(s.get<std::string>());
    if (it == skill_id.end()) {
      throw SchemaError("unknown skill '" + s.get<std::string>() + "'");
    }
    return it->second;
  };
  for (const Json& p : array_field(j, "players")) {
    if (!p.is_array()) throw SchemaError("players must be skill lists");
    std::vector<int> skills;
    for (const Json& s : p) skills.push_back(lookup(s));
    g.player_skills.push_back(std::move(skills));
  }
  for (const Json& t : array_field(j, "tasks")) {
    SkillTask task;
    for (const Json& s : array_field(t, "requires")) {
      task.required_skills.push_back(lookup(s));
    }
    task.weight = get_value(t, "weight");
    g.tasks.push_back(std::move(task));
  }
  return g;
}

Json edges_json(const std::vector<Edge>& edges, bool normalize) {
  Json out = Json::array();
  for (Edge e : edges) {
    if (normalize && e.u > e.v) std::swap(e.u, e.v);
    out.push_back(Json::array({e.u, e.v}));
  }
  return out;
}

Json edges_json(const std::vector<WeightedEdge>& edges, bool normalize) {
  Json out = Json::array();
  for (WeightedEdge e : edges) {
    if (normalize && e.u > e.v) std::swap(e.u, e.v);
    out.push_back(Json::array({e.u, e.v, e.w}));
  }
  return out;
}

Json sorted_edges_json(std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  return edges_json(edges, false);
}

Json sorted_edges_json(std::vector<WeightedEdge> edges) {
  for (WeightedEdge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return std::tuple(a.u, a.v, a.w) < std::tuple(b.u, b.v, b.w);
            });
  return edges_json(edges, false);
}

Json serialize_payload(const GameInstance& game) {
  Json out;
  if (const auto* g = game.get_if<WeightedVotingGame>()) {
    out["class"] = "wvg";
    out["quota"] = g->quota;
    out["weights"] = g->weights;
  } else if (const auto* g = game.get_if<MultiWeightedVotingGame>()) {
    out["class"] = "mwvg";
    Json comps = Json::array();
    for (const auto& c : g->components) {
      comps.push_back(Json{{"quota", c.quota}, {"weights", c.weights}});
    }
    out["components"] = comps;
  } else if (const auto* g = game.get_if<MinimalWinningGame>()) {
    out["class"] = "mwc";
    out["n"] = g->player_count;
    std::vector<std::vector<int>> mwc;
    for (const Coalition& c : g->minimal_winning) mwc.push_back(c.members());
    std::sort(mwc.begin(), mwc.end());
    out["mwc"] = mwc;
  } else if (const auto* g = game.get_if<GraphGame>()) {
    out["class"] = g->positive_only ? "ggplus" : "gg";
    out["n"] = g->vertex_count;
    out["edges"] = sorted_edges_json(g->edges);
  } else if (const auto* g = game.get_if<SpanningConnectivityGame>()) {
    out["class"] = "scg";
    out["n_vertices"] = g->vertex_count;
    out["edges"] = edges_json(g->edges, true);
  } else if (const auto* g = game.get_if<EdgePathGame>()) {
    out["class"] = "epcg";
    out["n_vertices"] = g->vertex_count;
    out["s"] = g->source;
    out["t"] = g->sink;
    out["directed"] = g->directed;
    out["edges"] = edges_json(g->edges, !g->directed);
  } else if (const auto* g = game.get_if<VertexPathGame>()) {
    out["class"] = "vpcg";
    out["n_vertices"] = g->vertex_count;
    out["s"] = g->source;
    out["t"] = g->sink;
    out["directed"] = g->directed;
    if (g->directed) {
      std::vector<Edge> edges = g->edges;
      std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
      });
      out["edges"] = edges_json(edges, false);
    } else {
      out["edges"] = sorted_edges_json(g->edges);
    }
  } else if (const auto* g = game.get_if<NetworkFlowGame>()) {
    out["class"] = "nfg";
    out["n_vertices"] = g->vertex_count;
    out["s"] = g->source;
    out["t"] = g->sink;
    Json arcs = Json::array();
    for (const Arc& a : g->arcs) {
      arcs.push_back(Json::array({a.from, a.to, a.capacity}));
    }
    out["arcs"] = arcs;
  } else if (const auto* g = game.get_if<MatchingGame>()) {
    out["class"] = "matching";
    out["n"] = g->vertex_count;
    out["edges"] = sorted_edges_json(g->edges);
  } else if (const auto* g = game.get_if<IndependentSetGame>()) {
    out["class"] = "isg";
    out["n"] = g->vertex_count;
    out["edges"] = sorted_edges_json(g->edges);
  } else if (const auto* g = game.get_if<WeightedTaskSkillGame>()) {
    out["class"] = "wtsg";
    // Canonical skill order is lexicographic by name.
    std::vector<int> by_name(g->skill_names.size());
    for (std::size_t i = 0; i < by_name.size(); ++i) {
      by_name[i] = static_cast<int>(i);
    }
    std::sort(by_name.begin(), by_name.end(), [&](int a, int b) {
      return g->skill_names[static_cast<std::size_t>(a)] <
             g->skill_names[static_cast<std::size_t>(b)];
    });
    Json skills = Json::array();
    for (int id : by_name) {
      skills.push_back(g->skill_names[static_cast<std::size_t>(id)]);
    }
    out["skills"] = skills;
    auto name_list = [&](const std::vector<int>& ids) {
      std::vector<std::string> names;
      for (int id : ids) {
        names.push_back(g->skill_names[static_cast<std::size_t>(id)]);
      }
      std::sort(names.begin(), names.end());
      return names;
    };
    Json players = Json::array();
    for (const auto& skills_of : g->player_skills) {
      players.push_back(name_list(skills_of));
    }
    out["players"] = players;
    std::vector<std::pair<std::vector<std::string>, Value>> tasks;
    for (const SkillTask& t : g->tasks) {
      tasks.emplace_back(name_list(t.required_skills), t.weight);
    }
    std::sort(tasks.begin(), tasks.end());
    Json tasks_json = Json::array();
    for (const auto& [requires_names, weight] : tasks) {
      tasks_json.push_back(
          Json{{"requires", requires_names}, {"weight", weight}});
    }
    out["tasks"] = tasks_json;
  } else if (const auto* g = game.get_if<ExplicitGame>()) {
    out["class"] = "oracle";
    out["n"] = g->player_count;
    Json table = Json::object();
    for (std::uint64_t mask = 1; mask < g->table.size(); ++mask) {
      table[member_key(Coalition::from_mask(mask))] = g->table[mask];
    }
    out["table"] = table;
  } else {
    const auto* wrapper = game.get_if<ThresholdGame>();
    out = serialize_payload(*wrapper->inner);
    if (out.contains("threshold")) {
      throw InvariantError("nested thresholds have no document form");
    }
    out["threshold"] = wrapper->threshold;
  }
  return out;
}

}  // namespace

GameInstance parse_instance(const Json& document) {
  if (!document.is_object()) {
    throw SchemaError("instance document must be a JSON object");
  }
  const Json& cls_field = field(document, "class");
  if (!cls_field.is_string()) {
    throw SchemaError("field 'class' must be a string");
  }
  const std::string cls = cls_field.get<std::string>();

  GameInstance::Variant payload = [&]() -> GameInstance::Variant {
    if (cls == "wvg") {
      return parse_wvg_payload(document);
    }
    if (cls == "mwvg") {
      MultiWeightedVotingGame g;
      for (const Json& c : array_field(document, "components")) {
        g.components.push_back(parse_wvg_payload(c));
      }
      return g;
    }
    if (cls == "mwc") {
      MinimalWinningGame g{get_int(document, "n"), {}};
      for (const Json& c : array_field(document, "mwc")) {
        g.minimal_winning.push_back(parse_member_list(c, "mwc"));
      }
      return g;
    }
    if (cls == "gg" || cls == "ggplus") {
      return GraphGame{get_int(document, "n"),
                       edge_triples(document, "edges"), cls == "ggplus"};
    }
    if (cls == "scg") {
      auto edges = edge_pairs(document, "edges");
      return SpanningConnectivityGame{
          inferred_vertex_count(document, max_endpoint(edges, -1) + 1),
          std::move(edges)};
    }
    if (cls == "epcg" || cls == "vpcg") {
      auto edges = edge_pairs(document, "edges");
      const int s = get_int(document, "s");
      const int t = get_int(document, "t");
      const int n = inferred_vertex_count(
          document, max_endpoint(edges, std::max(s, t)) + 1);
      const bool directed = get_bool_or(document, "directed", false);
      if (cls == "epcg") {
        return EdgePathGame{n, s, t, directed, std::move(edges)};
      }
      return VertexPathGame{n, s, t, directed, std::move(edges)};
    }
    if (cls == "nfg") {
      NetworkFlowGame g;
      g.source = get_int(document, "s");
      g.sink = get_int(document, "t");
      for (const Json& a : array_field(document, "arcs")) {
        if (!a.is_array() || a.size() != 3) {
          throw SchemaError("arcs entries must be [from,to,capacity]");
        }
        g.arcs.push_back({element_int(a[0], "arcs"), element_int(a[1], "arcs"),
                          element_value(a[2], "arcs")});
      }
      int m = std::max(g.source, g.sink);
      for (const Arc& a : g.arcs) m = std::max({m, a.from, a.to});
      g.vertex_count = inferred_vertex_count(document, m + 1);
      return g;
    }
    if (cls == "matching") {
      return MatchingGame{get_int(document, "n"),
                          edge_triples(document, "edges")};
    }
    if (cls == "isg") {
      return IndependentSetGame{get_int(document, "n"),
                                edge_pairs(document, "edges")};
    }
    if (cls == "wtsg") {
      return parse_wtsg_payload(document);
    }
    if (cls == "oracle") {
      return parse_oracle_payload(document);
    }
    throw SchemaError("unknown class '" + cls + "'");
  }();

  GameInstance inner{std::move(payload)};
  if (document.contains("threshold")) {
    return make_threshold(std::move(inner), get_value(document, "threshold"));
  }
  return inner;
}

GameInstance parse_instance_text(const std::string& text) {
  Json document = Json::parse(text, nullptr, false);
  if (document.is_discarded()) {
    throw SchemaError("input is not valid JSON");
  }
  return parse_instance(document);
}

Json serialize_instance(const GameInstance& game) {
  return serialize_payload(game);
}

Json serialize_result(const SolveResult& result, bool include_timing) {
  Json structure = Json::array();
  for (const Coalition& block : result.structure.canonical().blocks) {
    structure.push_back(block.members());
  }
  Json stats{{"oracle_queries", result.stats.oracle_queries},
             {"elapsed_ms",
              include_timing
                  ? static_cast<Value>(std::llround(result.stats.elapsed_ms))
                  : Value{0}}};
  return Json{{"welfare", result.welfare},
              {"structure", structure},
              {"method", method_name(result.method)},
              {"guarantee", guarantee_name(result.guarantee)},
              {"stats", stats}};
}

Json serialize_validation(const TypeValidation& validation) {
  Json out{{"valid", validation.valid}};
  if (validation.witness) {
    out["witness"] = Json{{"i", validation.witness->i},
                          {"j", validation.witness->j},
                          {"coalition", validation.witness->context.members()}};
  }
  return out;
}

Json serialize_provenance(const ReductionInstance& instance) {
  Json out{{"reduction", instance.reduction},
           {"source", instance.source},
           {"relation", instance.relation},
           {"target", instance.target}};
  if (instance.predicted_welfare) {
    out["predicted_welfare"] = *instance.predicted_welfare;
  }
  return out;
}

std::pair<int, std::vector<WeightedEdge>> parse_weighted_graph(const Json& j) {
  const int n = get_int(j, "n");
  std::vector<WeightedEdge> edges;
  for (const Json& e : array_field(j, "edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) {
      throw SchemaError("edges entries must be [u,v] or [u,v,w]");
    }
    edges.push_back({element_int(e[0], "edges"), element_int(e[1], "edges"),
                     e.size() == 3 ? element_value(e[2], "edges") : Value{1}});
  }
  return {n, std::move(edges)};
}

std::pair<int, std::vector<Edge>> parse_simple_graph(const Json& j) {
  auto [n, weighted] = parse_weighted_graph(j);
  std::vector<Edge> edges;
  edges.reserve(weighted.size());
  for (const WeightedEdge& e : weighted) edges.push_back({e.u, e.v});
  return {n, std::move(edges)};
}

Coalition parse_coalition(const Json& j) {
  return parse_member_list(j, "coalition");
}

TypePartition parse_type_partition(const Json& j) {
  if (!j.is_array()) {
    throw SchemaError("type partition must be an array of arrays");
  }
  TypePartition out;
  for (const Json& cls : j) {
    out.classes.push_back(parse_member_list(cls, "partition"));
  }
  return out;
}

}  // namespace optcs
