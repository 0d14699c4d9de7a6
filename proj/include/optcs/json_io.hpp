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

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "optcs/games.hpp"
#include "optcs/reductions.hpp"
#include "optcs/solver.hpp"

namespace optcs {

using Json = nlohmann::json;

// Instance documents carry a "class" tag, the class payload, and an
// optional integer "threshold" that wraps the instance. All numbers are
// integers; floats are rejected.
GameInstance parse_instance(const Json& document);
GameInstance parse_instance_text(const std::string& text);

// Canonical form: sorted object keys, sorted member lists, normalized
// undirected edges (u < v). Edge and arc order is preserved for the classes
// whose players are edges or arcs.
Json serialize_instance(const GameInstance& game);

// Result document: welfare, canonical structure (blocks by least member),
// method, guarantee, and stats. elapsed_ms is emitted as 0 unless timing is
// requested, keeping default output byte-stable across runs.
Json serialize_result(const SolveResult& result, bool include_timing = false);

Json serialize_validation(const TypeValidation& validation);
Json serialize_provenance(const ReductionInstance& instance);

// Graph documents for the generators: {"n": ..., "edges": [[u,v],...]} with
// an optional third element per edge as weight (default 1).
std::pair<int, std::vector<WeightedEdge>> parse_weighted_graph(const Json& j);
std::pair<int, std::vector<Edge>> parse_simple_graph(const Json& j);

Coalition parse_coalition(const Json& j);
TypePartition parse_type_partition(const Json& j);

}  // namespace optcs
