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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optcs/json_io.hpp"

namespace {

using namespace optcs;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json(const std::string& path) {
  Json j = Json::parse(read_input(path), nullptr, false);
  if (j.is_discarded()) throw SchemaError("input is not valid JSON");
  return j;
}

// Exit 1: malformed or invalid input. Exit 2: instance beyond the exact
// caps with no guaranteed path.
int classify_error(const std::exception& e) {
  if (dynamic_cast<const Unsolvable*>(&e) != nullptr ||
      dynamic_cast<const TooManyPlayers*>(&e) != nullptr ||
      dynamic_cast<const TooLarge*>(&e) != nullptr ||
      dynamic_cast<const IntractableEvaluation*>(&e) != nullptr) {
    return 2;
  }
  return 1;
}

int resolve_brute_cap(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("COALITION_BRUTE_CAP")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return SolverOptions{}.brute_cap;
}

Strategy parse_strategy(const std::string& name) {
  if (name == "brute") return Strategy::kForceBrute;
  if (name == "dp") return Strategy::kForceDp;
  if (name == "approx") return Strategy::kForceApprox;
  return Strategy::kAuto;
}

void warn_large_grid(const GameInstance& game) {
  constexpr std::size_t kWarnCells = 100'000'000;
  try {
    std::size_t cells = 1;
    for (int s : extract_type_partition(game).sizes()) {
      cells *= static_cast<std::size_t>(s) + 1;
      if (cells > kWarnCells) {
        std::cerr << "warning: type grid exceeds " << kWarnCells
                  << " cells; the dynamic program is polynomial only for a "
                     "constant number of classes\n";
        return;
      }
    }
  } catch (const NoSyntacticTypes&) {
  }
}

void warn_zero_threshold(const GameInstance& game) {
  const auto* wrapper = game.get_if<ThresholdGame>();
  if (wrapper == nullptr) return;
  try {
    const Value grand = evaluate(
        *wrapper->inner, Coalition::full(wrapper->inner->player_count()));
    if (wrapper->threshold > grand) {
      std::cerr << "warning: threshold " << wrapper->threshold
                << " exceeds the grand coalition value " << grand
                << "; the wrapper is the zero game\n";
    }
  } catch (const Error&) {
    // Grand-coalition value not cheaply computable; skip the check.
  }
}

Coalition parse_coalition_arg(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("bad coalition argument");
    return parse_coalition(j);
  }
  std::vector<int> members;
  std::istringstream is(text);
  std::string token;
  while (std::getline(is, token, ',')) {
    try {
      members.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw SchemaError("bad coalition argument '" + text + "'");
    }
  }
  return Coalition(std::move(members));
}

std::vector<Value> parse_value_list_arg(const std::string& text) {
  std::vector<Value> values;
  std::istringstream is(text);
  std::string token;
  while (std::getline(is, token, ',')) {
    try {
      values.push_back(std::stoll(token));
    } catch (const std::exception&) {
      throw SchemaError("bad integer list '" + text + "'");
    }
  }
  return values;
}

int run_solve(const std::string& file, const std::string& strategy,
              int brute_cap_flag, std::int64_t dp_budget, bool timing) {
  const GameInstance game = parse_instance_text(read_input(file));
  warn_zero_threshold(game);
  const Strategy strat = parse_strategy(strategy);
  if (strat == Strategy::kAuto || strat == Strategy::kForceDp) {
    warn_large_grid(game);
  }
  SolverOptions options;
  options.brute_cap = resolve_brute_cap(brute_cap_flag);
  options.dp_cell_budget = static_cast<std::size_t>(dp_budget);

  const SolveResult result = solve_optcs(game, strat, options);

  // Independent check before anything is printed: the structure must be a
  // partition and the welfare must recompute from raw evaluations.
  GameOracle oracle(game);
  if (!result.structure.is_partition_of(game.player_count()) ||
      welfare(result.structure, oracle) != result.welfare) {
    std::cerr << "internal error: result failed verification\n";
    return 3;
  }
  std::cout << serialize_result(result, timing).dump(2) << "\n";
  return 0;
}

int run_value(const std::string& file, const std::string& coalition_arg) {
  const GameInstance game = parse_instance_text(read_input(file));
  const Coalition coalition = parse_coalition_arg(coalition_arg);
  const Value v = evaluate(game, coalition);
  Json out{{"coalition", coalition.members()}, {"value", v}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_validate(const std::string& file, const std::string& partition_arg,
                 int cap) {
  const GameInstance game = parse_instance_text(read_input(file));
  Json pj = Json::parse(partition_arg, nullptr, false);
  if (pj.is_discarded()) throw SchemaError("bad partition argument");
  const TypePartition candidate = parse_type_partition(pj);
  GameOracle oracle(game);
  const TypeValidation validation =
      validate_type_partition(oracle, candidate, cap);
  std::cout << serialize_validation(validation).dump(2) << "\n";
  return 0;
}

int run_gen(const std::string& reduction, const std::string& weights_arg,
            int k, const std::string& graph_file, const std::string& file,
            bool provenance) {
  ReductionInstance instance = [&] {
    if (reduction == "partition-wvg") {
      if (weights_arg.empty()) {
        throw SchemaError("partition-wvg needs --weights");
      }
      return gen_wvg_from_partition(parse_value_list_arg(weights_arg), k);
    }
    if (reduction == "maxcut-gg") {
      auto [n, edges] = parse_weighted_graph(read_json(graph_file));
      return gen_gg_from_maxcut(n, edges);
    }
    if (reduction == "clique-mwc") {
      auto [n, edges] = parse_simple_graph(read_json(graph_file));
      return gen_mwc_from_clique(n, edges);
    }
    const GameInstance source = parse_instance_text(read_input(file));
    const auto* wvg = source.get_if<WeightedVotingGame>();
    if (wvg == nullptr) {
      throw SchemaError(reduction + " needs a weighted voting game instance");
    }
    return gen_threshold_embedding(*wvg, reduction == "wvg-tnfg"
                                             ? ThresholdTarget::kNetworkFlow
                                             : ThresholdTarget::kMatching);
  }();
  if (provenance) {
    std::cerr << serialize_provenance(instance).dump(2) << "\n";
  }
  std::cout << serialize_instance(instance.game).dump(2) << "\n";
  return 0;
}

int run_bench(const std::string& family, const std::string& sizes_arg,
              unsigned seed) {
  std::vector<int> sizes;
  for (Value v : parse_value_list_arg(sizes_arg)) {
    if (v < 1) throw SchemaError("sizes must be positive");
    sizes.push_back(static_cast<int>(v));
  }
  std::mt19937 rng(seed);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  std::printf("family,n,k,welfare,optimum,ratio,elapsed_ms\n");
  for (int n : sizes) {
    GameInstance game = [&]() -> GameInstance {
      if (family == "wvg-dp" || family == "wvg-greedy") {
        WeightedVotingGame g;
        const int distinct = family == "wvg-dp" ? 2 : std::min(n, 6);
        Value total = 0;
        for (int i = 0; i < n; ++i) {
          g.weights.push_back(1 + pick(0, distinct - 1) * 3);
          total += g.weights.back();
        }
        g.quota = std::max<Value>(1, total / std::max(2, n / 3));
        return GameInstance(std::move(g));
      }
      if (family == "scg") {
        const int nv = std::max(2, static_cast<int>(std::sqrt(2.0 * n)) + 1);
        std::vector<Edge> edges;
        for (int v = 1; v < nv; ++v) edges.push_back({pick(0, v - 1), v});
        auto has = [&](int u, int v) {
          return std::any_of(edges.begin(), edges.end(), [&](const Edge& f) {
            return (f.u == u && f.v == v) || (f.u == v && f.v == u);
          });
        };
        for (int tries = 0;
             static_cast<int>(edges.size()) < n && tries < 20 * n; ++tries) {
          const int u = pick(0, nv - 1);
          const int v = pick(0, nv - 1);
          if (u != v && !has(u, v)) edges.push_back({u, v});
        }
        return GameInstance(SpanningConnectivityGame{nv, std::move(edges)});
      }
      if (family == "nfg") {
        const int nv = std::max(2, std::min(n, n / 3 + 2));
        NetworkFlowGame g{nv, 0, nv - 1, {}};
        // Backbone path keeps the instances non-degenerate.
        for (int v = 0; v + 1 < nv && static_cast<int>(g.arcs.size()) < n;
             ++v) {
          g.arcs.push_back({v, v + 1, pick(1, 9)});
        }
        while (static_cast<int>(g.arcs.size()) < n) {
          const int u = pick(0, nv - 1);
          const int v = pick(0, nv - 1);
          if (u != v) g.arcs.push_back({u, v, pick(1, 9)});
        }
        return GameInstance(std::move(g));
      }
      throw SchemaError("unknown bench family '" + family + "'");
    }();

    const SolveResult result = solve_optcs(
        game, family == "wvg-greedy" ? Strategy::kForceApprox
                                     : Strategy::kAuto);
    const int players = game.player_count();
    int type_classes = 0;
    try {
      type_classes = extract_type_partition(game).class_count();
    } catch (const NoSyntacticTypes&) {
    }

    std::string optimum;
    std::string ratio;
    if (result.guarantee == Guarantee::kOptimal) {
      optimum = std::to_string(result.welfare);
      ratio = "1";
    } else if (players <= SolverOptions{}.brute_cap) {
      GameOracle oracle(game);
      const Value opt = brute_force_optcs(oracle).welfare;
      optimum = std::to_string(opt);
      char buffer[32];
      const double r = result.welfare == 0
                           ? (opt == 0 ? 1.0 : 0.0)
                           : static_cast<double>(opt) /
                                 static_cast<double>(result.welfare);
      std::snprintf(buffer, sizeof buffer, "%g", r);
      ratio = buffer;
    }
    std::printf("%s,%d,%d,%lld,%s,%s,%.3f\n", family.c_str(), players,
                type_classes, static_cast<long long>(result.welfare),
                optimum.c_str(), ratio.c_str(), result.stats.elapsed_ms);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal coalition structure solvers for compact coalitional "
               "games"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string strategy = "auto";
  std::int64_t dp_budget = 10'000'000;
  int brute_cap = -1;
  bool timing = false;
  auto* solve = app.add_subcommand(
      "solve", "Compute an optimal (or 2-approximate) structure");
  solve->add_option("file", file, "instance file, '-' for stdin");
  solve->add_option("--strategy", strategy, "auto|brute|dp|approx")
      ->check(CLI::IsMember({"auto", "brute", "dp", "approx"}));
  solve->add_option("--dp-budget", dp_budget,
                    "cell budget for auto dynamic-program dispatch");
  solve->add_option("--brute-cap", brute_cap,
                    "player cap for brute force (default 12, or "
                    "COALITION_BRUTE_CAP)");
  solve->add_flag("--timing", timing, "emit measured elapsed_ms");

  std::string value_file = "-";
  std::string coalition_arg;
  auto* value_cmd =
      app.add_subcommand("value", "Evaluate one coalition's value");
  value_cmd->add_option("file", value_file, "instance file, '-' for stdin");
  value_cmd->add_option("--coalition", coalition_arg, "e.g. 0,2 or [0,2]")
      ->required();

  std::string vt_file = "-";
  std::string partition_arg;
  int vt_cap = 16;
  auto* validate_cmd = app.add_subcommand(
      "validate-types", "Exhaustively check a candidate type partition");
  validate_cmd->add_option("file", vt_file, "instance file, '-' for stdin");
  validate_cmd->add_option("--partition", partition_arg, "e.g. [[0,1],[2,3]]")
      ->required();
  validate_cmd->add_option("--cap", vt_cap, "player cap (default 16)");

  std::string reduction;
  std::string weights_arg;
  int gen_k = 2;
  std::string graph_file = "-";
  std::string gen_file = "-";
  bool provenance = false;
  auto* gen_cmd =
      app.add_subcommand("gen", "Generate instances from hardness reductions");
  gen_cmd
      ->add_option("--reduction", reduction,
                   "partition-wvg|maxcut-gg|clique-mwc|wvg-tnfg|wvg-tmatching")
      ->required()
      ->check(CLI::IsMember({"partition-wvg", "maxcut-gg", "clique-mwc",
                             "wvg-tnfg", "wvg-tmatching"}));
  gen_cmd->add_option("--weights", weights_arg,
                      "partition-wvg weight multiset, e.g. 3,3,1,1");
  gen_cmd->add_option("--k", gen_k, "partition-wvg part count");
  gen_cmd->add_option("--graph", graph_file,
                      "graph file for maxcut-gg/clique-mwc");
  gen_cmd->add_option("file", gen_file,
                      "source WVG instance for wvg-tnfg/wvg-tmatching");
  gen_cmd->add_flag("--provenance", provenance,
                    "print the provenance record to stderr");

  std::string family;
  std::string sizes_arg;
  unsigned seed = 1;
  auto* bench_cmd =
      app.add_subcommand("bench", "Run a benchmark family, emitting CSV");
  bench_cmd->add_option("--family", family, "wvg-dp|wvg-greedy|scg|nfg")
      ->required();
  bench_cmd->add_option("--sizes", sizes_arg, "e.g. 50,100,200")->required();
  bench_cmd->add_option("--seed", seed, "RNG seed (default 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return run_solve(file, strategy, brute_cap, dp_budget, timing);
    }
    if (value_cmd->parsed()) {
      return run_value(value_file, coalition_arg);
    }
    if (validate_cmd->parsed()) {
      return run_validate(vt_file, partition_arg, vt_cap);
    }
    if (gen_cmd->parsed()) {
      return run_gen(reduction, weights_arg, gen_k, graph_file, gen_file,
                     provenance);
    }
    if (bench_cmd->parsed()) {
      return run_bench(family, sizes_arg, seed);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
