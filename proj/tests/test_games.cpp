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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "optcs/games.hpp"
#include "optcs/solver.hpp"

using namespace optcs;

namespace {

const GameInstance& wvg_3311() {
  static const GameInstance game(WeightedVotingGame{4, {3, 3, 1, 1}});
  return game;
}

GameInstance matching_triangle() {
  return GameInstance(MatchingGame{3, {{0, 1, 5}, {1, 2, 3}, {0, 2, 4}}});
}

// Exhaustive monotonicity check: v(C) <= v(C + i) for every coalition.
void check_monotone(const GameInstance& game) {
  const int n = game.player_count();
  REQUIRE(n <= 12);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Value base = evaluate(game, Coalition::from_mask(mask));
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) continue;
      const Value bigger =
          evaluate(game, Coalition::from_mask(mask | std::uint64_t{1} << i));
      CHECK(base <= bigger);
    }
  }
}

void check_simple_range(const GameInstance& game) {
  const int n = game.player_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Value v = evaluate(game, Coalition::from_mask(mask));
    CHECK((v == 0 || v == 1));
  }
}

}  // namespace

TEST_CASE("weighted voting game evaluation") {
  CHECK(evaluate(wvg_3311(), Coalition{0, 2}) == 1);  // 3 + 1 >= 4
  CHECK(evaluate(wvg_3311(), Coalition{2, 3}) == 0);  // 1 + 1 < 4
  CHECK(evaluate(wvg_3311(), Coalition{}) == 0);
  CHECK_THROWS_AS(evaluate(wvg_3311(), Coalition{4}), PlayerOutOfRange);
  CHECK_THROWS_AS(GameInstance(WeightedVotingGame{0, {1, 1}}), InvariantError);
  CHECK_THROWS_AS(GameInstance(WeightedVotingGame{2, {1, -1}}),
                  InvariantError);
}

TEST_CASE("multiple weighted voting game is the conjunction") {
  const GameInstance mwvg(MultiWeightedVotingGame{
      {{2, {1, 1, 3}}, {3, {3, 3, 0}}}});
  CHECK(evaluate(mwvg, Coalition{2}) == 0);     // wins the first game only
  CHECK(evaluate(mwvg, Coalition{0, 1}) == 1);  // wins both
  CHECK(evaluate(mwvg, Coalition{0}) == 0);
  CHECK_THROWS_AS(GameInstance(MultiWeightedVotingGame{
                      {{2, {1, 1}}, {2, {1, 1, 1}}}}),
                  InvariantError);
}

TEST_CASE("minimal winning coalition game semantics and minimality") {
  const GameInstance mwc(
      MinimalWinningGame{4, {Coalition{0, 1}, Coalition{2}}});
  CHECK(evaluate(mwc, Coalition{0, 1, 3}) == 1);
  CHECK(evaluate(mwc, Coalition{0, 3}) == 0);
  CHECK(evaluate(mwc, Coalition{2}) == 1);

  CHECK_THROWS_AS(
      GameInstance(MinimalWinningGame{3, {Coalition{0}, Coalition{0, 1}}}),
      InvariantError);
  CHECK_THROWS_AS(
      GameInstance(MinimalWinningGame{3, {Coalition{0}, Coalition{0}}}),
      InvariantError);
  CHECK_THROWS_AS(GameInstance(MinimalWinningGame{3, {Coalition{}}}),
                  InvariantError);
}

TEST_CASE("graph game sums induced edges, negatives included") {
  const GameInstance gg(
      GraphGame{4, {{0, 1, 5}, {1, 2, -2}, {2, 3, 7}}, false});
  CHECK(evaluate(gg, Coalition{0, 1, 2}) == 3);
  CHECK(evaluate(gg, Coalition{0, 2}) == 0);
  CHECK(evaluate(gg, Coalition::full(4)) == 10);
  CHECK_THROWS_AS(
      GameInstance(GraphGame{3, {{0, 1, 0}}, true}),  // ggplus needs w >= 1
      InvariantError);
}

TEST_CASE("spanning connectivity game wins on spanning subsets") {
  // K4 edge order: 01,02,03,12,13,23; a star at vertex 0 spans.
  const GameInstance scg(SpanningConnectivityGame{
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}});
  CHECK(evaluate(scg, Coalition{0, 1, 2}) == 1);   // star at 0
  CHECK(evaluate(scg, Coalition{0, 1}) == 0);      // misses vertex 3
  CHECK(evaluate(scg, Coalition::full(6)) == 1);   // grand wins (connected)
  CHECK_THROWS_AS(
      GameInstance(SpanningConnectivityGame{4, {{0, 1}, {2, 3}}}),
      Disconnected);
}

TEST_CASE("path games") {
  // Edge players: arcs 0: s->a, 1: a->t, 2: s->b, 3: b->t (s=0, t=3).
  const GameInstance epcg(
      EdgePathGame{4, 0, 3, true, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}});
  CHECK(evaluate(epcg, Coalition{0, 1}) == 1);
  CHECK(evaluate(epcg, Coalition{0, 3}) == 0);
  CHECK(evaluate(epcg, Coalition::full(4)) == 1);

  // Vertex players on the same graph: non-terminals are 1 and 2.
  const GameInstance vpcg(
      VertexPathGame{4, 0, 3, true, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}});
  CHECK(vpcg.player_count() == 2);
  CHECK(evaluate(vpcg, Coalition{0}) == 1);  // player 0 is vertex 1
  CHECK(evaluate(vpcg, Coalition{}) == 0);   // no interior vertex, no path
  CHECK_THROWS_AS(GameInstance(VertexPathGame{2, 0, 1, false, {{0, 1}}}),
                  InvariantError);
}

TEST_CASE("network flow game value is the restricted max flow") {
  const GameInstance nfg(
      NetworkFlowGame{4, 0, 3, {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}}});
  CHECK(evaluate(nfg, Coalition::full(4)) == 2);
  CHECK(evaluate(nfg, Coalition{0, 1}) == 1);
  CHECK(evaluate(nfg, Coalition{0, 3}) == 0);
}

TEST_CASE("matching game value on the triangle") {
  const GameInstance mg = matching_triangle();
  CHECK(evaluate(mg, Coalition{0, 1, 2}) == 5);
  CHECK(evaluate(mg, Coalition{0, 2}) == 4);
  CHECK(evaluate(mg, Coalition{0}) == 0);
}

TEST_CASE("independent set game evaluation and cap") {
  const GameInstance isg(
      IndependentSetGame{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}});
  CHECK(evaluate(isg, Coalition::full(4)) == 2);
  CHECK(evaluate(isg, Coalition{0, 1}) == 1);
  CHECK(evaluate(isg, Coalition{0, 2}) == 2);

  const GameInstance big_game(IndependentSetGame{30, {}});
  CHECK(evaluate(big_game, Coalition::full(20)) == 20);
  CHECK_THROWS_AS(evaluate(big_game, Coalition::full(30)),
                  IntractableEvaluation);
}

TEST_CASE("task skill game value") {
  const GameInstance wtsg(WeightedTaskSkillGame{
      {"s1", "s2"}, {{0}, {1}, {0}}, {{{0, 1}, 7}}});
  CHECK(evaluate(wtsg, Coalition{0, 1}) == 7);
  CHECK(evaluate(wtsg, Coalition{0, 2}) == 0);
  CHECK(evaluate(wtsg, Coalition::full(3)) == 7);
}

TEST_CASE("explicit game table lookup") {
  const GameInstance game(ExplicitGame{2, {0, 1, 2, 5}});
  CHECK(evaluate(game, Coalition{}) == 0);
  CHECK(evaluate(game, Coalition{0}) == 1);
  CHECK(evaluate(game, Coalition{1}) == 2);
  CHECK(evaluate(game, Coalition{0, 1}) == 5);
  CHECK_THROWS_AS(GameInstance(ExplicitGame{2, {1, 1, 2, 5}}), InvariantError);
  CHECK_THROWS_AS(GameInstance(ExplicitGame{2, {0, 1, 2}}), InvariantError);
}

TEST_CASE("threshold wrapper") {
  GameInstance t_matching = make_threshold(matching_triangle(), 5);
  CHECK(evaluate(t_matching, Coalition{0, 2}) == 0);  // inner value 4 < 5
  CHECK(evaluate(t_matching, Coalition::full(3)) == 1);

  const GameInstance nfg(
      NetworkFlowGame{4, 0, 3, {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}}});
  GameInstance t_nfg = make_threshold(nfg, 2);
  CHECK(evaluate(t_nfg, Coalition::full(4)) == 1);
  CHECK(evaluate(t_nfg, Coalition{0, 1}) == 0);  // one path only

  // Thresholding a simple game at 1 is the identity on all 16 coalitions.
  GameInstance t_wvg = make_threshold(wvg_3311(), 1);
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    CHECK(evaluate(t_wvg, Coalition::from_mask(mask)) ==
          evaluate(wvg_3311(), Coalition::from_mask(mask)));
  }

  CHECK_THROWS_AS(make_threshold(matching_triangle(), 0), InvariantError);
}

TEST_CASE("threshold rejects non-monotone inner games") {
  CHECK_THROWS_AS(
      make_threshold(GameInstance(GraphGame{3, {{0, 1, -1}}, false}), 1),
      NonMonotoneInner);
  // Non-monotone explicit table: v({0}) = 3 but v({0,1}) = 1.
  CHECK_THROWS_AS(
      make_threshold(GameInstance(ExplicitGame{2, {0, 3, 0, 1}}), 1),
      NonMonotoneInner);
  // All weights non-negative is fine even without the ggplus flag.
  CHECK_NOTHROW(
      make_threshold(GameInstance(GraphGame{3, {{0, 1, 2}}, false}), 1));
}

TEST_CASE("threshold above the grand value is the zero game") {
  GameInstance zero = make_threshold(matching_triangle(), 100);
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    CHECK(evaluate(zero, Coalition::from_mask(mask)) == 0);
  }
}

TEST_CASE("type extraction by weight, weight vector, and skill set") {
  const TypePartition by_weight = extract_type_partition(wvg_3311());
  REQUIRE(by_weight.class_count() == 2);
  CHECK(by_weight.classes[0] == Coalition{0, 1});
  CHECK(by_weight.classes[1] == Coalition{2, 3});

  const GameInstance wtsg(WeightedTaskSkillGame{
      {"s1", "s2"}, {{0}, {1}, {0}}, {{{0, 1}, 7}}});
  const TypePartition by_skills = extract_type_partition(wtsg);
  REQUIRE(by_skills.class_count() == 2);
  CHECK(by_skills.classes[0] == Coalition{0, 2});
  CHECK(by_skills.classes[1] == Coalition{1});

  // Per-player weight vectors (1,2), (1,2), (3,0).
  const GameInstance mwvg(MultiWeightedVotingGame{
      {{2, {1, 1, 3}}, {2, {2, 2, 0}}}});
  const TypePartition by_vectors = extract_type_partition(mwvg);
  REQUIRE(by_vectors.class_count() == 2);
  CHECK(by_vectors.classes[0] == Coalition{0, 1});
  CHECK(by_vectors.classes[1] == Coalition{2});

  CHECK_THROWS_AS(extract_type_partition(matching_triangle()),
                  NoSyntacticTypes);
}

TEST_CASE("extracted partitions pass the exhaustive equivalence check") {
  std::mt19937 rng(17);
  for (int round = 0; round < 30; ++round) {
    const GameInstance game =
        round % 2 == 0 ? GameInstance(testing::random_wvg(rng, 1, 8, 3))
                       : GameInstance(testing::random_wtsg(rng, 1, 8));
    GameOracle oracle(game);
    const TypeValidation validation =
        validate_type_partition(oracle, extract_type_partition(game));
    CHECK(validation.valid);
  }
}

TEST_CASE("shipped classes are monotone and simple where claimed") {
  std::mt19937 rng(29);

  check_monotone(wvg_3311());
  check_simple_range(wvg_3311());

  for (int round = 0; round < 8; ++round) {
    const GameInstance wvg(testing::random_wvg(rng, 1, 7, 3));
    check_monotone(wvg);
    check_simple_range(wvg);

    const GameInstance wtsg(testing::random_wtsg(rng, 1, 7));
    check_monotone(wtsg);

    const GameInstance mg(testing::random_matching_game(rng, 6));
    check_monotone(mg);

    const GameInstance isg(testing::random_isg(rng, 6));
    check_monotone(isg);

    const GameInstance nfg(testing::random_nfg(rng, 5, 7));
    check_monotone(nfg);

    const auto edges = testing::random_connected_edges(rng, 4, 6);
    const GameInstance scg(SpanningConnectivityGame{4, edges});
    check_monotone(scg);
    check_simple_range(scg);
    CHECK(evaluate(scg, Coalition::full(scg.player_count())) == 1);
  }

  const GameInstance mwc(
      MinimalWinningGame{4, {Coalition{0, 1}, Coalition{2}}});
  check_monotone(mwc);
  check_simple_range(mwc);

  const GameInstance epcg(
      EdgePathGame{4, 0, 3, true, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}});
  check_monotone(epcg);
  check_simple_range(epcg);

  const GameInstance vpcg(
      VertexPathGame{4, 0, 3, true, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}});
  check_monotone(vpcg);
  check_simple_range(vpcg);

  GameInstance threshold = make_threshold(matching_triangle(), 4);
  check_monotone(threshold);
  check_simple_range(threshold);
}

TEST_CASE("every class values the empty coalition at zero") {
  const Coalition empty;
  CHECK(evaluate(wvg_3311(), empty) == 0);
  CHECK(evaluate(matching_triangle(), empty) == 0);
  CHECK(evaluate(GameInstance(IndependentSetGame{3, {{0, 1}}}), empty) == 0);
  CHECK(evaluate(GameInstance(GraphGame{2, {{0, 1, 3}}, false}), empty) == 0);
  CHECK(evaluate(GameInstance(NetworkFlowGame{2, 0, 1, {{0, 1, 5}}}), empty) ==
        0);
  CHECK(evaluate(GameInstance(SpanningConnectivityGame{2, {{0, 1}}}), empty) ==
        0);
}
