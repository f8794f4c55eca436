/*
 * Copyright 2026 The pfgames Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "pfg/corpus.hpp"
#include "pfg/tux_games.hpp"
#include "support.hpp"

namespace pfg {
namespace {

using testing::crp_law;
using testing::eps4;
using testing::q;
using testing::shapley_by_orders;

Rational total(const PayoffVector& p) {
  Rational sum = 0;
  for (const auto& [i, x] : p) sum += x;
  return sum;
}

// A game on N in which i is null: worths ignore i entirely.
TuxGame with_null_player(const TuxGame& g, PlayerId i) {
  return TuxGame::from_function(g.players().with(i), [&](const EmbeddedCoalition& c) {
    const Coalition s = c.coalition.without(i);
    if (s.empty()) return Rational(0);
    return g.worth(s, delete_players(c.outside, c.outside.ambient() & Coalition::single(i)));
  });
}

// MPW from first principles: the average game under the seating law, then
// the average marginal contribution over all orders.
PayoffVector mpw_oracle(const TuxGame& w) {
  TuGame v(w.players());
  for (Coalition s : subsets(w.players())) {
    if (s.empty()) continue;
    Rational sum = 0;
    for (const auto& [pi, p] : crp_law(w.players() - s)) sum += p * w.worth(s, pi);
    v.set_worth(s, sum);
  }
  return shapley_by_orders(v);
}

TEST(TuxGame, StrictConstruction) {
  const PlayerSet players = Coalition::first_n(2);
  std::map<EmbeddedCoalition, Rational> cells;
  for (const auto& c : enumerate_embedded(players))
    if (!c.coalition.empty()) cells[c] = 1;
  EXPECT_NO_THROW(TuxGame::from_cells(players, cells));
  cells[{Coalition(), Partition::of({{1, 2}})}] = 0;
  EXPECT_NO_THROW(TuxGame::from_cells(players, cells));
  cells[{Coalition(), Partition::of({{1, 2}})}] = 1;
  EXPECT_THROW(TuxGame::from_cells(players, cells), DomainError);
  cells.erase({Coalition(), Partition::of({{1, 2}})});
  cells.erase({Coalition::of({1}), Partition::of({{2}})});
  EXPECT_THROW(TuxGame::from_cells(players, cells), DomainError);
  cells[{Coalition::of({1}), Partition::of({{3}})}] = 1;
  EXPECT_THROW(TuxGame::from_cells(players, cells), DomainError);
}

TEST(TuxGame, EmptyCoalitionIsWorthless) {
  TuxGame w(Coalition::first_n(2));
  EXPECT_THROW(w.set_worth({Coalition(), Partition::of({{1, 2}})}, 1), DomainError);
  EXPECT_THROW(dirac_tux(Coalition::first_n(2), Coalition(), Partition::of({{1, 2}})), DomainError);
}

TEST(TuxGame, LiftAndExternalityFreedom) {
  const TuGame v = random_tu_game(Coalition::first_n(4), 9);
  const auto back = is_externality_free(TuxGame::lift(v));
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, v);
  EXPECT_FALSE(is_externality_free(externality_example()).has_value());
  EXPECT_FALSE(is_externality_free(random_tux_game(Coalition::first_n(3), 1)).has_value());
}

TEST(TuxGame, DiracRoundTrip) {
  for (int n = 0; n <= 4; ++n) {
    const TuxGame w = random_tux_game(Coalition::first_n(n), 30 + n);
    EXPECT_EQ(dirac_rebuild(w.players(), dirac_decompose(w)), w);
  }
  const auto coeffs = dirac_decompose(externality_example());
  EXPECT_EQ(coeffs.at({Coalition::of({2, 3}), Partition::of({{1, 4}})}), 1);
  EXPECT_EQ(coeffs.at({Coalition::of({2}), Partition::of({{1}, {3, 4}})}), 0);
}

TEST(TuxGame, AverageGameOfLiftedGame) {
  const TuGame v = random_tu_game(Coalition::first_n(4), 2);
  for (const auto& family : {pstar(), eps4(1, 8), ewens_family(3)})
    EXPECT_EQ(average_game(TuxGame::lift(v), family), v);
}

TEST(TuxGame, MpwMatchesFirstPrinciples) {
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const TuxGame w = random_tux_game(Coalition::first_n(n), seed);
      EXPECT_EQ(mpw(w), mpw_oracle(w));
    }
}

TEST(TuxGame, ExampleFrozenValues) {
  const TuxGame w = externality_example();
  const PayoffVector expected{{1, 0}, {2, q(5, 12)}, {3, q(5, 12)}, {4, q(1, 6)}};
  EXPECT_EQ(mpw_oracle(w), expected);
  EXPECT_EQ(mpw(w), expected);
  EXPECT_EQ(w.worth(Coalition::of({2}), Partition::of({{1}, {3, 4}})), 0);
  EXPECT_EQ(w.worth(Coalition::of({2}), Partition::of({{1, 4}, {3}})), 1);
  EXPECT_EQ(w.worth(Coalition::of({2, 4}), Partition::of({{1, 3}})), 1);
}

TEST(TuxGame, NullPlayerDetection) {
  const TuxGame w = externality_example();
  EXPECT_TRUE(is_null_player(w, 1));
  EXPECT_FALSE(is_null_player(w, 4));
  EXPECT_FALSE(is_null_player(w, 2));
  EXPECT_THROW(is_null_player(w, 5), DomainError);
  const TuxGame zero(Coalition::first_n(3));
  for (PlayerId i = 1; i <= 3; ++i) EXPECT_TRUE(is_null_player(zero, i));
  for (PlayerId i = 1; i <= 4; ++i)
    EXPECT_TRUE(is_null_player(with_null_player(random_tux_game(Coalition::first_n(4).without(i), 4), i), i));
}

TEST(TuxGame, WitnessGamesHaveANullPlayer) {
  const PlayerSet players = Coalition::first_n(4);
  for (PlayerId i : players.members())
    for (const Partition& pi : enumerate_partitions(players.without(i)))
      for (Coalition b : pi.blocks()) {
        const TuxGame w = null_player_witness(players, i, pi, b, q(3, 2));
        EXPECT_TRUE(is_null_player(w, i));
        EXPECT_FALSE(w.is_null());
      }
}

TEST(TuxGame, MpwNullPlayerAndEfficiency) {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const TuxGame w = random_tux_game(Coalition::first_n(n), 50 + seed);
      EXPECT_EQ(total(mpw(w)), w.worth(w.players(), Partition()));
      const PlayerId i = n + 1;
      EXPECT_EQ(mpw(with_null_player(w, i)).at(i), 0);
    }
  }
}

TEST(TuxGame, PShapleyEfficiencyForGeneratingFamilies) {
  for (const auto& family : {pstar(), eps4(1, 8), eps4(-1, 24), eps4(1, 48)})
    for (int n = 1; n <= 4; ++n) {
      const TuxGame w = random_tux_game(Coalition::first_n(n), 70 + n);
      EXPECT_EQ(total(p_shapley_vector(w, family)), w.worth(w.players(), Partition()))
          << family.label();
    }
}

TEST(TuxGame, PShapleyAtPstarIsMpwOnDiracBasis) {
  for (int n = 1; n <= 4; ++n) {
    const PlayerSet players = Coalition::first_n(n);
    for (const EmbeddedCoalition& c : dirac_cells(players)) {
      const TuxGame delta = dirac_tux(players, c.coalition, c.outside);
      EXPECT_EQ(p_shapley_vector(delta, pstar()), mpw(delta)) << to_string(c);
    }
  }
}

TEST(TuxGame, PerturbedPShapleyDiffersFromMpw) {
  const TuxGame w = random_tux_game(Coalition::first_n(4), 3);
  EXPECT_NE(p_shapley_vector(w, eps4(1, 48)), mpw(w));
}

TEST(TuxGame, MpwLinearity) {
  const TuxGame w = random_tux_game(Coalition::first_n(4), 1);
  const TuxGame z = random_tux_game(Coalition::first_n(4), 2);
  const PayoffVector a = mpw(w);
  const PayoffVector b = mpw(z);
  for (const auto& [i, x] : mpw(q(-5, 3) * w + z)) EXPECT_EQ(x, q(-5, 3) * a.at(i) + b.at(i));
}

TEST(TuxGame, ExpectedAccumulatedWorth) {
  const TuGame v = random_tu_game(Coalition::first_n(4), 8);
  EXPECT_EQ(expected_accumulated_worth(TuxGame::lift(v), pstar()), tu_potential(v));
  // A Dirac game collects exactly the probability of its partition.
  const PlayerSet players = Coalition::first_n(4);
  for (const EmbeddedCoalition& c : dirac_cells(players))
    EXPECT_EQ(expected_accumulated_worth(dirac_tux(players, c.coalition, c.outside), eps4(1, 8)),
              eps4(1, 8).prob(players, c.outside.with_block(c.coalition)));
}

}  // namespace
}  // namespace pfg
