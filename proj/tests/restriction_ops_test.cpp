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

#include <algorithm>

#include <gtest/gtest.h>

#include "pfg/corpus.hpp"
#include "pfg/restriction_ops.hpp"
#include "support.hpp"

namespace pfg {
namespace {

using testing::eps4;
using testing::q;

const RestrictionOperator& rstar_op() {
  static const RestrictionOperator op = RestrictionOperator::rstar();
  return op;
}

std::vector<RandomPartitionFamily> positive_generating() { return {pstar(), eps4(1, 48), eps4(-1, 48)}; }

TEST(Restriction, ExampleCells) {
  const TuxGame sub = restrict(rstar_op(), externality_example(), 4);
  EXPECT_EQ(sub.players(), Coalition::first_n(3));
  const Rational a = sub.worth(Coalition::of({1, 3}), Partition::of({{2}}));
  const Rational b = sub.worth(Coalition::of({3}), Partition::of({{1, 2}}));
  EXPECT_EQ(a, q(1, 2));
  EXPECT_EQ(b, q(1, 3));
  EXPECT_EQ(a - b, q(1, 6));
}

TEST(Restriction, RstarWeights) {
  // Removing 3 from delta at ({1}, [[2,3]]) and ({1}, [[2],[3]]).
  const PlayerSet players = Coalition::first_n(3);
  const TuxGame joined = dirac_tux(players, Coalition::of({1}), Partition::of({{2, 3}}));
  const TuxGame alone = dirac_tux(players, Coalition::of({1}), Partition::of({{2}, {3}}));
  EXPECT_EQ(restrict(rstar_op(), joined, 3).worth(Coalition::of({1}), Partition::of({{2}})), q(1, 2));
  EXPECT_EQ(restrict(rstar_op(), alone, 3).worth(Coalition::of({1}), Partition::of({{2}})), q(1, 2));
  EXPECT_EQ(restrict(rstar_op(), joined, 3).worth(Coalition::of({1, 2}), Partition()), 0);
}

TEST(Restriction, RpAtPstarIsRstar) {
  const auto rp = RestrictionOperator::rp(pstar());
  for (int n = 1; n <= 4; ++n) {
    const PlayerSet players = Coalition::first_n(n);
    for (const EmbeddedCoalition& c : dirac_cells(players)) {
      const TuxGame delta = dirac_tux(players, c.coalition, c.outside);
      for (PlayerId i : players.members()) EXPECT_EQ(restrict(rp, delta, i), restrict(rstar_op(), delta, i));
    }
    const TuxGame w = random_tux_game(players, n);
    for (PlayerId i : players.members()) EXPECT_EQ(restrict(rp, w, i), restrict(rstar_op(), w, i));
  }
}

TEST(Restriction, RpOnDiracGames) {
  for (const auto& family : positive_generating()) {
    const auto rp = RestrictionOperator::rp(family);
    for (int n = 1; n <= 4; ++n) {
      const PlayerSet players = Coalition::first_n(n);
      for (const EmbeddedCoalition& c : dirac_cells(players)) {
        const TuxGame delta = dirac_tux(players, c.coalition, c.outside);
        for (PlayerId i : players.members()) {
          const TuxGame got = restrict(rp, delta, i);
          if (c.coalition.contains(i)) {
            EXPECT_TRUE(got.is_null());
            continue;
          }
          const PlayerSet rest = players.without(i);
          const Partition tau = delete_players(c.outside, Coalition::single(i));
          const int t = c.coalition.size();
          const Rational scale = Rational(n, n - t) *
                                 family.prob(players, c.outside.with_block(c.coalition)) /
                                 family.prob(rest, tau.with_block(c.coalition));
          EXPECT_EQ(got, scale * dirac_tux(rest, c.coalition, tau)) << family.label();
        }
      }
    }
  }
}

TEST(Restriction, RemovingSeveralPlayersFromDiracGames) {
  for (const auto& family : positive_generating()) {
    const auto rp = RestrictionOperator::rp(family);
    const PlayerSet players = Coalition::first_n(4);
    const int n = 4;
    for (const EmbeddedCoalition& c : dirac_cells(players)) {
      const TuxGame delta = dirac_tux(players, c.coalition, c.outside);
      const int t = c.coalition.size();
      for (Coalition s : subsets(c.outside.ambient())) {
        const PlayerSet rest = players - s;
        const Partition tau = delete_players(c.outside, s);
        Rational scale = family.prob(players, c.outside.with_block(c.coalition)) /
                         family.prob(rest, tau.with_block(c.coalition));
        for (int k = 0; k < s.size(); ++k) scale *= Rational(n - k, n - t - k);
        EXPECT_EQ(restrict_many(rp, delta, s), scale * dirac_tux(rest, c.coalition, tau));
      }
    }
  }
}

TEST(Restriction, RemovingEveryOutsiderUnderPstar) {
  const auto rp = RestrictionOperator::rp(pstar());
  const PlayerSet players = Coalition::first_n(4);
  for (const EmbeddedCoalition& c : dirac_cells(players)) {
    const TuxGame delta = dirac_tux(players, c.coalition, c.outside);
    const TuxGame left = restrict_many(rp, delta, c.outside.ambient());
    const int t = c.coalition.size();
    const Rational expected = t * binomial(4, t) * pstar().prob(players, c.outside.with_block(c.coalition));
    EXPECT_EQ(left.worth(c.coalition, Partition()), expected);
  }
}

TEST(Restriction, RemovalOrderIsIrrelevant) {
  const TuxGame w = random_tux_game(Coalition::first_n(4), 12);
  for (const RestrictionOperator& op :
       {rstar_op(), RestrictionOperator::rp(eps4(1, 48)), RestrictionOperator::nullifying()}) {
    const TuxGame canonical = restrict_many(op, w, Coalition::of({1, 2, 4}));
    std::vector<PlayerId> order{1, 2, 4};
    do {
      TuxGame g = w;
      for (PlayerId i : order) g = restrict(op, g, i);
      EXPECT_EQ(g, canonical) << op.label();
    } while (std::next_permutation(order.begin(), order.end()));
    EXPECT_EQ(restrict_many(op, w, Coalition()), w);
  }
}

TEST(Restriction, NullGamesStayNull) {
  for (const RestrictionOperator& op :
       {rstar_op(), RestrictionOperator::rp(pstar()), RestrictionOperator::rp(eps4(1, 48)),
        RestrictionOperator::nullifying()}) {
    const TuxGame zero(Coalition::first_n(4));
    for (PlayerId i = 1; i <= 4; ++i) EXPECT_TRUE(restrict(op, zero, i).is_null());
    EXPECT_TRUE(auxiliary_game(op, zero) == TuGame(zero.players()));
    EXPECT_EQ(r_potential(op, zero), 0);
  }
}

TEST(Restriction, NullifyingOperator) {
  const TuxGame w = random_tux_game(Coalition::first_n(4), 5);
  const auto op = RestrictionOperator::nullifying();
  EXPECT_TRUE(restrict(op, w, 2).is_null());
  const TuGame v = auxiliary_game(op, w);
  for (Coalition s : subsets(w.players()))
    EXPECT_EQ(v.worth(s), s == w.players() ? w.worth(s, Partition()) : Rational(0));
  for (const auto& [i, x] : r_shapley(op, w)) EXPECT_EQ(x, w.worth(w.players(), Partition()) / 4);
}

TEST(Restriction, AuxiliaryGameOfDiracGames) {
  for (const auto& family : positive_generating()) {
    const auto rp = RestrictionOperator::rp(family);
    for (int n = 1; n <= 4; ++n) {
      const PlayerSet players = Coalition::first_n(n);
      for (const EmbeddedCoalition& c : dirac_cells(players)) {
        const int t = c.coalition.size();
        const Rational p = family.prob(players, c.outside.with_block(c.coalition));
        const TuGame expected = (factorial(n) * t / (factorial(n - t) * factorial(t)) * p) *
                                dirac_tu(players, c.coalition);
        EXPECT_EQ(auxiliary_game(rp, dirac_tux(players, c.coalition, c.outside)), expected);
      }
    }
  }
}

TEST(Restriction, PotentialAndShapleyOfDiracGames) {
  for (const auto& family : positive_generating()) {
    const auto rp = RestrictionOperator::rp(family);
    for (int n = 1; n <= 4; ++n) {
      const PlayerSet players = Coalition::first_n(n);
      for (const EmbeddedCoalition& c : dirac_cells(players)) {
        const TuxGame delta = dirac_tux(players, c.coalition, c.outside);
        const Rational p = family.prob(players, c.outside.with_block(c.coalition));
        EXPECT_EQ(r_potential(rp, delta), p);
        const int t = c.coalition.size();
        for (const auto& [i, x] : r_shapley(rp, delta))
          EXPECT_EQ(x, c.coalition.contains(i) ? p : -Rational(t, n - t) * p);
      }
    }
  }
}

TEST(Restriction, PotentialRoutesAgree) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const TuxGame w = random_tux_game(Coalition::first_n(4), 100 + seed);
    for (const RestrictionOperator& op :
         {rstar_op(), RestrictionOperator::rp(eps4(1, 48)), RestrictionOperator::nullifying()}) {
      EXPECT_EQ(r_potential(op, w), tu_potential(auxiliary_game(op, w)));
      EXPECT_EQ(r_shapley(op, w), r_shapley_via_potential(op, w));
    }
    EXPECT_EQ(r_potential(RestrictionOperator::rp(eps4(1, 48)), w),
              expected_accumulated_worth(w, eps4(1, 48)));
    EXPECT_EQ(r_shapley(RestrictionOperator::rp(eps4(1, 48)), w), p_shapley_vector(w, eps4(1, 48)));
  }
}

TEST(Restriction, LiftedTuGames) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const TuGame v = random_tu_game(Coalition::first_n(4), seed);
    const TuxGame w = TuxGame::lift(v);
    EXPECT_EQ(r_potential(rstar_op(), w), tu_potential(v));
    EXPECT_EQ(r_shapley(RestrictionOperator::rp(eps4(1, 8)), w), tu_shapley(v));
    EXPECT_EQ(auxiliary_game(rstar_op(), w), v);
  }
}

TEST(Restriction, RstarShapleyIsMpw) {
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const TuxGame w = random_tux_game(Coalition::first_n(n), seed);
      EXPECT_EQ(r_shapley(rstar_op(), w), mpw(w));
    }
}

TEST(Restriction, AveragingCommutesWithRemoval) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const TuxGame w = random_tux_game(Coalition::first_n(4), 200 + seed);
    for (PlayerId i = 1; i <= 4; ++i)
      EXPECT_EQ(average_game(restrict(rstar_op(), w, i), pstar()),
                tu_subgame(average_game(w, pstar()), Coalition::single(i)));
  }
}

TEST(Restriction, NullPlayersKeepZeroMpwInSubgames) {
  const TuxGame w = externality_example();
  for (Coalition t : subsets(Coalition::of({2, 3, 4})))
    EXPECT_EQ(mpw(restrict_many(rstar_op(), w, t)).at(1), 0) << to_string(t);
}

TEST(Restriction, NullPlayerNotPreserved) {
  const TuxGame w = externality_example();
  ASSERT_TRUE(is_null_player(w, 1));
  EXPECT_FALSE(is_null_player(restrict(rstar_op(), w, 4), 1));
}

TEST(Restriction, RefusesNonGeneratingFamilies) {
  try {
    RestrictionOperator::rp(ewens_family(q(1, 2)));
    FAIL() << "expected a domain error";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("2/3 != 1/2"), std::string::npos) << e.what();
  }
}

TEST(Restriction, ZeroDenominatorIsReported) {
  const auto rp = RestrictionOperator::rp(eps4(1, 8));
  EXPECT_NO_THROW(restrict(rp, random_tux_game(Coalition::first_n(4), 1), 4));
  try {
    restrict(rp, random_tux_game(Coalition::first_n(5), 1), 5);
    FAIL() << "expected a positivity error";
  } catch (const PositivityError& e) {
    EXPECT_NE(std::string(e.what()).find("probability 0 to [["), std::string::npos) << e.what();
  }
}

TEST(Restriction, RejectsUnknownPlayer) {
  EXPECT_THROW(restrict(rstar_op(), externality_example(), 7), DomainError);
  EXPECT_THROW(restrict_many(rstar_op(), externality_example(), Coalition::of({7})), DomainError);
}

TEST(Restriction, DoubledRstarBreaksPotentialIdentity) {
  // Any operator other than r^p must lose one of its defining properties;
  // scaling r* keeps path independence and null games but not Pot = E_p.
  const auto doubled = RestrictionOperator::custom("doubled", [](const TuxGame& w, PlayerId i) {
    return Rational(2) * restrict(RestrictionOperator::rstar(), w, i);
  });
  const TuxGame w = random_tux_game(Coalition::first_n(3), 4);
  EXPECT_NE(r_potential(doubled, w), expected_accumulated_worth(w, pstar()));
}

}  // namespace
}  // namespace pfg
