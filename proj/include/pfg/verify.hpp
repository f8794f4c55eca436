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

// Axiom checks for restriction operators and TUX solutions, plus the
// family checks re-exported for a single entry point.

#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "pfg/corpus.hpp"
#include "pfg/family_checks.hpp"
#include "pfg/partitions.hpp"
#include "pfg/random_partitions.hpp"
#include "pfg/rational.hpp"
#include "pfg/report.hpp"
#include "pfg/restriction_ops.hpp"
#include "pfg/tux_games.hpp"

namespace pfg {

namespace detail {

// Returns the first cell on which a and b differ.
inline std::optional<std::size_t> first_difference(const TuxGame& a, const TuxGame& b) {
  for (std::size_t k = 0; k < a.values().size(); ++k)
    if (a.values()[k] != b.values()[k]) return k;
  return std::nullopt;
}

inline constexpr std::uint64_t kLocalitySeed = 0x5eed;

}  // namespace detail

// Path independence on every Dirac game, preservation of null games, and
// locality of each restricted worth, for every N ⊆ {1..n_max}.
inline Report check_restriction_axioms(const RestrictionOperator& op, int n_max) {
  Report r{.subject = "restriction:" + op.label()};
  for (PlayerSet players : detail::player_sets_up_to(n_max)) {
    const std::vector<PlayerId> members = players.members();
    const TuxGame null_game(players);
    for (PlayerId i : members) {
      const TuxGame restricted = op(null_game, i);
      const auto diff = detail::first_difference(restricted, TuxGame(players.without(i)));
      r.record(!diff, [&] {
        const auto& cell = restricted.cells()[*diff];
        return Witness{.players = players, .coalition = cell.coalition,
                       .partition = cell.outside, .player = i, .game = null_game,
                       .what = "restriction of the null game", .lhs = restricted.values()[*diff],
                       .rhs = 0};
      });
    }

    for (const EmbeddedCoalition& cell : dirac_cells(players)) {
      const TuxGame delta = dirac_tux(players, cell.coalition, cell.outside);
      for (std::size_t a = 0; a < members.size(); ++a) {
        const TuxGame without_i = op(delta, members[a]);
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          const PlayerId i = members[a];
          const PlayerId j = members[b];
          const TuxGame ij = op(without_i, j);
          const TuxGame ji = op(op(delta, j), i);
          const auto diff = detail::first_difference(ij, ji);
          r.record(!diff, [&] {
            const auto& at = ij.cells()[*diff];
            return Witness{.players = players, .coalition = at.coalition, .partition = at.outside,
                           .player = i, .other_player = j, .game = delta,
                           .what = "removal order (i then j vs j then i)",
                           .lhs = ij.values()[*diff], .rhs = ji.values()[*diff]};
          });
        }
      }
    }

    // Perturbing w at (T, tau) may only move the restricted worth at
    // (T, tau_{-i}), and only when i lies outside T.
    const TuxGame base = random_tux_game(players, detail::kLocalitySeed + players.bits());
    std::map<PlayerId, TuxGame> restricted_base;
    for (PlayerId i : members) restricted_base.emplace(i, op(base, i));
    for (const EmbeddedCoalition& cell : dirac_cells(players)) {
      const TuxGame perturbed = base + dirac_tux(players, cell.coalition, cell.outside);
      for (PlayerId i : members) {
        const TuxGame moved = op(perturbed, i);
        const TuxGame& reference = restricted_base.at(i);
        std::optional<std::size_t> bad;
        for (std::size_t k = 0; k < moved.values().size() && !bad; ++k) {
          if (moved.values()[k] == reference.values()[k]) continue;
          const auto& at = moved.cells()[k];
          const bool allowed = !cell.coalition.contains(i) && at.coalition == cell.coalition &&
                               at.outside == delete_players(cell.outside, Coalition::single(i));
          if (!allowed) bad = k;
        }
        r.record(!bad, [&] {
          const auto& at = moved.cells()[*bad];
          return Witness{.players = players, .coalition = at.coalition, .partition = at.outside,
                         .player = i, .game = perturbed, .reference_game = base,
                         .what = "locality of the restricted worth",
                         .lhs = moved.values()[*bad], .rhs = reference.values()[*bad]};
        });
      }
    }
  }
  return r;
}

// A TUX solution evaluated one player at a time.
struct Solution {
  std::string label;
  std::function<Rational(const TuxGame&, PlayerId)> payoff;
};

inline Solution mpw_solution() {
  return {"mpw", [](const TuxGame& w, PlayerId i) { return mpw(w).at(i); }};
}

inline Solution p_shapley_solution(RandomPartitionFamily family) {
  std::string label = "p-shapley:" + family.label();
  return {std::move(label), [family = std::move(family)](const TuxGame& w, PlayerId i) {
            return p_shapley(w, family, i);
          }};
}

inline Solution r_shapley_solution(RestrictionOperator op) {
  std::string label = "r-shapley:" + op.label();
  return {std::move(label),
          [op = std::move(op)](const TuxGame& w, PlayerId i) { return r_shapley(op, w).at(i); }};
}

// Null player property on the witness games w^1_{i,pi,B} for every
// N ⊆ {1..n_max}, i ∈ N, pi ∈ Pi(N\i), B ∈ pi, and on player 1 of the
// four-player externality example when n_max >= 4.
inline Report check_null_player_axiom(const Solution& solution, int n_max) {
  Report r{.subject = "null-player:" + solution.label};
  for (PlayerSet players : detail::player_sets_up_to(n_max)) {
    for (PlayerId i : players.members()) {
      for (const Partition& pi : enumerate_partitions(players.without(i))) {
        for (Coalition b : pi.blocks()) {
          const TuxGame w = null_player_witness(players, i, pi, b);
          Rational payoff = solution.payoff(w, i);
          r.record(payoff == 0, [&] {
            return Witness{.players = players, .partition = pi, .block = b, .player = i,
                           .game = w, .what = "payoff of a null player", .lhs = payoff, .rhs = 0};
          });
        }
      }
    }
  }
  if (n_max >= 4) {
    const TuxGame w = externality_example();
    Rational payoff = solution.payoff(w, 1);
    r.record(payoff == 0, [&] {
      return Witness{.players = w.players(), .player = 1, .game = w,
                     .what = "payoff of a null player", .lhs = payoff, .rhs = 0};
    });
  }
  return r;
}

}  // namespace pfg
