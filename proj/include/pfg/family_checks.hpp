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

// Checks of random partition families: potential generation (three
// equivalent routes), conditional independence, positivity and the linear
// conditions forced by monotone p-Shapley values.

#pragma once

#include <optional>

#include "pfg/partitions.hpp"
#include "pfg/random_partitions.hpp"
#include "pfg/rational.hpp"
#include "pfg/report.hpp"
#include "pfg/tu_games.hpp"

namespace pfg {

// Outcome of each potential-generation route separately. The three routes
// must agree for every family; `inclusion` is the authoritative one.
struct GenConditions {
  Report potential;  // E_p(delta_T) = Pot(delta_T) on the Dirac TU basis
  Report inclusion;  // sum_{pi ∋ T} p_N(pi) = (n-t)!(t-1)!/n!
  Report recursion;  // insertion recursion between p_{N\i} and p_N

  bool agree() const {
    return potential.passed == inclusion.passed && recursion.passed == inclusion.passed;
  }
};

inline GenConditions evaluate_gen_conditions(const RandomPartitionFamily& family, int n_max) {
  GenConditions out;
  out.potential.subject = "gen-potential:" + family.label();
  out.inclusion.subject = "gen-inclusion:" + family.label();
  out.recursion.subject = "gen-recursion:" + family.label();
  for (PlayerSet players : detail::player_sets_up_to(n_max)) {
    const int n = players.size();
    std::vector<Coalition> blocks;
    for (Coalition t : subsets(players))
      if (!t.empty()) blocks.push_back(t);
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](Coalition a, Coalition b) { return a.size() > b.size(); });
    for (Coalition t : blocks) {
      const int s = t.size();
      const Rational target = factorial(n - s) * factorial(s - 1) / factorial(n);
      Rational incl = coalition_inclusion_prob(family, players, t);
      out.inclusion.record(incl == target, [&] {
        return Witness{.players = players, .coalition = t,
                       .what = "inclusion probability", .lhs = incl, .rhs = target};
      });
      const TuGame delta = dirac_tu(players, t);
      Rational expected = tu_expected_accumulated_worth(delta, family);
      Rational pot = tu_potential(delta);
      out.potential.record(expected == pot, [&] {
        return Witness{.players = players, .coalition = t,
                       .what = "expected accumulated worth vs potential of the Dirac TU game",
                       .lhs = expected, .rhs = pot};
      });
    }
    for (PlayerId i : players.members()) {
      const PlayerSet reduced = players.without(i);
      for (Coalition s : subsets(reduced)) {
        if (s.empty()) continue;
        Rational lhs = 0;
        Rational inserted = 0;
        for (const Partition& pi : enumerate_partitions(reduced - s)) {
          lhs += family.prob(reduced, pi.with_block(s));
          for (Coalition target : insertion_targets(pi))
            inserted += family.prob(players, insert_player(pi, i, target).with_block(s));
        }
        Rational rhs = Rational(n, n - s.size()) * inserted;
        out.recursion.record(lhs == rhs, [&] {
          return Witness{.players = players, .coalition = s, .player = i,
                         .what = "insertion recursion", .lhs = lhs, .rhs = rhs};
        });
      }
    }
  }
  return out;
}

// Potential generation: passes iff the inclusion condition holds for every
// N ⊆ {1..n_max} and the other two routes reach the same verdict.
inline Report check_gen(const RandomPartitionFamily& family, int n_max) {
  GenConditions c = evaluate_gen_conditions(family, n_max);
  Report r = c.inclusion;
  r.subject = "gen:" + family.label();
  r.checked += c.potential.checked + c.recursion.checked;
  if (!c.agree() && r.passed) {
    r.passed = false;
    r.witness = !c.potential.passed ? c.potential.witness : c.recursion.witness;
  }
  return r;
}

// Conditional independence: p_N(pi) = p_{N\B}(pi \ {B}) * sum_{tau ∋ B} p_N(tau).
inline Report check_ci(const RandomPartitionFamily& family, int n_max) {
  Report r{.subject = "ci:" + family.label()};
  for (PlayerSet players : detail::player_sets_up_to(n_max)) {
    std::vector<Coalition> blocks;
    for (Coalition b : subsets(players))
      if (!b.empty()) blocks.push_back(b);
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](Coalition a, Coalition b) { return a.size() > b.size(); });
    for (Coalition b : blocks) {
      const Rational incl = coalition_inclusion_prob(family, players, b);
      std::vector<Partition> rest = enumerate_partitions(players - b);
      std::stable_sort(rest.begin(), rest.end(), [](const Partition& x, const Partition& y) {
        return x.size() > y.size();
      });
      for (const Partition& pi : rest) {
        const Partition full = pi.with_block(b);
        const Rational& lhs = family.prob(players, full);
        Rational rhs = family.prob(players - b, pi) * incl;
        r.record(lhs == rhs, [&] {
          return Witness{.players = players, .partition = full, .block = b,
                         .what = "conditional independence", .lhs = lhs, .rhs = rhs};
        });
      }
    }
  }
  return r;
}

// Positivity: p_N(pi) > 0 everywhere.
inline Report check_pos(const RandomPartitionFamily& family, int n_max) {
  Report r{.subject = "pos:" + family.label()};
  for (PlayerSet players : detail::player_sets_up_to(n_max)) {
    const auto& all = enumerate_partitions(players);
    const Distribution& d = family.distribution(players);
    for (std::size_t k = 0; k < all.size(); ++k)
      r.record(d[k] > 0, [&] {
        return Witness{.players = players, .partition = all[k],
                       .what = "partition probability", .lhs = d[k], .rhs = 0};
      });
  }
  return r;
}

// The linear system whose unique solution is p*:
//   p_N(pi_{+i->B}) = b/(n-b) * sum_{C in (pi\B) ∪ {∅}} p_N(pi_{+i->C})
// for all i ∈ N, pi ∈ Pi(N\i), B ∈ pi. A monotone p-Shapley value needs it.
inline Report check_monotonicity_conditions(const RandomPartitionFamily& family, int n_max) {
  Report r{.subject = "monotonicity:" + family.label()};
  for (PlayerSet players : detail::player_sets_up_to(n_max)) {
    const int n = players.size();
    for (PlayerId i : players.members()) {
      for (const Partition& pi : enumerate_partitions(players.without(i))) {
        for (Coalition b : pi.blocks()) {
          const Rational& lhs = family.prob(players, insert_player(pi, i, b));
          Rational others = 0;
          for (Coalition c : insertion_targets(pi))
            if (c != b) others += family.prob(players, insert_player(pi, i, c));
          Rational rhs = Rational(b.size(), n - b.size()) * others;
          r.record(lhs == rhs, [&] {
            return Witness{.players = players, .partition = pi, .block = b, .player = i,
                           .what = "monotonicity linear condition", .lhs = lhs, .rhs = rhs};
          });
        }
      }
    }
  }
  return r;
}

}  // namespace pfg
