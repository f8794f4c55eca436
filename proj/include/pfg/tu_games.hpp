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

// TU games, the Shapley value and the Hart–Mas-Colell potential.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pfg/errors.hpp"
#include "pfg/partitions.hpp"
#include "pfg/random_partitions.hpp"
#include "pfg/rational.hpp"

namespace pfg {

// Payoffs keyed by player id.
using PayoffVector = std::map<PlayerId, Rational>;

// Characteristic function v: 2^N -> Q with v(∅) = 0, stored densely.
class TuGame {
 public:
  // The null game on `players`.
  explicit TuGame(PlayerSet players = PlayerSet())
      : players_(players), members_(players.members()) {
    check_capacity(players);
    worth_.assign(std::size_t{1} << members_.size(), Rational(0));
  }

  // Coalitions missing from `worths` are worth 0.
  TuGame(PlayerSet players, const std::map<Coalition, Rational>& worths) : TuGame(players) {
    for (const auto& [s, v] : worths) {
      if (s.empty()) {
        if (v != 0) throw DomainError("the empty coalition must be worth 0");
        continue;
      }
      set_worth(s, v);
    }
  }

  PlayerSet players() const { return players_; }
  int size() const { return static_cast<int>(members_.size()); }

  const Rational& worth(Coalition s) const { return worth_[slot(s)]; }

  void set_worth(Coalition s, Rational v) {
    if (s.empty()) throw DomainError("the empty coalition must be worth 0");
    worth_[slot(s)] = std::move(v);
  }

  TuGame& operator+=(const TuGame& other) {
    if (other.players_ != players_) throw DomainError("adding games on different player sets");
    for (std::size_t k = 0; k < worth_.size(); ++k) worth_[k] += other.worth_[k];
    return *this;
  }
  friend TuGame operator+(TuGame a, const TuGame& b) { return a += b; }
  friend TuGame operator*(const Rational& alpha, TuGame g) {
    for (Rational& x : g.worth_) x *= alpha;
    return g;
  }
  friend bool operator==(const TuGame& a, const TuGame& b) {
    return a.players_ == b.players_ && a.worth_ == b.worth_;
  }

 private:
  // Position of S in the dense table: bit k set iff the k-th member is in S.
  std::size_t slot(Coalition s) const {
    if (!s.subset_of(players_))
      throw DomainError(to_string(s) + " is not a coalition of " + to_string(players_));
    std::size_t out = 0;
    for (std::size_t k = 0; k < members_.size(); ++k)
      if (s.contains(members_[k])) out |= std::size_t{1} << k;
    return out;
  }

  PlayerSet players_;
  std::vector<PlayerId> members_;
  std::vector<Rational> worth_;
};

inline TuGame null_tu(PlayerSet players) { return TuGame(players); }

// delta_T^N: worth 1 at T only.
inline TuGame dirac_tu(PlayerSet players, Coalition t) {
  if (t.empty()) throw DomainError("Dirac TU game needs a nonempty coalition");
  TuGame g(players);
  g.set_worth(t, 1);
  return g;
}

// u_T^N: worth 1 on every superset of T.
inline TuGame unanimity_tu(PlayerSet players, Coalition t) {
  if (t.empty()) throw DomainError("unanimity game needs a nonempty coalition");
  if (!t.subset_of(players)) throw DomainError("carrier is not a coalition of the player set");
  TuGame g(players);
  for (Coalition s : subsets(players))
    if (t.subset_of(s)) g.set_worth(s, 1);
  return g;
}

// v restricted to players \ T.
inline TuGame tu_subgame(const TuGame& v, Coalition removed) {
  if (!removed.subset_of(v.players()))
    throw DomainError(to_string(removed) + " is not a coalition of " + to_string(v.players()));
  PlayerSet rest = v.players() - removed;
  TuGame sub(rest);
  for (Coalition s : subsets(rest))
    if (!s.empty()) sub.set_worth(s, v.worth(s));
  return sub;
}

// Sh_i(v) = sum_{S ⊆ N\i} s!(n-s-1)!/n! (v(S ∪ i) - v(S)).
inline PayoffVector tu_shapley(const TuGame& v) {
  const int n = v.size();
  std::vector<Rational> weight(n > 0 ? n : 1);
  for (int s = 0; s < n; ++s) weight[s] = factorial(s) * factorial(n - s - 1) / factorial(n);
  PayoffVector out;
  for (PlayerId i : v.players().members()) {
    Rational sum = 0;
    for (Coalition s : subsets(v.players().without(i)))
      sum += weight[s.size()] * (v.worth(s.with(i)) - v.worth(s));
    out.emplace(i, std::move(sum));
  }
  return out;
}

// Pot(v) from zero-normalization and efficiency:
//   Pot(v|S) = (v(S) + sum_{i in S} Pot(v|S\i)) / s,  Pot(v|∅) = 0,
// memoized over the sub-player-sets S ⊆ N.
inline Rational tu_potential(const TuGame& v) {
  const auto members = v.players().members();
  const std::size_t n = members.size();
  std::vector<Rational> pot(std::size_t{1} << n, Rational(0));
  for (std::size_t mask = 1; mask < pot.size(); ++mask) {
    Coalition s;
    Rational sum = 0;
    int size = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if ((mask >> k) & 1u) {
        s = s.with(members[k]);
        sum += pot[mask & ~(std::size_t{1} << k)];
        ++size;
      }
    }
    pot[mask] = (v.worth(s) + sum) / size;
  }
  return pot.back();
}

// Per-capita potential as the expected per-capita worth of a random
// coalition: Pot(v)/n = sum_{S≠∅} (1/n) s!(n-s)!/n! v(S)/s.
inline Rational tu_potential_per_capita(const TuGame& v) {
  const int n = v.size();
  if (n == 0) return 0;
  Rational sum = 0;
  for (Coalition s : subsets(v.players())) {
    if (s.empty()) continue;
    const int size = s.size();
    sum += Rational(1, n) * factorial(size) * factorial(n - size) / factorial(n) *
           v.worth(s) / size;
  }
  return sum;
}

// E_p(v) = sum_pi p_N(pi) sum_{B in pi} v(B).
inline Rational tu_expected_accumulated_worth(const TuGame& v,
                                              const RandomPartitionFamily& family) {
  const auto& all = enumerate_partitions(v.players());
  const Distribution& d = family.distribution(v.players());
  Rational sum = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (d[k] == 0) continue;
    Rational acc = 0;
    for (Coalition b : all[k].blocks()) acc += v.worth(b);
    sum += d[k] * acc;
  }
  return sum;
}

// Shapley value as the expected marginal contribution of i to a table when
// entering the uniform Chinese restaurant process last:
//   sum_{pi in Pi(N\i)} p*(pi) ((1/n) v({i}) + sum_{S in pi} (s/n)(v(S∪i) - v(S))).
inline PayoffVector crp_shapley(const TuGame& v) {
  const int n = v.size();
  PayoffVector out;
  for (PlayerId i : v.players().members()) {
    PlayerSet rest = v.players().without(i);
    const auto& all = enumerate_partitions(rest);
    const Distribution& d = pstar().distribution(rest);
    Rational sum = 0;
    for (std::size_t k = 0; k < all.size(); ++k) {
      Rational marginal = Rational(1, n) * v.worth(Coalition::single(i));
      for (Coalition s : all[k].blocks())
        marginal += Rational(s.size(), n) * (v.worth(s.with(i)) - v.worth(s));
      sum += d[k] * marginal;
    }
    out.emplace(i, std::move(sum));
  }
  return out;
}

}  // namespace pfg
