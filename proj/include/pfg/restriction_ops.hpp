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

// Restriction operators, subgames, auxiliary TU games, r-potentials and
// r-Shapley values.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "pfg/errors.hpp"
#include "pfg/family_checks.hpp"
#include "pfg/partitions.hpp"
#include "pfg/random_partitions.hpp"
#include "pfg/rational.hpp"
#include "pfg/tu_games.hpp"
#include "pfg/tux_games.hpp"

namespace pfg {

// Largest player-set size on which an rp family is checked for potential
// generation at construction.
inline constexpr int kGenCheckBound = 5;

class RestrictionOperator {
 public:
  enum class Kind { kRp, kRstar, kNullifying, kCustom };
  using Rule = std::function<TuxGame(const TuxGame&, PlayerId)>;

  // r^p. The family must generate the potential on every N with
  // n <= min(gen_bound, universe bound); positivity is checked per query.
  static RestrictionOperator rp(RandomPartitionFamily family, int gen_bound = kGenCheckBound) {
    Report gen = check_gen(family, std::min(gen_bound, universe_bound()));
    if (!gen.passed)
      throw DomainError("family '" + family.label() + "' does not generate the potential: " +
                        describe(*gen.witness));
    RestrictionOperator op(Kind::kRp, "rp:" + family.label());
    op.family_ = std::move(family);
    return op;
  }
  static RestrictionOperator rstar() { return RestrictionOperator(Kind::kRstar, "rstar"); }
  static RestrictionOperator nullifying() {
    return RestrictionOperator(Kind::kNullifying, "nullify");
  }
  // An arbitrary rule; the caller is responsible for any axioms it claims.
  static RestrictionOperator custom(std::string label, Rule rule) {
    RestrictionOperator op(Kind::kCustom, std::move(label));
    op.rule_ = std::move(rule);
    return op;
  }

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  const std::optional<RandomPartitionFamily>& family() const { return family_; }

  TuxGame operator()(const TuxGame& w, PlayerId i) const;

 private:
  RestrictionOperator(Kind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

  Kind kind_;
  std::string label_;
  std::optional<RandomPartitionFamily> family_;
  Rule rule_;
};

namespace detail {

// w_{-i}(S, pi) = n/(n-s) sum_B p_N({S} ∪ pi_{+i->B}) / p_{N\i}({S} ∪ pi) * w(S, pi_{+i->B}).
inline TuxGame restrict_rp(const RandomPartitionFamily& family, const TuxGame& w, PlayerId i) {
  const PlayerSet players = w.players();
  const PlayerSet reduced = players.without(i);
  const int n = players.size();
  return TuxGame::from_function(reduced, [&](const EmbeddedCoalition& cell) {
    const Partition whole = cell.outside.with_block(cell.coalition);
    const Rational& denominator = family.prob(reduced, whole);
    if (denominator == 0)
      throw PositivityError("family '" + family.label() + "' assigns probability 0 to " +
                            to_string(whole) + ", needed to remove player " + std::to_string(i));
    Rational sum = 0;
    for (Coalition target : insertion_targets(cell.outside)) {
      Partition moved = insert_player(cell.outside, i, target);
      const Rational& p = family.prob(players, moved.with_block(cell.coalition));
      if (p != 0) sum += p * w.worth(cell.coalition, moved);
    }
    return Rational(n, n - cell.coalition.size()) * sum / denominator;
  });
}

// w_{-i}(S, pi) = 1/(n-s) w(S, pi_{+i->∅}) + sum_{B in pi} b/(n-s) w(S, pi_{+i->B}).
inline TuxGame restrict_rstar(const TuxGame& w, PlayerId i) {
  const int n = w.size();
  return TuxGame::from_function(w.players().without(i), [&](const EmbeddedCoalition& cell) {
    Rational sum = 0;
    for (Coalition target : insertion_targets(cell.outside)) {
      const int weight = target.empty() ? 1 : target.size();
      sum += weight * w.worth(cell.coalition, insert_player(cell.outside, i, target));
    }
    return sum / (n - cell.coalition.size());
  });
}

}  // namespace detail

inline TuxGame RestrictionOperator::operator()(const TuxGame& w, PlayerId i) const {
  if (!w.players().contains(i))
    throw DomainError("player " + std::to_string(i) + " not in " + to_string(w.players()));
  switch (kind_) {
    case Kind::kRp:
      return detail::restrict_rp(*family_, w, i);
    case Kind::kRstar:
      return detail::restrict_rstar(w, i);
    case Kind::kNullifying:
      return TuxGame(w.players().without(i));
    case Kind::kCustom:
      break;
  }
  TuxGame out = rule_(w, i);
  if (out.players() != w.players().without(i))
    throw DomainError("operator '" + label_ + "' returned a game on the wrong player set");
  return out;
}

inline TuxGame restrict(const RestrictionOperator& op, const TuxGame& w, PlayerId i) {
  return op(w, i);
}

// Removes the players of `removed` one at a time in ascending order.
inline TuxGame restrict_many(const RestrictionOperator& op, const TuxGame& w, Coalition removed) {
  if (!removed.subset_of(w.players()))
    throw DomainError(to_string(removed) + " is not a coalition of " + to_string(w.players()));
  TuxGame out = w;
  for (PlayerId i : removed.members()) out = op(out, i);
  return out;
}

namespace detail {

// Subgames w_{-R} for every R ⊆ N, each obtained from w_{-(R \ max R)}.
inline std::map<Coalition, TuxGame> all_subgames(const RestrictionOperator& op, const TuxGame& w) {
  std::map<Coalition, TuxGame> out;
  out.emplace(Coalition(), w);
  for (Coalition removed : subsets(w.players())) {
    if (removed.empty()) continue;
    const PlayerId last = removed.greatest();
    out.emplace(removed, op(out.at(removed.without(last)), last));
  }
  return out;
}

}  // namespace detail

// v(S) = w_{-(N\S)}(S, ∅).
inline TuGame auxiliary_game(const RestrictionOperator& op, const TuxGame& w) {
  const auto sub = detail::all_subgames(op, w);
  TuGame v(w.players());
  for (Coalition s : subsets(w.players()))
    if (!s.empty()) v.set_worth(s, sub.at(w.players() - s).worth(s, Partition()));
  return v;
}

// Pot(w) = (w(N, ∅) + sum_i Pot(w_{-i})) / n with Pot of the empty game 0.
// Subgames are memoized by player set, which presumes path independence.
inline Rational r_potential(const RestrictionOperator& op, const TuxGame& w) {
  std::map<Coalition, Rational> memo;
  std::function<Rational(const TuxGame&)> pot = [&](const TuxGame& g) -> Rational {
    if (g.players().empty()) return 0;
    if (auto it = memo.find(g.players()); it != memo.end()) return it->second;
    Rational sum = g.worth(g.players(), Partition());
    for (PlayerId i : g.players().members()) sum += pot(op(g, i));
    Rational value = sum / g.size();
    memo.emplace(g.players(), value);
    return value;
  };
  return pot(w);
}

inline PayoffVector r_shapley(const RestrictionOperator& op, const TuxGame& w) {
  return tu_shapley(auxiliary_game(op, w));
}

// Sh_i = Pot(w) - Pot(w_{-i}).
inline PayoffVector r_shapley_via_potential(const RestrictionOperator& op, const TuxGame& w) {
  const Rational whole = r_potential(op, w);
  PayoffVector out;
  for (PlayerId i : w.players().members()) out.emplace(i, whole - r_potential(op, op(w, i)));
  return out;
}

}  // namespace pfg
