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

// Games with externalities (partition function form) and their solutions.

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pfg/errors.hpp"
#include "pfg/partitions.hpp"
#include "pfg/random_partitions.hpp"
#include "pfg/rational.hpp"
#include "pfg/tu_games.hpp"

namespace pfg {

// Partition function w: E(N) -> Q with w(∅, pi) = 0, stored densely in the
// order of enumerate_embedded(N).
class TuxGame {
 public:
  // The null game on `players`.
  explicit TuxGame(PlayerSet players = PlayerSet())
      : players_(players), index_(&EmbeddedIndex::of(players)) {
    worth_.assign(index_->size(), Rational(0));
  }

  // Every embedded coalition with a nonempty coalition must be present;
  // cells with an empty coalition may be omitted and must be 0 if given.
  static TuxGame from_cells(PlayerSet players,
                            const std::map<EmbeddedCoalition, Rational>& cells) {
    TuxGame g(players);
    std::vector<bool> seen(g.index_->size(), false);
    for (const auto& [cell, v] : cells) {
      const std::size_t* pos = g.index_->find(cell);
      if (pos == nullptr)
        throw DomainError(to_string(cell) + " is not an embedded coalition of " +
                          to_string(players));
      if (cell.coalition.empty() && v != 0)
        throw DomainError("empty coalition must be worth 0 in " + to_string(cell));
      g.worth_[*pos] = v;
      seen[*pos] = true;
    }
    for (std::size_t k = 0; k < seen.size(); ++k) {
      const auto& cell = g.index_->cells()[k];
      if (!seen[k] && !cell.coalition.empty())
        throw DomainError("missing worth for " + to_string(cell));
    }
    return g;
  }

  // Fills every nonempty-coalition cell from f(cell).
  template <typename F>
  static TuxGame from_function(PlayerSet players, F&& f) {
    TuxGame g(players);
    const auto& cells = g.index_->cells();
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (!cells[k].coalition.empty()) g.worth_[k] = Rational(f(cells[k]));
    return g;
  }

  // The TU game v seen as a game without externalities.
  static TuxGame lift(const TuGame& v) {
    return from_function(v.players(),
                         [&](const EmbeddedCoalition& c) { return v.worth(c.coalition); });
  }

  PlayerSet players() const { return players_; }
  int size() const { return players_.size(); }
  const std::vector<EmbeddedCoalition>& cells() const { return index_->cells(); }
  const std::vector<Rational>& values() const { return worth_; }

  const Rational& worth(const EmbeddedCoalition& cell) const {
    return worth_[index_->position(cell)];
  }
  const Rational& worth(Coalition s, const Partition& outside) const {
    return worth(EmbeddedCoalition{s, outside});
  }

  void set_worth(const EmbeddedCoalition& cell, Rational v) {
    if (cell.coalition.empty() && v != 0) throw DomainError("empty coalition must be worth 0");
    worth_[index_->position(cell)] = std::move(v);
  }
  // Position-based access, aligned with cells().
  void set_value(std::size_t position, Rational v) {
    if (index_->cells()[position].coalition.empty() && v != 0)
      throw DomainError("empty coalition must be worth 0");
    worth_[position] = std::move(v);
  }

  bool is_null() const {
    for (const Rational& x : worth_)
      if (x != 0) return false;
    return true;
  }

  TuxGame& operator+=(const TuxGame& other) {
    if (other.players_ != players_) throw DomainError("adding games on different player sets");
    for (std::size_t k = 0; k < worth_.size(); ++k) worth_[k] += other.worth_[k];
    return *this;
  }
  TuxGame& operator-=(const TuxGame& other) { return *this += Rational(-1) * other; }
  friend TuxGame operator+(TuxGame a, const TuxGame& b) { return a += b; }
  friend TuxGame operator-(TuxGame a, const TuxGame& b) { return a -= b; }
  friend TuxGame operator*(const Rational& alpha, TuxGame g) {
    for (Rational& x : g.worth_) x *= alpha;
    return g;
  }
  friend bool operator==(const TuxGame& a, const TuxGame& b) {
    return a.players_ == b.players_ && a.worth_ == b.worth_;
  }

 private:
  PlayerSet players_;
  const EmbeddedIndex* index_;
  std::vector<Rational> worth_;
};

// delta_{T,tau}: worth 1 at (T, tau), 0 elsewhere.
inline TuxGame dirac_tux(PlayerSet players, Coalition t, const Partition& tau) {
  if (t.empty()) throw DomainError("Dirac game needs a nonempty coalition");
  if ((t | tau.ambient()) != players || !t.disjoint(tau.ambient()))
    throw DomainError(to_string(EmbeddedCoalition{t, tau}) +
                      " is not an embedded coalition of " + to_string(players));
  TuxGame g(players);
  g.set_worth(EmbeddedCoalition{t, tau}, 1);
  return g;
}

// Coefficients of w in the Dirac basis, one per cell with T ≠ ∅.
inline std::map<EmbeddedCoalition, Rational> dirac_decompose(const TuxGame& w) {
  std::map<EmbeddedCoalition, Rational> out;
  const auto& cells = w.cells();
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (!cells[k].coalition.empty()) out.emplace(cells[k], w.values()[k]);
  return out;
}

// sum_{(T,tau)} coefficient * delta_{T,tau}.
inline TuxGame dirac_rebuild(PlayerSet players,
                             const std::map<EmbeddedCoalition, Rational>& coefficients) {
  TuxGame out(players);
  for (const auto& [cell, c] : coefficients)
    if (c != 0) out += c * dirac_tux(players, cell.coalition, cell.outside);
  return out;
}

// The induced TU game when no worth depends on the outside partition.
inline std::optional<TuGame> is_externality_free(const TuxGame& w) {
  TuGame v(w.players());
  for (Coalition s : subsets(w.players())) {
    if (s.empty()) continue;
    const auto& outside = enumerate_partitions(w.players() - s);
    const Rational& first = w.worth(s, outside.front());
    for (const Partition& pi : outside)
      if (w.worth(s, pi) != first) return std::nullopt;
    v.set_worth(s, first);
  }
  return v;
}

// Average game: v(S) = sum_{pi in Pi(N\S)} p_{N\S}(pi) w(S, pi).
inline TuGame average_game(const TuxGame& w, const RandomPartitionFamily& family) {
  TuGame v(w.players());
  for (Coalition s : subsets(w.players())) {
    if (s.empty()) continue;
    PlayerSet rest = w.players() - s;
    const auto& outside = enumerate_partitions(rest);
    const Distribution& d = family.distribution(rest);
    Rational sum = 0;
    for (std::size_t k = 0; k < outside.size(); ++k)
      if (d[k] != 0) sum += d[k] * w.worth(s, outside[k]);
    v.set_worth(s, std::move(sum));
  }
  return v;
}

// The MPW solution: the Shapley value of the p*-average game.
inline PayoffVector mpw(const TuxGame& w) { return tu_shapley(average_game(w, pstar())); }

// The p-Shapley value of player i:
//   sum_{(T,tau) in E(N\i)} [ p_N({T∪i} ∪ tau) w(T∪i, tau)
//       - t/(n-t) sum_{B in tau ∪ {∅}} p_N({T} ∪ tau_{+i->B}) w(T, tau_{+i->B}) ].
inline Rational p_shapley(const TuxGame& w, const RandomPartitionFamily& family, PlayerId i) {
  if (!w.players().contains(i))
    throw DomainError("player " + std::to_string(i) + " not in " + to_string(w.players()));
  const PlayerSet players = w.players();
  const int n = players.size();
  Rational sum = 0;
  for (const EmbeddedCoalition& cell : enumerate_embedded(players.without(i))) {
    const Coalition t = cell.coalition;
    const Coalition with_i = t.with(i);
    sum += family.prob(players, cell.outside.with_block(with_i)) * w.worth(with_i, cell.outside);
    if (t.empty()) continue;
    Rational inner = 0;
    for (Coalition target : insertion_targets(cell.outside)) {
      Partition moved = insert_player(cell.outside, i, target);
      const Rational& p = family.prob(players, moved.with_block(t));
      if (p != 0) inner += p * w.worth(t, moved);
    }
    sum -= Rational(t.size(), n - t.size()) * inner;
  }
  return sum;
}

inline PayoffVector p_shapley_vector(const TuxGame& w, const RandomPartitionFamily& family) {
  PayoffVector out;
  for (PlayerId i : w.players().members()) out.emplace(i, p_shapley(w, family, i));
  return out;
}

// E_p(w) = sum_pi p_N(pi) sum_{S in pi} w(S, pi \ {S}).
inline Rational expected_accumulated_worth(const TuxGame& w, const RandomPartitionFamily& family) {
  const auto& all = enumerate_partitions(w.players());
  const Distribution& d = family.distribution(w.players());
  Rational sum = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (d[k] == 0) continue;
    Rational acc = 0;
    for (Coalition s : all[k].blocks()) acc += w.worth(s, all[k].without_block(s));
    sum += d[k] * acc;
  }
  return sum;
}

// i is null iff w(S ∪ i, pi) = w(S, pi_{+i->B}) for all (S, pi) in E(N\i)
// and B in pi ∪ {∅}.
inline bool is_null_player(const TuxGame& w, PlayerId i) {
  if (!w.players().contains(i))
    throw DomainError("player " + std::to_string(i) + " not in " + to_string(w.players()));
  for (const EmbeddedCoalition& cell : enumerate_embedded(w.players().without(i))) {
    const Rational& joined = w.worth(cell.coalition.with(i), cell.outside);
    for (Coalition target : insertion_targets(cell.outside))
      if (w.worth(cell.coalition, insert_player(cell.outside, i, target)) != joined) return false;
  }
  return true;
}

// w^alpha_{i,pi,B} = alpha delta_{B∪i, pi\B}
//                    + sum_{C in (pi\B) ∪ {∅}} alpha delta_{B, (pi\B)_{+i->C}}.
// Player i is null in it by construction.
inline TuxGame null_player_witness(PlayerSet players, PlayerId i, const Partition& pi,
                                   Coalition block, const Rational& alpha = 1) {
  if (!players.contains(i)) throw DomainError("witness player not in the player set");
  if (pi.ambient() != players.without(i))
    throw DomainError(to_string(pi) + " is not a partition of N \\ {" + std::to_string(i) + "}");
  const Partition rest = pi.without_block(block);
  TuxGame w = alpha * dirac_tux(players, block.with(i), rest);
  for (Coalition target : insertion_targets(rest))
    w += alpha * dirac_tux(players, block, insert_player(rest, i, target));
  return w;
}

// Four-player game in which player 1 is null, players 2 and 3 are productive
// and player 4 only exerts externalities: a lone productive player in S
// earns 1 unless 4 sits in the block of the other productive player.
inline TuxGame externality_example() {
  return TuxGame::from_function(Coalition::of({1, 2, 3, 4}), [](const EmbeddedCoalition& c) {
    const bool has2 = c.coalition.contains(2);
    const bool has3 = c.coalition.contains(3);
    if (has2 && has3) return 1;
    if (has2 && !c.outside.block_of(3).contains(4)) return 1;
    if (has3 && !c.outside.block_of(2).contains(4)) return 1;
    return 0;
  });
}

}  // namespace pfg
