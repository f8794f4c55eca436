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

// Seeded pseudorandom games and basis enumerations.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pfg/partitions.hpp"
#include "pfg/rational.hpp"
#include "pfg/tu_games.hpp"
#include "pfg/tux_games.hpp"

namespace pfg {

namespace detail {

// Engine outputs are fixed by the standard; distributions are not, so the
// mapping to integers is done here to keep games identical across platforms.
inline std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

}  // namespace detail

// Numerator in [-12, 12], denominator in [1, 7].
inline Rational random_rational(std::mt19937_64& rng) {
  const std::int64_t num = detail::draw_int(rng, -12, 12);
  const std::int64_t den = detail::draw_int(rng, 1, 7);
  return make_rational(num, den);
}

inline TuGame random_tu_game(PlayerSet players, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TuGame v(players);
  for (Coalition s : subsets(players))
    if (!s.empty()) v.set_worth(s, random_rational(rng));
  return v;
}

inline TuxGame random_tux_game(PlayerSet players, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return TuxGame::from_function(players, [&](const EmbeddedCoalition&) { return random_rational(rng); });
}

// `count` games on {1..n} with n cycling through 1..n_max.
inline std::vector<TuGame> random_tu_corpus(int count, int n_max, std::uint64_t seed) {
  std::vector<TuGame> out;
  for (int k = 0; k < count; ++k)
    out.push_back(random_tu_game(Coalition::first_n(1 + k % n_max), seed + k));
  return out;
}

inline std::vector<TuxGame> random_tux_corpus(int count, int n, std::uint64_t seed) {
  std::vector<TuxGame> out;
  for (int k = 0; k < count; ++k) out.push_back(random_tux_game(Coalition::first_n(n), seed + k));
  return out;
}

// The cells (T, tau) with T ≠ ∅, i.e. the support of the Dirac TUX basis.
inline std::vector<EmbeddedCoalition> dirac_cells(PlayerSet players) {
  std::vector<EmbeddedCoalition> out;
  for (const EmbeddedCoalition& c : enumerate_embedded(players))
    if (!c.coalition.empty()) out.push_back(c);
  return out;
}

inline std::vector<TuGame> dirac_tu_basis(PlayerSet players) {
  std::vector<TuGame> out;
  for (Coalition t : subsets(players))
    if (!t.empty()) out.push_back(dirac_tu(players, t));
  return out;
}

inline std::vector<TuGame> unanimity_tu_basis(PlayerSet players) {
  std::vector<TuGame> out;
  for (Coalition t : subsets(players))
    if (!t.empty()) out.push_back(unanimity_tu(players, t));
  return out;
}

}  // namespace pfg
