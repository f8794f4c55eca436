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

// Outcome of a property check, with a replayable counterexample on failure.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pfg/partitions.hpp"
#include "pfg/rational.hpp"
#include "pfg/tux_games.hpp"

namespace pfg {

// A single instance on which a property fails: the identity `what` evaluates
// to lhs on the left and rhs on the right, and lhs != rhs.
struct Witness {
  PlayerSet players;
  std::optional<Coalition> coalition{};
  std::optional<Partition> partition{};
  std::optional<Coalition> block{};
  std::optional<PlayerId> player{};
  std::optional<PlayerId> other_player{};
  std::optional<TuxGame> game{};
  // Second game of a comparison pair, when the property relates two games.
  std::optional<TuxGame> reference_game{};
  std::string what;
  Rational lhs;
  Rational rhs;
};

struct Report {
  std::string subject;
  bool passed = true;
  std::size_t checked = 0;
  std::optional<Witness> witness{};

  // Records one instance; keeps the first failure only.
  void record(bool ok, const std::function<Witness()>& make_witness) {
    ++checked;
    if (ok || !passed) return;
    passed = false;
    witness = make_witness();
  }
};

inline std::string describe(const Witness& w) {
  std::string out = w.what + " on N = " + to_string(w.players);
  if (w.player) out += ", i = " + std::to_string(*w.player);
  if (w.other_player) out += ", j = " + std::to_string(*w.other_player);
  if (w.coalition) out += ", S = " + to_string(*w.coalition);
  if (w.partition) out += ", pi = " + to_string(*w.partition);
  if (w.block) out += ", B = " + to_string(*w.block);
  return out + ": " + to_string(w.lhs) + " != " + to_string(w.rhs);
}

namespace detail {

// Nonempty subsets of {1, ..., n_max}, by size and then by mask.
inline std::vector<PlayerSet> player_sets_up_to(int n_max) {
  if (n_max > universe_bound())
    throw CapacityError("check bound " + std::to_string(n_max) + " exceeds the universe bound " +
                        std::to_string(universe_bound()));
  std::vector<PlayerSet> out;
  for (Coalition s : subsets(Coalition::first_n(n_max)))
    if (!s.empty()) out.push_back(s);
  std::stable_sort(out.begin(), out.end(),
                   [](Coalition a, Coalition b) { return a.size() < b.size(); });
  return out;
}

}  // namespace detail

}  // namespace pfg
