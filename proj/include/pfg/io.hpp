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

// JSON file formats and the family / operator descriptor strings.
//
//   TU game:   {"players": [1,2,3], "worth": {"[1,2]": "3/2", ...}}
//              omitted coalitions are worth 0.
//   TUX game:  {"players": [...], "worth": [{"S": [2,3], "pi": [[1],[4]], "w": "1"}, ...]}
//              every embedded coalition with S ≠ ∅ must be listed.
//   Family:    {"n": 4, "entries": [{"partition": [[1,2],[3,4]], "prob": "1/24"}, ...]}
//              on players {1..n}; omitted partitions have probability 0.
//
// Rationals are "p/q" or "p" strings; JSON integers are accepted on input.
// Families:  pstar | ewens:<p/q> | eps:<k>=<p/q>[,<k>=<p/q>...] | table:<path>
// Operators: rstar | nullify | rp:<family>

#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "pfg/errors.hpp"
#include "pfg/partitions.hpp"
#include "pfg/random_partitions.hpp"
#include "pfg/rational.hpp"
#include "pfg/report.hpp"
#include "pfg/restriction_ops.hpp"
#include "pfg/sampling.hpp"
#include "pfg/tu_games.hpp"
#include "pfg/tux_games.hpp"

namespace pfg::io {

// Insertion-ordered so that output follows player and enumeration order.
using json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& message) {
  throw ParseError(where + ": " + message);
}

inline const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

}  // namespace detail

inline Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) detail::fail(where, "expected a rational string such as \"3/2\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    detail::fail(where, e.what());
  }
}

inline Coalition coalition_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) detail::fail(where, "expected an array of player ids");
  Coalition c;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "/" + std::to_string(k);
    if (!j[k].is_number_integer()) detail::fail(at, "expected a player id");
    const auto id = j[k].get<std::int64_t>();
    if (id < 0 || id > kMaxPlayerId)
      detail::fail(at, "player id " + std::to_string(id) + " outside [0, 63]");
    if (c.contains(static_cast<PlayerId>(id)))
      detail::fail(at, "duplicate player " + std::to_string(id));
    c = c.with(static_cast<PlayerId>(id));
  }
  return c;
}

inline Partition partition_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) detail::fail(where, "expected an array of blocks");
  std::vector<Coalition> blocks;
  for (std::size_t k = 0; k < j.size(); ++k)
    blocks.push_back(coalition_from_json(j[k], where + "/" + std::to_string(k)));
  try {
    return Partition(std::move(blocks));
  } catch (const DomainError& e) {
    detail::fail(where, e.what());
  }
}

inline json to_json(Coalition c) { return json(c.members()); }

inline json to_json(const Partition& pi) {
  json out = json::array();
  for (Coalition b : pi.blocks()) out.push_back(to_json(b));
  return out;
}

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const PayoffVector& payoffs) {
  json out = json::object();
  for (const auto& [i, x] : payoffs) out[std::to_string(i)] = to_string(x);
  return out;
}

inline TuGame tu_game_from_json(const json& j) {
  const PlayerSet players = coalition_from_json(detail::member(j, "players", ""), "/players");
  check_capacity(players);
  const json& worth = detail::member(j, "worth", "");
  if (!worth.is_object()) detail::fail("/worth", "expected an object keyed by coalitions");
  TuGame v(players);
  for (const auto& [key, value] : worth.items()) {
    const std::string where = "/worth/" + key;
    json parsed = json::parse(key, nullptr, false);
    if (parsed.is_discarded()) detail::fail(where, "coalition key is not a JSON array");
    const Coalition s = coalition_from_json(parsed, where);
    if (!s.subset_of(players)) detail::fail(where, "coalition is not a subset of the players");
    const Rational x = rational_from_json(value, where);
    if (s.empty()) {
      if (x != 0) detail::fail(where, "the empty coalition must be worth 0");
      continue;
    }
    v.set_worth(s, x);
  }
  return v;
}

inline json to_json(const TuGame& v) {
  json worth = json::object();
  for (Coalition s : subsets(v.players()))
    if (!s.empty()) worth[to_json(s).dump()] = to_string(v.worth(s));
  return {{"players", to_json(v.players())}, {"worth", worth}};
}

inline TuxGame tux_game_from_json(const json& j) {
  const PlayerSet players = coalition_from_json(detail::member(j, "players", ""), "/players");
  check_capacity(players);
  const json& worth = detail::member(j, "worth", "");
  if (!worth.is_array()) detail::fail("/worth", "expected an array of embedded coalitions");
  std::map<EmbeddedCoalition, Rational> cells;
  for (std::size_t k = 0; k < worth.size(); ++k) {
    const std::string where = "/worth/" + std::to_string(k);
    const json& entry = worth[k];
    EmbeddedCoalition cell{coalition_from_json(detail::member(entry, "S", where), where + "/S"),
                           partition_from_json(detail::member(entry, "pi", where), where + "/pi")};
    if (!cell.coalition.disjoint(cell.outside.ambient()) || cell.ambient() != players)
      detail::fail(where, to_string(cell) + " is not an embedded coalition of " +
                              to_string(players));
    if (!cells.emplace(cell, rational_from_json(detail::member(entry, "w", where), where + "/w"))
             .second)
      detail::fail(where, "duplicate entry for " + to_string(cell));
  }
  try {
    return TuxGame::from_cells(players, cells);
  } catch (const DomainError& e) {
    detail::fail("/worth", e.what());
  }
}

inline json to_json(const TuxGame& w) {
  json worth = json::array();
  for (std::size_t k = 0; k < w.cells().size(); ++k) {
    const EmbeddedCoalition& cell = w.cells()[k];
    if (cell.coalition.empty()) continue;
    worth.push_back({{"S", to_json(cell.coalition)},
                     {"pi", to_json(cell.outside)},
                     {"w", to_string(w.values()[k])}});
  }
  return {{"players", to_json(w.players())}, {"worth", worth}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

using AnyGame = std::variant<TuGame, TuxGame>;

// A TUX file lists its worths in an array, a TU file in an object.
inline AnyGame game_from_json(const json& j) {
  const json& worth = detail::member(j, "worth", "");
  if (worth.is_array()) return tux_game_from_json(j);
  return tu_game_from_json(j);
}

inline AnyGame load_game(const std::string& path) {
  const json j = read_json_file(path);
  try {
    return game_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what());
  }
}

inline RandomPartitionFamily family_from_json(const json& j, std::string label) {
  const json& n_json = detail::member(j, "n", "");
  if (!n_json.is_number_integer() || n_json.get<std::int64_t>() < 0 ||
      n_json.get<std::int64_t>() > kMaxPlayerId)
    detail::fail("/n", "expected a player count");
  const PlayerSet players = Coalition::first_n(static_cast<int>(n_json.get<std::int64_t>()));
  check_capacity(players);
  const json& entries = detail::member(j, "entries", "");
  if (!entries.is_array()) detail::fail("/entries", "expected an array");
  std::map<Partition, Rational> probs;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string where = "/entries/" + std::to_string(k);
    Partition pi = partition_from_json(detail::member(entries[k], "partition", where),
                                       where + "/partition");
    if (pi.ambient() != players)
      detail::fail(where, to_string(pi) + " is not a partition of " + to_string(players));
    Rational p = rational_from_json(detail::member(entries[k], "prob", where), where + "/prob");
    if (!probs.emplace(std::move(pi), std::move(p)).second)
      detail::fail(where, "duplicate partition");
  }
  try {
    return table_family(players, probs, std::move(label));
  } catch (const DomainError& e) {
    detail::fail("/entries", e.what());
  }
}

inline json family_to_json(const RandomPartitionFamily& family, PlayerSet players) {
  json entries = json::array();
  const auto& all = enumerate_partitions(players);
  const Distribution& d = family.distribution(players);
  for (std::size_t k = 0; k < all.size(); ++k)
    entries.push_back({{"partition", to_json(all[k])}, {"prob", to_string(d[k])}});
  return {{"n", players.size()}, {"entries", entries}};
}

inline RandomPartitionFamily parse_family(std::string_view text) {
  auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? "" : text.substr(colon + 1);
  if (text == "pstar") return pstar();
  if (head == "ewens" && !rest.empty()) {
    try {
      return ewens_family(parse_rational(rest));
    } catch (const DomainError& e) {
      throw ParseError("family '" + std::string(text) + "': " + e.what());
    }
  }
  if (head == "eps" && !rest.empty()) {
    std::map<int, Rational> values;
    std::string_view remaining = rest;
    while (!remaining.empty()) {
      auto comma = remaining.find(',');
      std::string_view item = remaining.substr(0, comma);
      remaining = comma == std::string_view::npos ? "" : remaining.substr(comma + 1);
      auto eq = item.find('=');
      if (eq == std::string_view::npos)
        throw ParseError("family '" + std::string(text) + "': expected k=p/q");
      const std::string key(item.substr(0, eq));
      if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("family '" + std::string(text) + "': bad size '" + key + "'");
      values[std::stoi(key)] = parse_rational(item.substr(eq + 1));
    }
    try {
      return perturbed_family(EpsilonProfile(std::move(values)));
    } catch (const DomainError& e) {
      throw ParseError("family '" + std::string(text) + "': " + e.what());
    }
  }
  if (head == "table" && !rest.empty()) {
    const std::string path(rest);
    const json j = read_json_file(path);
    try {
      return family_from_json(j, "table:" + path);
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + e.what());
    }
  }
  throw ParseError("unknown family '" + std::string(text) +
                   "' (expected pstar, ewens:<p/q>, eps:<k>=<p/q>,... or table:<path>)");
}

inline RestrictionOperator parse_operator(std::string_view text) {
  if (text == "rstar") return RestrictionOperator::rstar();
  if (text == "nullify") return RestrictionOperator::nullifying();
  if (text.substr(0, 3) == "rp:") return RestrictionOperator::rp(parse_family(text.substr(3)));
  throw ParseError("unknown operator '" + std::string(text) +
                   "' (expected rstar, nullify or rp:<family>)");
}

inline json to_json(const Witness& w) {
  json out = {{"players", to_json(w.players)}, {"what", w.what},
              {"lhs", to_string(w.lhs)}, {"rhs", to_string(w.rhs)}};
  if (w.coalition) out["S"] = to_json(*w.coalition);
  if (w.partition) out["pi"] = to_json(*w.partition);
  if (w.block) out["B"] = to_json(*w.block);
  if (w.player) out["i"] = *w.player;
  if (w.other_player) out["j"] = *w.other_player;
  if (w.game) out["game"] = to_json(*w.game);
  if (w.reference_game) out["reference_game"] = to_json(*w.reference_game);
  return out;
}

inline json to_json(const Report& r) {
  json out = {{"subject", r.subject}, {"passed", r.passed}, {"checked", r.checked}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

inline json to_json(const SampleEstimate& e) {
  return {{"mean", e.mean}, {"std_error", e.std_error}, {"samples", e.n_samples},
          {"seed", e.seed}, {"algorithm", e.algorithm}};
}

}  // namespace pfg::io
