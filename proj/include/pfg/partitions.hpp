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

// Coalitions, partitions and embedded coalitions over small player sets.
//
// Players are ids in [0, 63]; a coalition is a 64-bit mask. A partition keeps
// its blocks sorted by least member, so structural equality is identity and
// partitions can key hash maps directly. Enumerations are cached per player
// set and returned by const reference; the caches only ever grow, so the
// references stay valid for the life of the process.

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pfg/errors.hpp"

namespace pfg {

using PlayerId = int;
inline constexpr PlayerId kMaxPlayerId = 63;
inline constexpr int kDefaultUniverseBound = 8;

class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t bits) : bits_(bits) {}

  static Coalition of(std::initializer_list<PlayerId> players) {
    return from(std::span<const PlayerId>(players.begin(), players.size()));
  }
  static Coalition from(std::span<const PlayerId> players) {
    Coalition c;
    for (PlayerId i : players) {
      if (c.contains(i)) throw DomainError("duplicate player " + std::to_string(i));
      c = c.with(i);
    }
    return c;
  }
  static Coalition single(PlayerId i) { return Coalition().with(i); }
  // {1, ..., n}
  static Coalition first_n(int n) {
    Coalition c;
    for (PlayerId i = 1; i <= n; ++i) c = c.with(i);
    return c;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(PlayerId i) const {
    return i >= 0 && i <= kMaxPlayerId && ((bits_ >> i) & 1u) != 0;
  }
  constexpr bool subset_of(Coalition other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(Coalition other) const { return (bits_ & other.bits_) == 0; }
  // Undefined on the empty coalition.
  constexpr PlayerId least() const { return std::countr_zero(bits_); }
  constexpr PlayerId greatest() const { return 63 - std::countl_zero(bits_); }

  Coalition with(PlayerId i) const {
    if (i < 0 || i > kMaxPlayerId)
      throw DomainError("player id " + std::to_string(i) + " outside [0, 63]");
    return Coalition(bits_ | (std::uint64_t{1} << i));
  }
  constexpr Coalition without(PlayerId i) const {
    return contains(i) ? Coalition(bits_ & ~(std::uint64_t{1} << i)) : *this;
  }

  std::vector<PlayerId> members() const {
    std::vector<PlayerId> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr Coalition operator|(Coalition o) const { return Coalition(bits_ | o.bits_); }
  constexpr Coalition operator&(Coalition o) const { return Coalition(bits_ & o.bits_); }
  constexpr Coalition operator-(Coalition o) const { return Coalition(bits_ & ~o.bits_); }

  constexpr auto operator<=>(const Coalition&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// A player set is a coalition of the universe.
using PlayerSet = Coalition;

// All subsets of `set` in ascending mask order (so the empty set first).
inline std::vector<Coalition> subsets(Coalition set) {
  std::vector<Coalition> out;
  out.reserve(std::size_t{1} << set.size());
  std::uint64_t full = set.bits();
  std::uint64_t s = 0;
  do {
    out.emplace_back(s);
    s = (s - full) & full;
  } while (s != 0);
  return out;
}

// Configured maximum player-set cardinality. PFG_UNIVERSE_BOUND overrides the
// default of 8; it is read once.
inline int universe_bound() {
  static const int bound = [] {
    const char* env = std::getenv("PFG_UNIVERSE_BOUND");
    if (env == nullptr || *env == '\0') return kDefaultUniverseBound;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0 || v > 16)
      throw ParseError("PFG_UNIVERSE_BOUND must be an integer in [0, 16]");
    return static_cast<int>(v);
  }();
  return bound;
}

inline void check_capacity(PlayerSet players) {
  if (players.size() > universe_bound())
    throw CapacityError("player set of size " + std::to_string(players.size()) +
                        " exceeds the universe bound " + std::to_string(universe_bound()));
}

class Partition {
 public:
  // The empty partition, the unique partition of the empty set.
  Partition() = default;

  // Validates (nonempty, pairwise disjoint blocks) and canonicalizes.
  explicit Partition(std::vector<Coalition> blocks) : blocks_(std::move(blocks)) {
    Coalition seen;
    for (Coalition b : blocks_) {
      if (b.empty()) throw DomainError("partition has an empty block");
      if (!b.disjoint(seen)) throw DomainError("partition blocks overlap");
      seen = seen | b;
    }
    canonicalize();
  }

  static Partition of(std::initializer_list<std::initializer_list<PlayerId>> blocks) {
    std::vector<Coalition> bs;
    for (auto b : blocks) bs.push_back(Coalition::of(b));
    return Partition(std::move(bs));
  }

  // {{i} : i in players}
  static Partition atomistic(PlayerSet players) {
    std::vector<Coalition> bs;
    for (PlayerId i : players.members()) bs.push_back(Coalition::single(i));
    return from_canonical(std::move(bs));
  }

  const std::vector<Coalition>& blocks() const { return blocks_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  bool empty() const { return blocks_.empty(); }

  PlayerSet ambient() const {
    Coalition u;
    for (Coalition b : blocks_) u = u | b;
    return u;
  }

  bool contains_block(Coalition b) const {
    return std::find(blocks_.begin(), blocks_.end(), b) != blocks_.end();
  }

  // The block containing i, or the empty coalition.
  Coalition block_of(PlayerId i) const {
    for (Coalition b : blocks_)
      if (b.contains(i)) return b;
    return Coalition();
  }

  // pi \ {B}
  Partition without_block(Coalition b) const {
    std::vector<Coalition> out;
    out.reserve(blocks_.size());
    bool found = false;
    for (Coalition c : blocks_) {
      if (c == b) {
        found = true;
      } else {
        out.push_back(c);
      }
    }
    if (!found) throw DomainError("not a block of the partition");
    return from_canonical(std::move(out));
  }

  // pi ∪ {B}; B must be nonempty and disjoint from the ambient set.
  Partition with_block(Coalition b) const {
    if (b.empty()) throw DomainError("cannot add an empty block");
    if (!b.disjoint(ambient())) throw DomainError("block overlaps the partition");
    std::vector<Coalition> out;
    out.reserve(blocks_.size() + 1);
    auto least = b.least();
    bool placed = false;
    for (Coalition c : blocks_) {
      if (!placed && least < c.least()) {
        out.push_back(b);
        placed = true;
      }
      out.push_back(c);
    }
    if (!placed) out.push_back(b);
    return from_canonical(std::move(out));
  }

  auto operator<=>(const Partition&) const = default;

  // Blocks must already be valid and sorted by least member.
  static Partition from_canonical(std::vector<Coalition> blocks) {
    Partition p;
    p.blocks_ = std::move(blocks);
    return p;
  }

 private:
  void canonicalize() {
    std::sort(blocks_.begin(), blocks_.end(),
              [](Coalition a, Coalition b) { return a.least() < b.least(); });
  }

  std::vector<Coalition> blocks_;
};

// A coalition S with a partition of the remaining players.
struct EmbeddedCoalition {
  Coalition coalition;
  Partition outside;

  PlayerSet ambient() const { return coalition | outside.ambient(); }
  auto operator<=>(const EmbeddedCoalition&) const = default;
};

// Adds player i to block `target` of pi, or as a singleton when `target` is
// empty.
inline Partition insert_player(const Partition& pi, PlayerId i, Coalition target) {
  if (pi.ambient().contains(i))
    throw DomainError("player " + std::to_string(i) + " already in the partition");
  if (target.empty()) return pi.with_block(Coalition::single(i));
  if (!pi.contains_block(target)) throw DomainError("insertion target is not a block");
  std::vector<Coalition> out = pi.blocks();
  for (Coalition& b : out)
    if (b == target) b = b.with(i);
  // The merged block keeps its least member unless i is smaller; re-sort.
  return Partition(std::move(out));
}

// pi_{-T}: every block loses the players of T, empty blocks are dropped.
inline Partition delete_players(const Partition& pi, Coalition removed) {
  if (!removed.subset_of(pi.ambient()))
    throw DomainError("removed players are not all in the partition");
  std::vector<Coalition> out;
  out.reserve(pi.blocks().size());
  for (Coalition b : pi.blocks()) {
    Coalition rest = b - removed;
    if (!rest.empty()) out.push_back(rest);
  }
  return Partition(std::move(out));
}

inline std::string to_string(Coalition c) {
  std::string out = "[";
  bool first = true;
  for (PlayerId i : c.members()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "]";
}

// [[1,2],[3]]
inline std::string to_string(const Partition& pi) {
  std::string out = "[";
  for (std::size_t k = 0; k < pi.blocks().size(); ++k) {
    if (k > 0) out += ",";
    out += to_string(pi.blocks()[k]);
  }
  return out + "]";
}

inline std::string to_string(const EmbeddedCoalition& e) {
  return "(" + to_string(e.coalition) + ", " + to_string(e.outside) + ")";
}

// Targets for inserting a player into pi: every block, then the empty
// coalition standing for "as a singleton".
inline std::vector<Coalition> insertion_targets(const Partition& pi) {
  std::vector<Coalition> out = pi.blocks();
  out.push_back(Coalition());
  return out;
}

}  // namespace pfg

template <>
struct std::hash<pfg::Coalition> {
  std::size_t operator()(pfg::Coalition c) const noexcept {
    return std::hash<std::uint64_t>{}(c.bits());
  }
};

template <>
struct std::hash<pfg::Partition> {
  std::size_t operator()(const pfg::Partition& p) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (pfg::Coalition b : p.blocks()) {
      h ^= b.bits() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

template <>
struct std::hash<pfg::EmbeddedCoalition> {
  std::size_t operator()(const pfg::EmbeddedCoalition& e) const noexcept {
    std::size_t h = std::hash<pfg::Partition>{}(e.outside);
    return h ^ (std::hash<std::uint64_t>{}(e.coalition.bits()) * 0xff51afd7ed558ccdull);
  }
};

namespace pfg {

namespace detail {

inline std::vector<Partition> generate_partitions(PlayerSet players) {
  std::vector<PlayerId> members = players.members();
  const std::size_t n = members.size();
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Restricted growth strings in lexicographic order: {N} first, the
  // atomistic partition last.
  std::vector<int> label(n, 0);
  std::vector<int> running_max(n, 0);
  while (true) {
    int blocks = running_max[n - 1] + 1;
    std::vector<Coalition> bs(blocks);
    for (std::size_t k = 0; k < n; ++k) bs[label[k]] = bs[label[k]].with(members[k]);
    // Block j first appears before block j+1, so least members are increasing.
    out.push_back(Partition::from_canonical(std::move(bs)));

    std::size_t k = n - 1;
    while (k > 0 && label[k] == running_max[k - 1] + 1) --k;
    if (k == 0) break;
    ++label[k];
    running_max[k] = std::max(running_max[k - 1], label[k]);
    for (std::size_t m = k + 1; m < n; ++m) {
      label[m] = 0;
      running_max[m] = running_max[k];
    }
  }
  return out;
}

template <typename Value>
class SetCache {
 public:
  template <typename Make>
  const Value& get(PlayerSet players, Make&& make) {
    {
      std::lock_guard lock(mutex_);
      auto it = map_.find(players.bits());
      if (it != map_.end()) return it->second;
    }
    Value value = make();
    std::lock_guard lock(mutex_);
    return map_.try_emplace(players.bits(), std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<std::uint64_t, Value> map_;
};

}  // namespace detail

// Pi(N): Bell(n) canonical partitions in a fixed order.
inline const std::vector<Partition>& enumerate_partitions(PlayerSet players) {
  check_capacity(players);
  static detail::SetCache<std::vector<Partition>> cache;
  return cache.get(players, [&] { return detail::generate_partitions(players); });
}

// Positions of the partitions of a player set within enumerate_partitions.
class PartitionIndex {
 public:
  explicit PartitionIndex(PlayerSet players) : players_(players) {
    const auto& all = enumerate_partitions(players);
    for (std::size_t k = 0; k < all.size(); ++k) position_.emplace(all[k], k);
  }

  PlayerSet players() const { return players_; }

  // Throws DomainError when pi is not a partition of the player set.
  std::size_t position(const Partition& pi) const {
    auto it = position_.find(pi);
    if (it == position_.end())
      throw DomainError(to_string(pi) + " is not a partition of the player set");
    return it->second;
  }

  static const PartitionIndex& of(PlayerSet players) {
    check_capacity(players);
    static detail::SetCache<PartitionIndex> cache;
    return cache.get(players, [&] { return PartitionIndex(players); });
  }

 private:
  PlayerSet players_;
  std::unordered_map<Partition, std::size_t> position_;
};

// Positions of the embedded coalitions of a player set, for dense storage.
class EmbeddedIndex {
 public:
  explicit EmbeddedIndex(PlayerSet players) : players_(players) {
    for (Coalition s : subsets(players)) {
      for (const Partition& pi : enumerate_partitions(players - s)) {
        position_.emplace(EmbeddedCoalition{s, pi}, cells_.size());
        cells_.push_back(EmbeddedCoalition{s, pi});
      }
    }
  }

  PlayerSet players() const { return players_; }
  const std::vector<EmbeddedCoalition>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  // Throws DomainError when the cell is not an embedded coalition of the set.
  std::size_t position(const EmbeddedCoalition& cell) const {
    auto it = position_.find(cell);
    if (it == position_.end()) throw DomainError("not an embedded coalition of the player set");
    return it->second;
  }
  const std::size_t* find(const EmbeddedCoalition& cell) const {
    auto it = position_.find(cell);
    return it == position_.end() ? nullptr : &it->second;
  }

  static const EmbeddedIndex& of(PlayerSet players) {
    check_capacity(players);
    static detail::SetCache<EmbeddedIndex> cache;
    return cache.get(players, [&] { return EmbeddedIndex(players); });
  }

 private:
  PlayerSet players_;
  std::vector<EmbeddedCoalition> cells_;
  std::unordered_map<EmbeddedCoalition, std::size_t> position_;
};

// E(N): all (S, pi) with S ⊆ N and pi ∈ Pi(N \ S), S in ascending mask order.
inline const std::vector<EmbeddedCoalition>& enumerate_embedded(PlayerSet players) {
  return EmbeddedIndex::of(players).cells();
}

}  // namespace pfg
