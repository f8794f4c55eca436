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

// Monte Carlo sampling: the uniform Chinese restaurant process and unbiased
// estimators of Shapley and MPW payoffs.
//
// Draws are split into shards of kShardSize. Shard s runs its own
// std::mt19937_64 seeded through std::seed_seq{seed_lo, seed_hi, s}, and
// integers are mapped to ranges by rejection, so results depend only on
// (seed, n_samples). Shard statistics are merged in shard order, which makes
// the output independent of the number of worker threads.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "pfg/errors.hpp"
#include "pfg/partitions.hpp"
#include "pfg/tu_games.hpp"
#include "pfg/tux_games.hpp"

namespace pfg {

inline constexpr std::size_t kShardSize = 4096;
inline constexpr std::string_view kSamplerAlgorithm =
    "mt19937_64/seed_seq(seed_lo,seed_hi,shard)/rejection-mod/shard-4096";

struct SampleEstimate {
  double mean = 0;
  double std_error = 0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  std::string algorithm{kSamplerAlgorithm};
};

enum class Target { kShapley, kMpw };

inline Target parse_target(std::string_view name) {
  if (name == "shapley") return Target::kShapley;
  if (name == "mpw") return Target::kMpw;
  throw DomainError("unknown estimation target '" + std::string(name) + "'");
}

namespace detail {

inline std::mt19937_64 shard_engine(std::uint64_t seed, std::size_t shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard)};
  return std::mt19937_64(seq);
}

// Uniform on [0, k), k >= 1.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % k;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % k;
}

inline std::vector<PlayerId> random_order(std::mt19937_64& rng, PlayerSet players) {
  std::vector<PlayerId> order = players.members();
  for (std::size_t k = order.size(); k > 1; --k)
    std::swap(order[k - 1], order[uniform_below(rng, k)]);
  return order;
}

// Seats players in random order; the k-th arrival opens a table with
// probability 1/k and otherwise sits next to a uniformly chosen earlier one.
inline Partition draw_crp(std::mt19937_64& rng, PlayerSet players) {
  const std::vector<PlayerId> order = random_order(rng, players);
  std::vector<Coalition> tables;
  std::vector<std::size_t> table_of(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::uint64_t r = uniform_below(rng, k + 1);
    if (r == k) {
      table_of[k] = tables.size();
      tables.push_back(Coalition::single(order[k]));
    } else {
      table_of[k] = table_of[r];
      tables[table_of[k]] = tables[table_of[k]].with(order[k]);
    }
  }
  return Partition(std::move(tables));
}

struct Moments {
  std::size_t count = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }
  void merge(const Moments& o) {
    if (o.count == 0) return;
    const double total = static_cast<double>(count + o.count);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.count) / total;
    m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) / total;
    count += o.count;
  }
};

inline std::size_t shard_count(std::size_t n) { return (n + kShardSize - 1) / kShardSize; }

// Runs draw(rng) n_samples times across shards and merges in shard order.
template <typename Draw>
SampleEstimate run_shards(std::size_t n_samples, std::uint64_t seed, unsigned workers, Draw draw) {
  if (n_samples == 0) throw DomainError("at least one sample is required");
  const std::size_t shards = shard_count(n_samples);
  std::vector<Moments> parts(shards);
  auto run = [&](std::size_t s) {
    std::mt19937_64 rng = shard_engine(seed, s);
    const std::size_t end = std::min(n_samples, (s + 1) * kShardSize);
    for (std::size_t d = s * kShardSize; d < end; ++d) parts[s].add(draw(rng));
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(shards)));
  if (workers == 1) {
    for (std::size_t s = 0; s < shards; ++s) run(s);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t s = t; s < shards; s += workers) run(s);
      });
    for (auto& th : pool) th.join();
  }
  Moments total;
  for (const Moments& m : parts) total.merge(m);
  SampleEstimate out;
  out.mean = total.mean;
  out.std_error =
      total.count > 1 ? std::sqrt(total.m2 / static_cast<double>(total.count - 1) /
                                  static_cast<double>(total.count))
                      : 0.0;
  out.n_samples = total.count;
  out.seed = seed;
  return out;
}

// One draw of the MPW marginal: a uniform order gives the predecessors S of
// i, and independent CRP draws give outside partitions for S ∪ i and for S.
template <typename Worth>
double mpw_draw(std::mt19937_64& rng, PlayerSet players, PlayerId i, const Worth& worth) {
  const std::vector<PlayerId> order = random_order(rng, players);
  Coalition before;
  for (PlayerId j : order) {
    if (j == i) break;
    before = before.with(j);
  }
  const Coalition joined = before.with(i);
  const Partition with_i = draw_crp(rng, players - joined);
  const Partition without_i = draw_crp(rng, players - before);
  Rational gain = worth(joined, with_i);
  if (!before.empty()) gain -= worth(before, without_i);
  return to_double(gain);
}

// One draw of the CRP form of the Shapley value: i enters last, weight 1/n
// for a new table and s/n for joining table S.
inline double shapley_draw(std::mt19937_64& rng, const TuGame& v, PlayerId i) {
  const PlayerSet players = v.players();
  const double n = players.size();
  const Partition tau = draw_crp(rng, players.without(i));
  double value = to_double(v.worth(Coalition::single(i))) / n;
  for (Coalition s : tau.blocks())
    value += s.size() / n * to_double(v.worth(s.with(i)) - v.worth(s));
  return value;
}

}  // namespace detail

// `count` partitions of `players` with law p*.
inline std::vector<Partition> sample_crp(PlayerSet players, std::uint64_t seed, std::size_t count) {
  if (count == 0) throw DomainError("at least one draw is required");
  check_capacity(players);
  std::vector<Partition> out;
  out.reserve(count);
  for (std::size_t s = 0; s < detail::shard_count(count); ++s) {
    std::mt19937_64 rng = detail::shard_engine(seed, s);
    const std::size_t end = std::min(count, (s + 1) * kShardSize);
    for (std::size_t d = s * kShardSize; d < end; ++d) out.push_back(detail::draw_crp(rng, players));
  }
  return out;
}

inline SampleEstimate estimate_payoff(const TuGame& v, PlayerId i, Target target,
                                      std::size_t n_samples, std::uint64_t seed,
                                      unsigned workers = 1) {
  if (!v.players().contains(i))
    throw DomainError("player " + std::to_string(i) + " not in " + to_string(v.players()));
  if (target == Target::kShapley)
    return detail::run_shards(n_samples, seed, workers,
                              [&](std::mt19937_64& rng) { return detail::shapley_draw(rng, v, i); });
  auto worth = [&](Coalition s, const Partition&) { return v.worth(s); };
  return detail::run_shards(n_samples, seed, workers, [&](std::mt19937_64& rng) {
    return detail::mpw_draw(rng, v.players(), i, worth);
  });
}

// The Shapley target needs a game without externalities.
inline SampleEstimate estimate_payoff(const TuxGame& w, PlayerId i, Target target,
                                      std::size_t n_samples, std::uint64_t seed,
                                      unsigned workers = 1) {
  if (!w.players().contains(i))
    throw DomainError("player " + std::to_string(i) + " not in " + to_string(w.players()));
  if (target == Target::kShapley) {
    std::optional<TuGame> v = is_externality_free(w);
    if (!v) throw DomainError("the Shapley target needs a game without externalities");
    return estimate_payoff(*v, i, target, n_samples, seed, workers);
  }
  auto worth = [&](Coalition s, const Partition& pi) { return w.worth(s, pi); };
  return detail::run_shards(n_samples, seed, workers, [&](std::mt19937_64& rng) {
    return detail::mpw_draw(rng, w.players(), i, worth);
  });
}

}  // namespace pfg
