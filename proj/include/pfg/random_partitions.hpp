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

// Random partitions: families (p_N) of exact distributions over Pi(N).
//
// A family is a rule N -> distribution plus a memo cache. Distributions are
// stored densely, aligned with enumerate_partitions(N).

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pfg/errors.hpp"
#include "pfg/partitions.hpp"
#include "pfg/rational.hpp"

namespace pfg {

// Probabilities aligned with enumerate_partitions(N).
using Distribution = std::vector<Rational>;

class RandomPartitionFamily {
 public:
  using Rule = std::function<Distribution(PlayerSet)>;

  RandomPartitionFamily(std::string label, Rule rule)
      : state_(std::make_shared<State>(std::move(label), std::move(rule))) {}

  const std::string& label() const { return state_->label; }

  const Distribution& distribution(PlayerSet players) const {
    return state_->cache.get(players, [&] {
      Distribution d = state_->rule(players);
      if (d.size() != enumerate_partitions(players).size())
        throw DomainError("family '" + state_->label + "' produced a malformed distribution");
      return d;
    });
  }

  // p_N(pi); pi must be a partition of N.
  const Rational& prob(PlayerSet players, const Partition& pi) const {
    if (pi.ambient() != players)
      throw DomainError(to_string(pi) + " is not a partition of " + to_string(players));
    return distribution(players)[PartitionIndex::of(players).position(pi)];
  }

 private:
  struct State {
    State(std::string l, Rule r) : label(std::move(l)), rule(std::move(r)) {}
    std::string label;
    Rule rule;
    detail::SetCache<Distribution> cache;
  };
  std::shared_ptr<State> state_;
};

// Ewens family with the Gamma ratio written as a rising factorial:
//   p(pi) = theta^|pi| * prod (b-1)! / (theta (theta+1) ... (theta+n-1)).
inline RandomPartitionFamily ewens_family(const Rational& theta) {
  if (theta <= 0) throw DomainError("Ewens mutation rate must be positive");
  return RandomPartitionFamily("ewens:" + to_string(theta), [theta](PlayerSet players) {
    const int n = players.size();
    Rational rising = 1;
    for (int k = 0; k < n; ++k) rising *= theta + k;
    Distribution d;
    for (const Partition& pi : enumerate_partitions(players)) {
      Rational p = 1;
      for (Coalition b : pi.blocks()) p *= theta * factorial(b.size() - 1);
      d.push_back(p / rising);
    }
    return d;
  });
}

// p*: the Ewens distribution at theta = 1, prod (b-1)! / n!.
inline RandomPartitionFamily pstar() {
  static const RandomPartitionFamily family("pstar", [](PlayerSet players) {
    const Rational nfact = factorial(players.size());
    Distribution d;
    for (const Partition& pi : enumerate_partitions(players)) {
      Rational p = 1;
      for (Coalition b : pi.blocks()) p *= factorial(b.size() - 1);
      d.push_back(p / nfact);
    }
    return d;
  });
  return family;
}

// Perturbation sizes eps_k for player-set sizes k >= 4, each within
// [-1/k!, C(k,2) / (2 k!)] so that every probability stays non-negative.
class EpsilonProfile {
 public:
  EpsilonProfile() = default;
  explicit EpsilonProfile(std::map<int, Rational> values) : values_(std::move(values)) {
    for (const auto& [k, eps] : values_) {
      if (k < 4) throw DomainError("epsilon profile keys must be >= 4");
      if (eps < lower(k) || eps > upper(k))
        throw DomainError("eps_" + std::to_string(k) + " = " + to_string(eps) +
                          " outside [" + to_string(lower(k)) + ", " + to_string(upper(k)) + "]");
    }
  }

  static Rational lower(int k) { return -1 / factorial(k); }
  static Rational upper(int k) { return binomial(k, 2) / (2 * factorial(k)); }

  Rational at(int k) const {
    auto it = values_.find(k);
    return it == values_.end() ? Rational(0) : it->second;
  }
  const std::map<int, Rational>& values() const { return values_; }

  std::string label() const {
    std::string out;
    for (const auto& [k, eps] : values_) {
      if (!out.empty()) out += ",";
      out += std::to_string(k) + "=" + to_string(eps);
    }
    return out;
  }

 private:
  std::map<int, Rational> values_;
};

// p^eps: p* shifted on three partition shapes (two pairs plus singletons, one
// pair plus singletons, all singletons); identical to p* for n <= 3.
inline RandomPartitionFamily perturbed_family(const EpsilonProfile& eps) {
  return RandomPartitionFamily("eps:" + eps.label(), [eps](PlayerSet players) {
    const int n = players.size();
    const Distribution& base = pstar().distribution(players);
    Distribution d = base;
    const Rational e = n > 3 ? eps.at(n) : Rational(0);
    if (e == 0) return d;
    const Rational two_pair_shift = 2 * e / (binomial(n - 2, 2) * binomial(n, 2));
    const Rational one_pair_shift = -2 * e / binomial(n, 2);
    const auto& all = enumerate_partitions(players);
    for (std::size_t k = 0; k < all.size(); ++k) {
      int pairs = 0;
      bool only_pairs_and_singletons = true;
      for (Coalition b : all[k].blocks()) {
        if (b.size() == 2) {
          ++pairs;
        } else if (b.size() != 1) {
          only_pairs_and_singletons = false;
        }
      }
      if (!only_pairs_and_singletons) continue;
      if (pairs == 2) d[k] += two_pair_shift;
      if (pairs == 1) d[k] += one_pair_shift;
      if (pairs == 0) d[k] += e;
    }
    return d;
  });
}

// A family given explicitly on one player set and equal to p* elsewhere.
// Entries missing from `probs` have probability zero. The table must be a
// distribution: non-negative entries summing to exactly 1.
inline RandomPartitionFamily table_family(PlayerSet players,
                                          const std::map<Partition, Rational>& probs,
                                          std::string label = "table") {
  check_capacity(players);
  const PartitionIndex& index = PartitionIndex::of(players);
  Distribution table(enumerate_partitions(players).size(), Rational(0));
  Rational total = 0;
  for (const auto& [pi, p] : probs) {
    if (pi.ambient() != players)
      throw DomainError(to_string(pi) + " is not a partition of " + to_string(players));
    if (p < 0) throw DomainError("negative probability for " + to_string(pi));
    table[index.position(pi)] = p;
    total += p;
  }
  if (total != 1)
    throw DomainError("table probabilities sum to " + to_string(total) + ", not 1");
  return RandomPartitionFamily(std::move(label), [players, table](PlayerSet n) {
    if (n == players) return table;
    return pstar().distribution(n);
  });
}

// Sum of p_N(pi) over the partitions pi of N that contain T as a block.
inline Rational coalition_inclusion_prob(const RandomPartitionFamily& family, PlayerSet players,
                                         Coalition block) {
  if (block.empty()) throw DomainError("inclusion probability of the empty coalition");
  if (!block.subset_of(players))
    throw DomainError(to_string(block) + " is not a subset of " + to_string(players));
  const auto& all = enumerate_partitions(players);
  const Distribution& d = family.distribution(players);
  Rational sum = 0;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k].contains_block(block)) sum += d[k];
  return sum;
}

}  // namespace pfg
