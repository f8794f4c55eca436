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

// Independent reference computations used as test oracles. None of them
// calls the library routine it is compared against.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "pfg/pfg.hpp"

namespace pfg::testing {

inline Rational q(std::int64_t num, std::int64_t den = 1) { return make_rational(num, den); }

// Bell numbers from the Bell triangle.
inline long long bell(int n) {
  std::vector<long long> row{1};
  for (int k = 0; k < n; ++k) {
    std::vector<long long> next{row.back()};
    for (long long x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

inline long long choose(int n, int k) {
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Exact law of the seating process: every arrival order and every seating
// choice, weighted by its probability.
inline std::map<Partition, Rational> crp_law(PlayerSet players) {
  std::map<Partition, Rational> law;
  std::vector<PlayerId> order = players.members();
  const int n = static_cast<int>(order.size());
  Rational order_weight = 1 / factorial(n);
  std::function<void(std::size_t, std::vector<Coalition>&, Rational)> seat =
      [&](std::size_t k, std::vector<Coalition>& tables, Rational p) {
        if (k == order.size()) {
          law[Partition(tables)] += p;
          return;
        }
        const Rational step = Rational(1) / static_cast<int>(k + 1);
        tables.push_back(Coalition::single(order[k]));
        seat(k + 1, tables, p * step);
        tables.pop_back();
        for (std::size_t t = 0; t < tables.size(); ++t) {
          const Coalition before = tables[t];
          tables[t] = before.with(order[k]);
          seat(k + 1, tables, p * step * before.size());
          tables[t] = before;
        }
      };
  std::sort(order.begin(), order.end());
  do {
    std::vector<Coalition> tables;
    seat(0, tables, order_weight);
  } while (std::next_permutation(order.begin(), order.end()));
  return law;
}

// Ewens sampling formula for the block-size class of pi, divided by the
// number of partitions in that class.
inline Rational ewens_by_class(const Rational& theta, const Partition& pi) {
  const int n = pi.ambient().size();
  std::map<int, int> multiplicity;
  for (Coalition b : pi.blocks()) ++multiplicity[b.size()];
  Rational rising = 1;
  for (int k = 0; k < n; ++k) rising *= theta + k;
  Rational class_prob = factorial(n) / rising;
  Rational class_size = factorial(n);
  for (const auto& [j, a] : multiplicity) {
    for (int r = 0; r < a; ++r) class_prob *= theta / j;
    class_prob /= factorial(a);
    for (int r = 0; r < a; ++r) class_size /= factorial(j);
    class_size /= factorial(a);
  }
  return class_prob / class_size;
}

// Shapley value as the average marginal contribution over all orders.
inline PayoffVector shapley_by_orders(const TuGame& v) {
  std::vector<PlayerId> order = v.players().members();
  PayoffVector out;
  for (PlayerId i : order) out[i] = 0;
  Rational count = 0;
  do {
    Coalition before;
    for (PlayerId i : order) {
      out[i] += v.worth(before.with(i)) - v.worth(before);
      before = before.with(i);
    }
    count += 1;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& [i, x] : out) x /= count;
  return out;
}

// Potential as the sum of Harsanyi dividends divided by coalition size.
inline Rational potential_by_dividends(const TuGame& v) {
  Rational pot = 0;
  for (Coalition s : subsets(v.players())) {
    if (s.empty()) continue;
    Rational dividend = 0;
    for (Coalition t : subsets(s)) {
      const int sign = (s.size() - t.size()) % 2 == 0 ? 1 : -1;
      dividend += sign * v.worth(t);
    }
    pot += dividend / s.size();
  }
  return pot;
}

// The removal-order-dependent operator: r* scaled by 1 + i*n.
inline RestrictionOperator order_biased_operator() {
  return RestrictionOperator::custom("order-biased", [](const TuxGame& w, PlayerId i) {
    return Rational(1 + i * w.size()) * restrict(RestrictionOperator::rstar(), w, i);
  });
}

inline RandomPartitionFamily eps4(std::int64_t num, std::int64_t den) {
  return perturbed_family(EpsilonProfile({{4, q(num, den)}}));
}

}  // namespace pfg::testing
