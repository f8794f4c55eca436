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

// Removing a player who only exerts externalities can turn a null player
// into a productive one, yet the MPW payoff of the null player stays zero.

#include <iostream>

#include "pfg/pfg.hpp"

int main() {
  using pfg::Coalition;
  using pfg::Partition;

  const pfg::TuxGame w = pfg::externality_example();
  const pfg::RestrictionOperator rstar = pfg::RestrictionOperator::rstar();
  const pfg::TuxGame sub = pfg::restrict(rstar, w, 4);

  const pfg::Rational with_1 = sub.worth(Coalition::of({1, 3}), Partition::of({{2}}));
  const pfg::Rational without_1 = sub.worth(Coalition::of({3}), Partition::of({{1, 2}}));
  std::cout << "w_-4([1,3], [[2]]) = " << pfg::to_string(with_1) << "\n"
            << "w_-4([3], [[1,2]]) = " << pfg::to_string(without_1) << "\n"
            << "marginal contribution of 1 = " << pfg::to_string(with_1 - without_1) << "\n";

  std::cout << "player 1 null in w: " << pfg::is_null_player(w, 1) << "\n"
            << "player 1 null in w_-4: " << pfg::is_null_player(sub, 1) << "\n";

  std::cout << "MPW of w:";
  for (const auto& [i, x] : pfg::mpw(w)) std::cout << "  " << i << ": " << pfg::to_string(x);
  std::cout << "\nMPW of w_-4:";
  for (const auto& [i, x] : pfg::mpw(sub)) std::cout << "  " << i << ": " << pfg::to_string(x);
  std::cout << "\n";
  return 0;
}
