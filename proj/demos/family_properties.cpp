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

// Which random partition families generate the potential, factor over
// blocks, stay positive, and make the null player property hold.

#include <iostream>
#include <vector>

#include "pfg/pfg.hpp"

int main() {
  const std::vector<pfg::RandomPartitionFamily> families = {
      pfg::pstar(),
      pfg::ewens_family(pfg::make_rational(1, 2)),
      pfg::ewens_family(2),
      pfg::perturbed_family(pfg::EpsilonProfile({{4, pfg::make_rational(1, 8)}})),
      pfg::perturbed_family(pfg::EpsilonProfile({{4, pfg::make_rational(1, 48)}})),
  };
  const int n_max = 4;
  for (const auto& family : families) {
    for (const pfg::Report& r :
         {pfg::check_gen(family, n_max), pfg::check_ci(family, n_max), pfg::check_pos(family, n_max),
          pfg::check_null_player_axiom(pfg::p_shapley_solution(family), n_max)}) {
      std::cout << (r.passed ? "pass  " : "FAIL  ") << r.subject;
      if (r.witness) std::cout << "\n      " << pfg::describe(*r.witness);
      std::cout << "\n";
    }
  }
  return 0;
}
