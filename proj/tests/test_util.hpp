// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LAGMAT_TESTS_TEST_UTIL_HPP_
#define LAGMAT_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lagmat/lagmat.hpp"

namespace lagmat::testing {

inline ElementSet set_of(const std::string& text) { return parse_set(text); }

// Collection from set literals, e.g. collection(2, 2, {"1 2", "1* 2*"}).
inline BasisCollection collection(int n, int k,
                                  std::initializer_list<const char*> sets) {
  std::vector<ElementSet> v;
  for (const char* s : sets) v.push_back(parse_set(s, n));
  return BasisCollection(n, k, std::move(v));
}

inline AdmissibleOrdering c_order(const std::string& text) {
  return parse_ordering(text, Variant::C);
}

inline std::uint64_t mask_of(std::initializer_list<int> indices) {
  std::uint64_t m = 0;
  for (int i : indices) m |= std::uint64_t{1} << (i - 1);
  return m;
}

// Every nonempty subfamily of the admissible k-sets of [n].
template <typename Visit>
void for_each_collection(int n, int k, Visit visit) {
  const auto sets = admissible_sets(n, k);
  for (std::uint64_t c = 1; c < (std::uint64_t{1} << sets.size()); ++c) {
    std::vector<ElementSet> v;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if ((c >> i) & 1U) v.push_back(sets[i]);
    }
    visit(BasisCollection(n, k, std::move(v)));
  }
}

}  // namespace lagmat::testing

#endif  // LAGMAT_TESTS_TEST_UTIL_HPP_
