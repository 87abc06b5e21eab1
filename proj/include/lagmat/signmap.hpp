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

#ifndef LAGMAT_SIGNMAP_HPP_
#define LAGMAT_SIGNMAP_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "lagmat/collection.hpp"
#include "lagmat/error.hpp"
#include "lagmat/ground.hpp"

namespace lagmat {

// A map to {+1, -1, 0} on subsets of [n]. The same table serves both forms
// of an oriented Lagrangian matroid: entry `mask` is the sign of the subset
// `mask` of [n] (delta form) and of the admissible n-set whose unstarred
// part is `mask` (Lagrangian form).
class SignMap {
 public:
  explicit SignMap(int n) : n_(n) {
    if (n < 0 || n > 24) throw InvalidCollection("sign map ground size");
    values_.assign(std::size_t{1} << n, 0);
  }

  int n() const { return n_; }
  std::size_t domain_size() const { return values_.size(); }

  int at(std::uint64_t mask) const { return values_[mask]; }
  int at(const ElementSet& lagrangian_set) const {
    return values_[lagrangian_set.plain()];
  }
  void set(std::uint64_t mask, int s) {
    values_[mask] = static_cast<std::int8_t>(s > 0 ? 1 : (s < 0 ? -1 : 0));
  }
  void set(const ElementSet& lagrangian_set, int s) {
    set(lagrangian_set.plain(), s);
  }

  bool is_zero() const {
    for (auto v : values_) {
      if (v != 0) return false;
    }
    return true;
  }

  std::vector<std::uint64_t> support() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < values_.size(); ++m) {
      if (values_[m] != 0) out.push_back(m);
    }
    return out;
  }

  // Supported admissible n-sets in lexicographic print order.
  std::vector<ElementSet> support_sets() const {
    std::vector<ElementSet> out;
    for (auto m : support()) out.push_back(ElementSet::lagrangian(m, n_));
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
  }

  BasisCollection support_collection() const {
    return BasisCollection(n_, n_, support_sets());
  }

  SignMap negated() const {
    SignMap out = *this;
    for (auto& v : out.values_) v = static_cast<std::int8_t>(-v);
    return out;
  }

  // Representative of {p, -p} with + on the lexicographically least
  // supported set.
  SignMap canonical() const {
    const auto sets = support_sets();
    if (sets.empty() || at(sets.front()) > 0) return *this;
    return negated();
  }

  bool equivalent(const SignMap& o) const {
    return canonical() == o.canonical();
  }

  friend bool operator==(const SignMap& a, const SignMap& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  int n_;
  std::vector<std::int8_t> values_;
};

}  // namespace lagmat

#endif  // LAGMAT_SIGNMAP_HPP_
