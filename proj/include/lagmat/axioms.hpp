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

// Brute-force verifiers for the matroid axioms. Every verifier scans in a
// fixed order and reports the first failure it meets.

#ifndef LAGMAT_AXIOMS_HPP_
#define LAGMAT_AXIOMS_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lagmat/collection.hpp"
#include "lagmat/error.hpp"
#include "lagmat/ground.hpp"
#include "lagmat/signmap.hpp"

namespace lagmat {

// Default ceiling on n for scans over all admissible orderings.
inline constexpr int kDefaultScanLimit = 6;

inline void require_scan_limit(int n, int max_n) {
  if (n > max_n) {
    throw InvalidCollection("n = " + std::to_string(n) +
                            " exceeds the exhaustive scan limit " +
                            std::to_string(max_n));
  }
}

struct MaximalityCheck {
  bool holds = true;
  std::optional<AdmissibleOrdering> witness;
  std::pair<ElementSet, ElementSet> incomparable;  // valid when !holds
};

// Maximality Property over every ordering of the variant.
inline MaximalityCheck check_maximality(const BasisCollection& b,
                                        Variant variant,
                                        int max_n = kDefaultScanLimit) {
  require_scan_limit(b.n(), max_n);
  MaximalityCheck result;
  if (b.n() == 0) return result;
  for_each_admissible_ordering(
      b.n(), variant, [&](const AdmissibleOrdering& ord) {
        const auto r = max_basis(b, ord);
        if (r.unique()) return true;
        result.holds = false;
        result.witness = ord;
        result.incomparable = r.witness;
        return false;
      });
  return result;
}

inline MaximalityCheck is_symplectic_matroid(const BasisCollection& b,
                                             int max_n = kDefaultScanLimit) {
  return check_maximality(b, Variant::C, max_n);
}

inline MaximalityCheck is_orthogonal_matroid(const BasisCollection& b,
                                             int max_n = kDefaultScanLimit) {
  return check_maximality(b, Variant::D, max_n);
}

struct ExchangeCheck {
  bool holds = true;
  // First failing (A, B, a) in scan order, valid when !holds.
  ElementSet first;
  ElementSet second;
  Element pivot;
};

// For all A, B and a in A^B some b in B\A, b != a*, has both
// A ^ {a, b, a*, b*} and B ^ {a, b, a*, b*} in the collection.
inline ExchangeCheck check_strong_exchange(const BasisCollection& b) {
  if (!b.is_lagrangian()) {
    throw NotLagrangian("strong exchange needs rank n");
  }
  ExchangeCheck result;
  for (const auto& x : b) {
    for (const auto& y : b) {
      const ElementSet diff = x ^ y;
      const ElementSet y_only = y - x;
      for (Element a : diff.elements()) {
        bool found = false;
        for (Element c : y_only.elements()) {
          if (c == star(a)) continue;
          const ElementSet flip{a, c, star(a), star(c)};
          if (b.contains(x ^ flip) && b.contains(y ^ flip)) {
            found = true;
            break;
          }
        }
        if (!found) {
          result = {false, x, y, a};
          return result;
        }
      }
    }
  }
  return result;
}

// A family of subsets of [n] as index masks, sorted and deduplicated.
class DeltaCollection {
 public:
  DeltaCollection(int n, std::vector<std::uint64_t> sets)
      : n_(n), sets_(std::move(sets)) {
    if (n < 0 || n > kMaxGround) throw InvalidCollection("ground size");
    if (sets_.empty()) throw InvalidCollection("empty delta collection");
    for (auto s : sets_) {
      if ((s & ~ElementSet::full_mask(n)) != 0) {
        throw InvalidCollection("set outside [n]");
      }
    }
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  int n() const { return n_; }
  const std::vector<std::uint64_t>& sets() const { return sets_; }
  bool contains(std::uint64_t s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s);
  }

  friend bool operator==(const DeltaCollection&,
                         const DeltaCollection&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> sets_;
};

struct SymmetricExchangeCheck {
  bool holds = true;
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  int pivot = 0;  // 1-based index
};

// For all A, B and i in A^B some j in A^B has A ^ {i, j} in the family;
// j = i is allowed and then {i, j} = {i}.
inline SymmetricExchangeCheck check_symmetric_exchange(
    const DeltaCollection& d) {
  SymmetricExchangeCheck result;
  for (auto x : d.sets()) {
    for (auto y : d.sets()) {
      const std::uint64_t diff = x ^ y;
      for (std::uint64_t mi = diff; mi != 0; mi &= mi - 1) {
        const std::uint64_t i = mi & -mi;
        bool found = false;
        for (std::uint64_t mj = diff; mj != 0; mj &= mj - 1) {
          const std::uint64_t j = mj & -mj;
          if (d.contains(x ^ (i | j))) {
            found = true;
            break;
          }
        }
        if (!found) {
          result = {false, x, y, std::countr_zero(i) + 1};
          return result;
        }
      }
    }
  }
  return result;
}

// B -> B n [n], a bijection on admissible n-sets.
inline DeltaCollection to_delta(const BasisCollection& b) {
  if (!b.is_lagrangian()) throw NotLagrangian("to_delta needs rank n");
  std::vector<std::uint64_t> sets;
  for (const auto& s : b) sets.push_back(s.plain());
  return DeltaCollection(b.n(), std::move(sets));
}

inline BasisCollection from_delta(const DeltaCollection& d) {
  std::vector<ElementSet> sets;
  for (auto s : d.sets()) sets.push_back(ElementSet::lagrangian(s, d.n()));
  return BasisCollection(d.n(), d.n(), std::move(sets));
}

// All bases have the same parity of |B n [n]|.
inline bool is_even(const BasisCollection& b) {
  if (!b.is_lagrangian()) throw NotLagrangian("parity needs rank n");
  const int parity = b.bases().front().plain_count() % 2;
  return std::all_of(b.begin(), b.end(), [&](const ElementSet& s) {
    return s.plain_count() % 2 == parity;
  });
}

struct OrientedDeltaCheck {
  bool holds = true;
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  int w = 0;
};

// Throws OddSupport when two supported sets differ in parity.
inline void require_even_support(const SignMap& p) {
  if (p.is_zero()) throw InvalidCollection("sign map is identically zero");
  const auto sup = p.support();
  const int parity = std::popcount(sup.front()) % 2;
  for (auto s : sup) {
    if (std::popcount(s) % 2 != parity) {
      throw OddSupport("supported sets of both parities");
    }
  }
}

// For all A, B with A^B = {i_1 < ... < i_l} and w in {+1, -1}: if every
//   kappa_j = w (-1)^j p(A ^ {i_j}) p(B ^ {i_j})
// is >= 0 then every kappa_j is 0. Equivalently the nonzero terms
// (-1)^j p(A ^ {i_j}) p(B ^ {i_j}) never all share one sign.
inline OrientedDeltaCheck check_oriented_even_delta(const SignMap& p) {
  require_even_support(p);
  OrientedDeltaCheck result;
  const std::uint64_t size = p.domain_size();
  for (std::uint64_t a = 0; a < size; ++a) {
    for (std::uint64_t b = 0; b < size; ++b) {
      const std::uint64_t diff = a ^ b;
      bool positive = false;
      bool negative = false;
      int j = 1;
      for (std::uint64_t m = diff; m != 0; m &= m - 1, ++j) {
        const std::uint64_t bit = m & -m;
        const int term = (j % 2 == 0 ? 1 : -1) * p.at(a ^ bit) * p.at(b ^ bit);
        positive |= term > 0;
        negative |= term < 0;
      }
      if (positive != negative) {
        // All nonzero kappa share a sign; w = that sign violates the axiom.
        result = {false, a, b, positive ? 1 : -1};
        return result;
      }
    }
  }
  return result;
}

}  // namespace lagmat

#endif  // LAGMAT_AXIOMS_HPP_
