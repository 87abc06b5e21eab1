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

#ifndef LAGMAT_COLLECTION_HPP_
#define LAGMAT_COLLECTION_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lagmat/error.hpp"
#include "lagmat/ground.hpp"

namespace lagmat {

// A nonempty family of admissible k-subsets of J, kept sorted in
// lexicographic print order without duplicates.
class BasisCollection {
 public:
  BasisCollection(int n, int rank, std::vector<ElementSet> bases)
      : n_(n), rank_(rank), bases_(std::move(bases)) {
    if (n < 0 || n > kMaxGround) {
      throw InvalidCollection("ground size out of range");
    }
    if (rank < 0 || rank > n) {
      throw InvalidCollection("rank " + std::to_string(rank) +
                              " exceeds ground size " + std::to_string(n));
    }
    if (bases_.empty()) throw InvalidCollection("empty basis collection");
    for (const auto& b : bases_) {
      if (!is_admissible(b, n) || b.size() != rank) {
        throw InvalidCollection("{" + to_string(b) +
                                "} is not an admissible " +
                                std::to_string(rank) + "-set");
      }
    }
    std::sort(bases_.begin(), bases_.end(), LexLess{});
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  }

  int n() const { return n_; }
  int rank() const { return rank_; }
  bool is_lagrangian() const { return rank_ == n_; }
  const std::vector<ElementSet>& bases() const { return bases_; }
  std::size_t size() const { return bases_.size(); }
  auto begin() const { return bases_.begin(); }
  auto end() const { return bases_.end(); }

  bool contains(const ElementSet& s) const {
    return std::binary_search(bases_.begin(), bases_.end(), s, LexLess{});
  }

  friend bool operator==(const BasisCollection& a, const BasisCollection& b) {
    return a.n_ == b.n_ && a.rank_ == b.rank_ && a.bases_ == b.bases_;
  }

 private:
  int n_;
  int rank_;
  std::vector<ElementSet> bases_;
};

// Outcome of a Gale-maximum search: either the unique maximum, or two
// incomparable maximal members witnessing the failure.
struct MaxBasisResult {
  std::optional<ElementSet> max;
  std::pair<ElementSet, ElementSet> witness;

  bool unique() const { return max.has_value(); }
};

inline MaxBasisResult max_basis(const std::vector<ElementSet>& bases,
                                const AdmissibleOrdering& ord) {
  if (bases.empty()) throw InvalidCollection("empty basis collection");
  // A greatest element, if one exists, survives this scan.
  ElementSet cand = bases.front();
  for (const auto& b : bases) {
    if (gale_leq(cand, b, ord)) cand = b;
  }
  const bool greatest = std::all_of(bases.begin(), bases.end(),
                                    [&](const ElementSet& b) {
                                      return gale_leq(b, cand, ord);
                                    });
  if (greatest) return {cand, {}};

  std::vector<ElementSet> maximal;
  for (const auto& b : bases) {
    const bool dominated =
        std::any_of(bases.begin(), bases.end(), [&](const ElementSet& c) {
          return !(c == b) && gale_leq(b, c, ord);
        });
    if (!dominated) maximal.push_back(b);
  }
  // A finite poset without a greatest element has at least two maximal ones.
  return {std::nullopt, {maximal.at(0), maximal.at(1)}};
}

inline MaxBasisResult max_basis(const BasisCollection& bases,
                                const AdmissibleOrdering& ord) {
  return max_basis(bases.bases(), ord);
}

}  // namespace lagmat

#endif  // LAGMAT_COLLECTION_HPP_
