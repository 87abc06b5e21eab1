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

#ifndef LAGMAT_PFAFFIAN_HPP_
#define LAGMAT_PFAFFIAN_HPP_

#include <bit>
#include <cstdint>
#include <span>
#include <unordered_map>

#include "lagmat/error.hpp"
#include "lagmat/matrix.hpp"

namespace lagmat {

// Pfaffians of the principal submatrices of one skew-symmetric matrix,
// memoized by index subset. Each value is an expansion along the smallest
// index:
//   Pf(S) = sum_{t >= 1} (-1)^(t+1) a[s0][st] Pf(S \ {s0, st})
// where s0 < s1 < ... enumerate S. Odd subsets give 0, the empty subset 1.
class PfaffianEvaluator {
 public:
  explicit PfaffianEvaluator(Matrix skew) : m_(std::move(skew)) {
    if (!m_.is_square()) throw NonSquare("Pfaffian of non-square matrix");
    if (!m_.is_skew_symmetric()) {
      throw NotSkewSymmetric("Pfaffian needs M + M^T = 0");
    }
    if (m_.rows() > 64) throw IndexOutOfRange("Pfaffian size above 64");
  }

  int size() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

  // Bit i of `subset` selects row/column i (0-based).
  Rational principal(std::uint64_t subset) {
    if (std::popcount(subset) % 2 != 0) return 0;
    if (subset == 0) return 1;
    if (auto it = memo_.find(subset); it != memo_.end()) return it->second;
    const int s0 = std::countr_zero(subset);
    const std::uint64_t rest = subset & (subset - 1);
    Rational total = 0;
    int t = 1;
    for (std::uint64_t m = rest; m != 0; m &= m - 1, ++t) {
      const int st = std::countr_zero(m);
      const Rational& a = m_(s0, st);
      if (a == 0) continue;
      const Rational sub = principal(rest & ~(std::uint64_t{1} << st));
      if (t % 2 == 1) {
        total += a * sub;
      } else {
        total -= a * sub;
      }
    }
    memo_.emplace(subset, total);
    return total;
  }

  Rational principal(std::span<const int> increasing_indices) {
    std::uint64_t mask = 0;
    int prev = -1;
    for (int i : increasing_indices) {
      if (i <= prev || i >= size()) {
        throw IndexOutOfRange("Pfaffian indices must increase within range");
      }
      mask |= std::uint64_t{1} << i;
      prev = i;
    }
    return principal(mask);
  }

  Rational full() {
    return principal(size() == 64 ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << size()) - 1);
  }

 private:
  Matrix m_;
  std::unordered_map<std::uint64_t, Rational> memo_;
};

inline Rational pfaffian(const Matrix& m) {
  return PfaffianEvaluator(m).full();
}

}  // namespace lagmat

#endif  // LAGMAT_PFAFFIAN_HPP_
