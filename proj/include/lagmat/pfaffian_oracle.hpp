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

// Definitional Pfaffian: the signed sum over the permutations sigma of
// {1..2m} with sigma(2k-1) = min(sigma(2k-1), ..., sigma(2m)) for every k.
// Only used as a differential check against PfaffianEvaluator.

#ifndef LAGMAT_PFAFFIAN_ORACLE_HPP_
#define LAGMAT_PFAFFIAN_ORACLE_HPP_

#include <vector>

#include "lagmat/error.hpp"
#include "lagmat/matrix.hpp"

namespace lagmat {

namespace detail {

inline int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// Fills sigma position by position; odd positions take the least unused
// value, which is exactly the defining constraint of the index set.
inline void sum_matchings(const Matrix& a, std::vector<int>& sigma,
                          std::vector<bool>& used, Rational& total) {
  const int size = a.rows();
  if (static_cast<int>(sigma.size()) == size) {
    Rational term = permutation_sign(sigma);
    for (int k = 0; k < size; k += 2) term *= a(sigma[k], sigma[k + 1]);
    total += term;
    return;
  }
  int first = 0;
  while (used[first]) ++first;
  used[first] = true;
  sigma.push_back(first);
  for (int j = 0; j < size; ++j) {
    if (used[j]) continue;
    used[j] = true;
    sigma.push_back(j);
    sum_matchings(a, sigma, used, total);
    sigma.pop_back();
    used[j] = false;
  }
  sigma.pop_back();
  used[first] = false;
}

}  // namespace detail

inline Rational pfaffian_oracle(const Matrix& a) {
  if (!a.is_square()) throw NonSquare("Pfaffian of non-square matrix");
  if (!a.is_skew_symmetric()) {
    throw NotSkewSymmetric("Pfaffian needs M + M^T = 0");
  }
  if (a.rows() > 12) throw IndexOutOfRange("oracle limited to size 12");
  if (a.rows() % 2 != 0) return 0;
  if (a.rows() == 0) return 1;
  std::vector<int> sigma;
  std::vector<bool> used(a.rows(), false);
  Rational total = 0;
  detail::sum_matchings(a, sigma, used, total);
  return total;
}

}  // namespace lagmat

#endif  // LAGMAT_PFAFFIAN_ORACLE_HPP_
