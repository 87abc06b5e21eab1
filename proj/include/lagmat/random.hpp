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

// Seeded sources of small exact matrices. Entries are small integers with a
// sizeable share of zeros so that generated matroids are not all uniform.

#ifndef LAGMAT_RANDOM_HPP_
#define LAGMAT_RANDOM_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "lagmat/matrix.hpp"

namespace lagmat {

using Rng = std::mt19937_64;

// Uniform in [-bound, bound] with probability 1 - zero_share, else 0.
inline Rational random_entry(Rng& rng, int bound = 3, double zero_share = 0.4) {
  std::bernoulli_distribution zero(zero_share);
  if (zero(rng)) return 0;
  std::uniform_int_distribution<int> d(-bound, bound);
  return d(rng);
}

// Random p/q with |p| <= bound, 1 <= q <= bound.
inline Rational random_fraction(Rng& rng, int bound = 5,
                                double zero_share = 0.25) {
  std::bernoulli_distribution zero(zero_share);
  if (zero(rng)) return 0;
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Matrix random_matrix(Rng& rng, int rows, int cols, int bound = 3,
                            double zero_share = 0.4) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = random_entry(rng, bound, zero_share);
  }
  return m;
}

inline Matrix random_skew(Rng& rng, int n, int bound = 3,
                          double zero_share = 0.4) {
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      m(r, c) = random_entry(rng, bound, zero_share);
      m(c, r) = -m(r, c);
    }
  }
  return m;
}

// Skew matrix with rational (non-integer) entries.
inline Matrix random_rational_skew(Rng& rng, int n, int bound = 5) {
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      m(r, c) = random_fraction(rng, bound);
      m(c, r) = -m(r, c);
    }
  }
  return m;
}

inline Matrix random_symmetric(Rng& rng, int n, int bound = 3,
                               double zero_share = 0.4) {
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = r; c < n; ++c) {
      m(r, c) = random_entry(rng, bound, zero_share);
      m(c, r) = m(r, c);
    }
  }
  return m;
}

// P * L * U with unit triangular L, U: always invertible.
inline Matrix random_invertible(Rng& rng, int n, int bound = 2) {
  Matrix lower = Matrix::identity(n);
  Matrix upper = Matrix::identity(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < r; ++c) lower(r, c) = random_entry(rng, bound, 0.5);
    for (int c = r + 1; c < n; ++c) upper(r, c) = random_entry(rng, bound, 0.5);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix p(n, n);
  for (int r = 0; r < n; ++r) p(r, perm[r]) = 1;
  return p * lower * upper;
}

}  // namespace lagmat

#endif  // LAGMAT_RANDOM_HPP_
