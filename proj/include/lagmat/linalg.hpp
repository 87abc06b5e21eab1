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

#ifndef LAGMAT_LINALG_HPP_
#define LAGMAT_LINALG_HPP_

#include <span>
#include <vector>

#include "lagmat/error.hpp"
#include "lagmat/matrix.hpp"

namespace lagmat {

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivots;  // 0-based pivot columns, increasing
};

// Gauss-Jordan elimination; the row space is preserved.
inline RrefResult rref(Matrix m) {
  std::vector<int> pivots;
  int lead_row = 0;
  for (int c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    int p = lead_row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, lead_row);
    const Rational inv = 1 / m(lead_row, c);
    for (int k = 0; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r != lead_row && m(r, c) != 0) {
        m.add_row_multiple(r, lead_row, -m(r, c));
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

inline int rank(const Matrix& m) {
  return static_cast<int>(rref(m).pivots.size());
}

// The nonzero rows of the RREF: a canonical basis of the row space.
inline Matrix row_space_basis(const Matrix& m) {
  auto r = rref(m);
  return r.reduced.row_block(0, static_cast<int>(r.pivots.size()));
}

inline Rational det(Matrix m) {
  if (!m.is_square()) throw NonSquare("determinant of non-square matrix");
  const int n = m.rows();
  Rational result = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      result = -result;
    }
    result *= m(c, c);
    const Rational inv = 1 / m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c) != 0) m.add_row_multiple(r, c, -m(r, c) * inv);
    }
  }
  return result;
}

// Submatrix taking rows and columns in the given order (0-based).
inline Matrix minor(const Matrix& m, std::span<const int> rows,
                    std::span<const int> cols) {
  Matrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0 || rows[i] >= m.rows()) {
      throw IndexOutOfRange("row " + std::to_string(rows[i]));
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] < 0 || cols[j] >= m.cols()) {
        throw IndexOutOfRange("column " + std::to_string(cols[j]));
      }
      out(static_cast<int>(i), static_cast<int>(j)) = m(rows[i], cols[j]);
    }
  }
  return out;
}

inline Matrix minor(const Matrix& m, std::initializer_list<int> rows,
                    std::initializer_list<int> cols) {
  return minor(m, std::span<const int>(rows.begin(), rows.size()),
               std::span<const int>(cols.begin(), cols.size()));
}

// Principal submatrix on the given indices.
inline Matrix principal_minor(const Matrix& m, std::span<const int> idx) {
  return minor(m, idx, idx);
}

// Rows span { v : M v = 0 }, one row per free column of the RREF.
inline Matrix null_space(const Matrix& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  const int nfree = m.cols() - static_cast<int>(r.pivots.size());
  Matrix out(nfree, m.cols());
  int row = 0;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    out(row, f) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      out(row, r.pivots[i]) = -r.reduced(static_cast<int>(i), f);
    }
    ++row;
  }
  return out;
}

inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw NonSquare("inverse of non-square matrix");
  const int n = m.rows();
  auto r = rref(hcat(m, Matrix::identity(n)));
  if (static_cast<int>(r.pivots.size()) < n || (n > 0 && r.pivots[n - 1] >= n)) {
    throw RankDeficient("matrix is singular");
  }
  return r.reduced.col_block(n, n);
}

}  // namespace lagmat

#endif  // LAGMAT_LINALG_HPP_
