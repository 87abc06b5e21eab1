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

// Exact rational scalars and dense row-major matrices over them.

#ifndef LAGMAT_MATRIX_HPP_
#define LAGMAT_MATRIX_HPP_

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lagmat/error.hpp"

namespace lagmat {

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p" or "p/q" with an optional leading sign. Returns false on
// malformed input or a zero denominator.
inline bool parse_rational(std::string_view text, Rational& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  bool digits = false;
  bool slash = false;
  bool denom_digits = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch >= '0' && ch <= '9') {
      (slash ? denom_digits : digits) = true;
    } else if (ch == '/' && !slash && digits) {
      slash = true;
    } else {
      return false;
    }
  }
  if (!digits || (slash && !denom_digits)) return false;
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) return false;
  if (q.get_den() == 0) return false;
  q.canonicalize();
  out = q;
  return true;
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative dimension");
  }
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) {
        throw DimensionMismatch("ragged initializer");
      }
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(int r, int c) { return data_[r * cols_ + c]; }
  const Rational& operator()(int r, int c) const {
    return data_[r * cols_ + c];
  }

  std::span<Rational> row(int r) {
    return {data_.data() + r * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<const Rational> row(int r) const {
    return {data_.data() + r * cols_, static_cast<std::size_t>(cols_)};
  }

  Matrix row_matrix(int r) const {
    Matrix out(1, cols_);
    for (int c = 0; c < cols_; ++c) out(0, c) = (*this)(r, c);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (x != 0) return false;
    }
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (int r = 0; r < rows_; ++r) {
      for (int c = r + 1; c < cols_; ++c) {
        if ((*this)(r, c) != (*this)(c, r)) return false;
      }
    }
    return true;
  }

  // M + M^T = 0, which forces a zero diagonal.
  bool is_skew_symmetric() const {
    if (!is_square()) return false;
    for (int r = 0; r < rows_; ++r) {
      for (int c = r; c < cols_; ++c) {
        if ((*this)(r, c) + (*this)(c, r) != 0) return false;
      }
    }
    return true;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  void scale_col(int c, const Rational& s) {
    for (int r = 0; r < rows_; ++r) (*this)(r, c) *= s;
  }
  // row[dst] += s * row[src]
  void add_row_multiple(int dst, int src, const Rational& s) {
    if (s == 0) return;
    for (int c = 0; c < cols_; ++c) (*this)(dst, c) += s * (*this)(src, c);
  }
  void add_col_multiple(int dst, int src, const Rational& s) {
    if (s == 0) return;
    for (int r = 0; r < rows_; ++r) (*this)(r, dst) += s * (*this)(r, src);
  }

  // Columns [first, first + count).
  Matrix col_block(int first, int count) const {
    Matrix out(rows_, count);
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    }
    return out;
  }

  Matrix row_block(int first, int count) const {
    Matrix out(count, cols_);
    for (int r = 0; r < count; ++r) {
      for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
    }
    return out;
  }

  friend Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw DimensionMismatch("hcat row counts differ");
    Matrix out(a.rows_, a.cols_ + b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
      for (int c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
      for (int c = 0; c < b.cols_; ++c) out(r, a.cols_ + c) = b(r, c);
    }
    return out;
  }

  friend Matrix vcat(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw DimensionMismatch("vcat column counts differ");
    Matrix out(a.rows_ + b.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r) {
      for (int c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
    }
    for (int r = 0; r < b.rows_; ++r) {
      for (int c = 0; c < b.cols_; ++c) out(a.rows_ + r, c) = b(r, c);
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("product shapes differ");
    Matrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& x = a(r, k);
        if (x == 0) continue;
        for (int c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
      }
    }
    return out;
  }

  friend Matrix operator*(const Rational& s, const Matrix& m) {
    Matrix out = m;
    for (auto& x : out.data_) x *= s;
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& m) { return Rational(-1) * m; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionMismatch("shapes differ");
    }
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

inline std::string to_string(const Matrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace lagmat

#endif  // LAGMAT_MATRIX_HPP_
