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

// Matrix representations of totally isotropic subspaces and the matroids
// they represent.
//
// The ambient space has basis e_1..e_n, e_1*..e_n*, f_1..f_m with
//   <e_i, e_i*> = 1,  <f_k, f_k> = 1,  all other pairings 0,
// symmetric for orthogonal and general kinds. The symplectic kind uses the
// alternating form with <e_i, e_i*> = 1 = -<e_i*, e_i> and m = 0.
//
// A Representation keeps its columns in a paired layout: physical column p
// (p < n) carries index p+1 either unstarred or starred, column n+p carries
// the partner, and the f columns follow. Column labels travel with the data,
// so the represented matroid never depends on the layout. Orientations do:
// layouts are only ever changed by signed_swap, which compensates with
// column negations.

#ifndef LAGMAT_REPR_HPP_
#define LAGMAT_REPR_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lagmat/collection.hpp"
#include "lagmat/error.hpp"
#include "lagmat/ground.hpp"
#include "lagmat/linalg.hpp"
#include "lagmat/matrix.hpp"
#include "lagmat/random.hpp"

namespace lagmat {

enum class Kind { Symplectic, Orthogonal, General };

inline std::string to_string(Kind k) {
  switch (k) {
    case Kind::Symplectic:
      return "symplectic";
    case Kind::Orthogonal:
      return "orthogonal";
    case Kind::General:
      return "general";
  }
  return "general";
}

class Representation {
 public:
  // `labels` holds one code per physical column: i for index i, n+i for i*,
  // 2n+j for the j-th f column. Empty means the reference order.
  Representation(int n, int m, Matrix mat, Kind kind,
                 std::vector<int> labels = {})
      : n_(n), m_(m), mat_(std::move(mat)), kind_(kind),
        labels_(std::move(labels)) {
    if (n < 1 || n > kMaxGround - 1) {
      throw InvalidRepresentation("n must be in [1, 63]");
    }
    if (m < 0) throw InvalidRepresentation("m must be nonnegative");
    if (mat_.cols() != 2 * n + m) {
      throw InvalidRepresentation("expected " + std::to_string(2 * n + m) +
                                  " columns, got " +
                                  std::to_string(mat_.cols()));
    }
    if (mat_.rows() > n) {
      throw InvalidRepresentation("a totally isotropic subspace has dimension "
                                  "at most n, got " +
                                  std::to_string(mat_.rows()) + " rows");
    }
    if (labels_.empty()) {
      labels_.resize(2 * n + m);
      for (int c = 0; c < 2 * n + m; ++c) labels_[c] = c + 1;
    }
    if (static_cast<int>(labels_.size()) != 2 * n + m) {
      throw InvalidRepresentation("label count does not match columns");
    }
    for (int p = 0; p < n; ++p) {
      const int a = labels_[p];
      const int b = labels_[n + p];
      const bool straight = a == p + 1 && b == n + p + 1;
      const bool crossed = a == n + p + 1 && b == p + 1;
      if (!straight && !crossed) {
        throw InvalidRepresentation(
            "labels must be the reference order up to swapping i and i*");
      }
    }
    for (int j = 0; j < m; ++j) {
      if (labels_[2 * n + j] != 2 * n + j + 1) {
        throw InvalidRepresentation("f columns must keep their labels");
      }
    }
  }

  int n() const { return n_; }
  int m() const { return m_; }
  int k() const { return mat_.rows(); }
  Kind kind() const { return kind_; }
  const Matrix& matrix() const { return mat_; }
  const std::vector<int>& labels() const { return labels_; }

  // True when the left block holds i* (and the right block i).
  bool crossed(int index) const { return labels_[index - 1] != index; }

  Element label_element(int column) const {
    return element_from_code(labels_[column], n_);
  }

  // Physical column carrying element e.
  int column_of(Element e) const {
    const int p = e.index - 1;
    return labels_[p] == element_code(e, n_) ? p : n_ + p;
  }

  // The admissible n-set labelling the right-hand block.
  ElementSet right_block_set() const {
    ElementSet s;
    for (int p = 0; p < n_; ++p) s.insert(label_element(n_ + p));
    return s;
  }

  // Columns sorted into reference label order 1..n, 1*..n*, f.
  Matrix reference_matrix() const {
    Matrix out(k(), mat_.cols());
    for (int c = 0; c < mat_.cols(); ++c) {
      const int dst = labels_[c] - 1;
      for (int r = 0; r < k(); ++r) out(r, dst) = mat_(r, c);
    }
    return out;
  }

  Representation with_matrix(Matrix mat) const {
    return Representation(n_, m_, std::move(mat), kind_, labels_);
  }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.kind_ == b.kind_ &&
           a.labels_ == b.labels_ && a.mat_ == b.mat_;
  }

 private:
  friend Representation swap_columns_unsigned(const Representation&, int);
  friend Representation signed_swap(const Representation&, int);

  int n_;
  int m_;
  Matrix mat_;
  Kind kind_;
  std::vector<int> labels_;
};

// Gram-style pairing of two reference-order coordinate rows under the
// symmetric form of the standard orthogonal space.
inline Rational scalar_product(std::span<const Rational> u,
                               std::span<const Rational> v, int n) {
  Rational s = 0;
  for (int i = 0; i < n; ++i) s += u[i] * v[n + i] + u[n + i] * v[i];
  for (std::size_t k = 2 * n; k < u.size(); ++k) s += u[k] * v[k];
  return s;
}

// Rows of D = (A, B, C) in reference order pairwise isotropic:
//   general:    A B^T + B A^T + C C^T = 0
//   orthogonal: A B^T skew-symmetric (m = 0)
//   symplectic: A B^T symmetric (m = 0)
inline bool check_isotropy(const Representation& rep) {
  if (rep.m() > 0 && rep.kind() != Kind::General) {
    throw KindMismatch("f columns require kind general");
  }
  const Matrix d = rep.reference_matrix();
  const int n = rep.n();
  const Matrix a = d.col_block(0, n);
  const Matrix b = d.col_block(n, n);
  const Matrix ab = a * b.transpose();
  switch (rep.kind()) {
    case Kind::Symplectic:
      return ab.is_symmetric();
    case Kind::Orthogonal:
      return ab.is_skew_symmetric();
    case Kind::General: {
      const Matrix c = d.col_block(2 * n, rep.m());
      return (ab + ab.transpose() + c * c.transpose()).is_zero();
    }
  }
  return false;
}

namespace detail {

inline bool minor_nonzero(const Representation& rep, const ElementSet& x) {
  std::vector<int> rows(rep.k());
  for (int r = 0; r < rep.k(); ++r) rows[r] = r;
  std::vector<int> cols;
  cols.reserve(x.size());
  for (Element e : x.elements()) cols.push_back(rep.column_of(e));
  return det(minor(rep.matrix(), rows, cols)) != 0;
}

}  // namespace detail

// Admissible k-sets of labels whose k x k column minor is nonzero. Skips
// the isotropy precondition; extract_bases is the checked entry point.
inline std::vector<ElementSet> nonzero_admissible_minors(
    const Representation& rep) {
  std::vector<ElementSet> out;
  for (const auto& x : admissible_sets(rep.n(), rep.k())) {
    if (detail::minor_nonzero(rep, x)) out.push_back(x);
  }
  return out;
}

inline BasisCollection extract_bases(const Representation& rep) {
  if (!check_isotropy(rep)) {
    throw NotIsotropic("rows do not span a totally isotropic subspace");
  }
  auto sets = nonzero_admissible_minors(rep);
  if (sets.empty()) {
    throw RankDeficient("no admissible nonzero maximal minor; rows dependent");
  }
  return BasisCollection(rep.n(), rep.k(), std::move(sets));
}

// Lagrangian representation of the orthogonal matroid associated with a
// classical matroid: A = [M; 0], B = [0; N] where the rows of N span the
// null space of M. A B^T = 0, so the result is isotropic for both forms.
inline Representation embed_classical(const Matrix& classical) {
  const int k = classical.rows();
  const int n = classical.cols();
  if (k == 0 || n == 0 || rank(classical) != k) {
    throw RankDeficient("classical representation must have full row rank");
  }
  const Matrix kernel = null_space(classical);
  Matrix d(n, 2 * n);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < n; ++c) d(r, c) = classical(r, c);
  }
  for (int r = 0; r < kernel.rows(); ++r) {
    for (int c = 0; c < n; ++c) d(k + r, n + c) = kernel(r, c);
  }
  return Representation(n, 0, std::move(d), Kind::Orthogonal);
}

// Exchanges the labels i and i* between their two columns; the data stays
// put, so the represented matroid is relabelled by i <-> i*. For the
// symplectic kind the column newly labelled i is negated, which keeps the
// relabelling an isometry of the alternating form (applying it twice then
// negates both columns instead of restoring them).
inline Representation swap_columns_unsigned(const Representation& rep,
                                            int index) {
  if (index < 1 || index > rep.n()) {
    throw IndexOutOfRange("swap index " + std::to_string(index));
  }
  Representation out = rep;
  const int left = index - 1;
  const int right = rep.n() + index - 1;
  std::swap(out.labels_[left], out.labels_[right]);
  if (rep.kind() == Kind::Symplectic) {
    out.mat_.scale_col(out.column_of({index, false}), -1);
  }
  return out;
}

// Moves the columns labelled i and i* to each other's block (labels travel
// with the data) after negating every column whose index is >= i. This is
// the layout change under which orientations are defined.
inline Representation signed_swap(const Representation& rep, int index) {
  if (index < 1 || index > rep.n()) {
    throw IndexOutOfRange("swap index " + std::to_string(index));
  }
  Representation out = rep;
  const int n = rep.n();
  for (int p = index - 1; p < n; ++p) {
    out.mat_.scale_col(p, -1);
    out.mat_.scale_col(n + p, -1);
  }
  out.mat_.swap_cols(index - 1, n + index - 1);
  std::swap(out.labels_[index - 1], out.labels_[n + index - 1]);
  return out;
}

// Brings the layout to reference order with signed swaps.
inline Representation to_reference_layout(const Representation& rep) {
  Representation out = rep;
  for (int i = 1; i <= rep.n(); ++i) {
    if (out.crossed(i)) out = signed_swap(out, i);
  }
  return out;
}

inline Representation apply_row_operations(const Representation& rep,
                                           const Matrix& g) {
  if (!g.is_square() || g.rows() != rep.k() || det(g) == 0) {
    throw DimensionMismatch("row operation must be an invertible k x k matrix");
  }
  return rep.with_matrix(g * rep.matrix());
}

struct RandomIsotropicOptions {
  bool row_operations = true;
  bool label_swaps = true;
};

// Deterministic in `seed`:
//   orthogonal: (S | I_n) with S skew
//   symplectic: (Y | I_n) with Y symmetric
//   general:    (S - C C^T / 2 | I_n | C) with S skew, C random n x m
// optionally followed by random row operations and label swaps.
inline Representation generate_random_isotropic(
    int n, int m, Kind kind, std::uint64_t seed,
    RandomIsotropicOptions options = {}) {
  if (n < 1) throw InvalidRepresentation("n must be positive");
  if (m > 0 && kind != Kind::General) {
    throw KindMismatch("f columns require kind general");
  }
  Rng rng(seed);
  Matrix a;
  Matrix c(n, m);
  switch (kind) {
    case Kind::Symplectic:
      a = random_symmetric(rng, n);
      break;
    case Kind::Orthogonal:
      a = random_skew(rng, n);
      break;
    case Kind::General:
      a = random_skew(rng, n);
      c = random_matrix(rng, n, m);
      a = a - Rational(1, 2) * (c * c.transpose());
      break;
  }
  Matrix d = hcat(hcat(a, Matrix::identity(n)), c);
  Representation rep(n, m, std::move(d), kind);
  if (options.row_operations) {
    rep = apply_row_operations(rep, random_invertible(rng, n));
  }
  if (options.label_swaps) {
    std::bernoulli_distribution coin(0.5);
    for (int i = 1; i <= n; ++i) {
      if (coin(rng)) rep = swap_columns_unsigned(rep, i);
    }
  }
  return rep;
}

}  // namespace lagmat

#endif  // LAGMAT_REPR_HPP_
