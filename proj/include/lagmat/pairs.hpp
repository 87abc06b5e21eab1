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

// Lagrangian pairs of orthogonal matroids and of subspaces: detection,
// intersection matroid, parity completion, union, exploded union, and the
// gluing / splitting of B_n representations.

#ifndef LAGMAT_PAIRS_HPP_
#define LAGMAT_PAIRS_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "lagmat/axioms.hpp"
#include "lagmat/collection.hpp"
#include "lagmat/error.hpp"
#include "lagmat/ground.hpp"
#include "lagmat/linalg.hpp"
#include "lagmat/repr.hpp"

namespace lagmat {

struct PairCheck {
  bool holds = true;
  std::optional<AdmissibleOrdering> witness;
  ElementSet first_max;
  ElementSet second_max;
};

namespace detail {

inline bool is_lagrangian_pair_of_sets(const ElementSet& a,
                                       const ElementSet& b) {
  const ElementSet d = a ^ b;
  return d.plain() == d.starred() && std::popcount(d.plain()) == 1;
}

inline void require_same_lagrangian_ground(const BasisCollection& a,
                                           const BasisCollection& b) {
  if (a.n() != b.n() || !a.is_lagrangian() || !b.is_lagrangian()) {
    throw NotLagrangian("pairs need two rank-n collections on one ground set");
  }
}

}  // namespace detail

// Every D_n ordering's two Gale maxima differ by exactly {i, i*}.
inline PairCheck is_lagrangian_pair(const BasisCollection& first,
                                    const BasisCollection& second,
                                    int max_n = kDefaultScanLimit) {
  detail::require_same_lagrangian_ground(first, second);
  if (!is_orthogonal_matroid(first, max_n).holds ||
      !is_orthogonal_matroid(second, max_n).holds) {
    throw NotOrthogonalMatroid("both sides must be orthogonal matroids");
  }
  PairCheck result;
  for_each_admissible_ordering(
      first.n(), Variant::D, [&](const AdmissibleOrdering& ord) {
        const ElementSet a = *max_basis(first, ord).max;
        const ElementSet b = *max_basis(second, ord).max;
        if (detail::is_lagrangian_pair_of_sets(a, b)) return true;
        result = {false, ord, a, b};
        return false;
      });
  return result;
}

// Two Lagrangian orthogonal matroids forming a Lagrangian pair; the sides
// carry opposite parities.
class LagrangianPair {
 public:
  static LagrangianPair make(BasisCollection first, BasisCollection second,
                             int max_n = kDefaultScanLimit) {
    try {
      if (!is_lagrangian_pair(first, second, max_n).holds) {
        throw NotAPair("maxima are not always a Lagrangian pair of sets");
      }
    } catch (const NotOrthogonalMatroid& e) {
      throw NotAPair(e.what());
    } catch (const NotLagrangian& e) {
      throw NotAPair(e.what());
    }
    return LagrangianPair(std::move(first), std::move(second));
  }

  int n() const { return first_.n(); }
  const BasisCollection& first() const { return first_; }
  const BasisCollection& second() const { return second_; }
  int first_parity() const { return first_.bases().front().plain_count() % 2; }
  int second_parity() const {
    return second_.bases().front().plain_count() % 2;
  }

  // Same pair regardless of which side is listed first.
  bool same_sides(const LagrangianPair& o) const {
    return (first_ == o.first_ && second_ == o.second_) ||
           (first_ == o.second_ && second_ == o.first_);
  }

 private:
  LagrangianPair(BasisCollection a, BasisCollection b)
      : first_(std::move(a)), second_(std::move(b)) {}

  BasisCollection first_;
  BasisCollection second_;
};

// { max(M1) n max(M2) : over all D_n orderings }, a rank n-1 collection.
inline BasisCollection pair_intersection_matroid(const LagrangianPair& pair) {
  std::vector<ElementSet> sets;
  for_each_admissible_ordering(
      pair.n(), Variant::D, [&](const AdmissibleOrdering& ord) {
        sets.push_back(*max_basis(pair.first(), ord).max &
                       *max_basis(pair.second(), ord).max);
        return true;
      });
  return BasisCollection(pair.n(), pair.n() - 1, std::move(sets));
}

// Completes each basis by its free index i as i or i*, once to an even and
// once to an odd number of unstarred elements. Returns (even, odd).
inline LagrangianPair complete_to_pair(const BasisCollection& b,
                                       int max_n = kDefaultScanLimit) {
  const int n = b.n();
  if (n < 1 || b.rank() != n - 1) {
    throw NotCompletable("need a rank n-1 collection");
  }
  if (!is_orthogonal_matroid(b, max_n).holds) {
    throw NotCompletable("collection is not an orthogonal matroid");
  }
  std::vector<ElementSet> even;
  std::vector<ElementSet> odd;
  for (const auto& s : b) {
    const std::uint64_t free = ElementSet::full_mask(n) & ~s.support();
    const int index = std::countr_zero(free) + 1;
    ElementSet with_plain = s;
    with_plain.insert({index, false});
    ElementSet with_star = s;
    with_star.insert({index, true});
    if (with_plain.plain_count() % 2 == 0) {
      even.push_back(with_plain);
      odd.push_back(with_star);
    } else {
      even.push_back(with_star);
      odd.push_back(with_plain);
    }
  }
  try {
    return LagrangianPair::make(BasisCollection(n, n, std::move(even)),
                                BasisCollection(n, n, std::move(odd)), max_n);
  } catch (const NotAPair& e) {
    throw NotCompletable(e.what());
  }
}

inline BasisCollection pair_union(const LagrangianPair& pair) {
  std::vector<ElementSet> sets = pair.first().bases();
  sets.insert(sets.end(), pair.second().begin(), pair.second().end());
  return BasisCollection(pair.n(), pair.n(), std::move(sets));
}

// { B u {n+1} : B in first } u { B u {(n+1)*} : B in second }.
inline BasisCollection exploded_union(const BasisCollection& first,
                                      const BasisCollection& second) {
  detail::require_same_lagrangian_ground(first, second);
  const int n = first.n();
  std::vector<ElementSet> sets;
  for (auto s : first) {
    s.insert({n + 1, false});
    sets.push_back(s);
  }
  for (auto s : second) {
    s.insert({n + 1, true});
    sets.push_back(s);
  }
  return BasisCollection(n + 1, n + 1, std::move(sets));
}

inline bool is_pair_via_explosion(const BasisCollection& first,
                                  const BasisCollection& second,
                                  int max_n = kDefaultScanLimit) {
  return is_orthogonal_matroid(exploded_union(first, second), max_n + 1).holds;
}

// True iff the collection splits by parity into a Lagrangian pair.
inline bool splits_into_pair(const BasisCollection& b,
                             int max_n = kDefaultScanLimit) {
  if (!b.is_lagrangian()) return false;
  std::vector<ElementSet> even;
  std::vector<ElementSet> odd;
  for (const auto& s : b) (s.plain_count() % 2 == 0 ? even : odd).push_back(s);
  if (even.empty() || odd.empty()) return false;
  try {
    return is_lagrangian_pair(BasisCollection(b.n(), b.n(), even),
                              BasisCollection(b.n(), b.n(), odd), max_n)
        .holds;
  } catch (const NotOrthogonalMatroid&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Subspace level. Rows are coordinate vectors in reference column order.

// A Lagrangian pair of subspaces: the shared (n-1)-dimensional span and one
// completing row for each side.
struct SubspacePair {
  Matrix shared;  // (n-1) x 2n
  Matrix x;       // 1 x 2n
  Matrix y;       // 1 x 2n
};

namespace detail {

inline Matrix row_swap_blocks(const Matrix& rows, int n) {
  Matrix out(rows.rows(), rows.cols());
  for (int r = 0; r < rows.rows(); ++r) {
    for (int i = 0; i < n; ++i) {
      out(r, i) = rows(r, n + i);
      out(r, n + i) = rows(r, i);
    }
  }
  return out;
}

inline bool rational_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  root = Rational(sqrt(num), sqrt(den));
  root.canonicalize();
  return true;
}

// Reduces v modulo the row space of `basis_rref` (an RREF with pivots) and
// scales the leading nonzero entry to 1.
inline Matrix normalize_modulo(Matrix v, const RrefResult& basis) {
  for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
    const Rational f = v(0, basis.pivots[i]);
    if (f == 0) continue;
    for (int c = 0; c < v.cols(); ++c) {
      v(0, c) -= f * basis.reduced(static_cast<int>(i), c);
    }
  }
  for (int c = 0; c < v.cols(); ++c) {
    if (v(0, c) != 0) {
      const Rational inv = 1 / v(0, c);
      for (int k = 0; k < v.cols(); ++k) v(0, k) *= inv;
      break;
    }
  }
  return v;
}

inline bool row_less(const Matrix& a, const Matrix& b) {
  auto lead = [](const Matrix& v) {
    for (int c = 0; c < v.cols(); ++c) {
      if (v(0, c) != 0) return c;
    }
    return v.cols();
  };
  if (lead(a) != lead(b)) return lead(a) < lead(b);
  for (int c = 0; c < a.cols(); ++c) {
    if (a(0, c) != b(0, c)) return a(0, c) < b(0, c);
  }
  return false;
}

}  // namespace detail

// The two Lagrangian subspaces containing a totally isotropic subspace of
// dimension n-1 in the orthogonal 2n-space. The annihilator W of U has
// dimension n+1; on W / U the form is a hyperbolic plane whose two
// isotropic lines give the completions. Each completion row is reduced
// modulo U and scaled to a leading 1; the pair is returned in increasing
// row order.
inline std::pair<Matrix, Matrix> lagrangian_extensions(const Matrix& shared,
                                                       int n) {
  if (shared.cols() != 2 * n || shared.rows() != n - 1 ||
      rank(shared) != n - 1) {
    throw DegeneratePair("shared block must have n-1 independent rows");
  }
  for (int r = 0; r < shared.rows(); ++r) {
    for (int s = r; s < shared.rows(); ++s) {
      if (scalar_product(shared.row(r), shared.row(s), n) != 0) {
        throw NotIsotropic("shared rows are not totally isotropic");
      }
    }
  }
  const Matrix annihilator = null_space(detail::row_swap_blocks(shared, n));
  const RrefResult u = rref(shared);
  // Two annihilator vectors independent modulo U.
  std::vector<Matrix> extra;
  Matrix span = shared;
  for (int r = 0; r < annihilator.rows() && extra.size() < 2; ++r) {
    Matrix candidate = vcat(span, annihilator.row_matrix(r));
    if (rank(candidate) > rank(span)) {
      extra.push_back(annihilator.row_matrix(r));
      span = std::move(candidate);
    }
  }
  if (extra.size() != 2) throw DegeneratePair("annihilator too small");
  const auto q = [&](const Matrix& a, const Matrix& b) {
    return scalar_product(a.row(0), b.row(0), n);
  };
  const Rational q11 = q(extra[0], extra[0]) / 2;
  const Rational q12 = q(extra[0], extra[1]) / 2;
  const Rational q22 = q(extra[1], extra[1]) / 2;
  // Isotropic (s, t): q11 s^2 + 2 q12 s t + q22 t^2 = 0.
  std::vector<std::pair<Rational, Rational>> roots;
  if (q11 == 0) {
    roots.emplace_back(1, 0);
    roots.emplace_back(q22, -2 * q12);
  } else {
    Rational root;
    if (!detail::rational_sqrt(q12 * q12 - q11 * q22, root)) {
      throw DegeneratePair("quotient plane has no rational isotropic line");
    }
    roots.emplace_back(-q12 + root, q11);
    roots.emplace_back(-q12 - root, q11);
  }
  std::vector<Matrix> lines;
  for (const auto& [s, t] : roots) {
    Matrix v = s * extra[0] + t * extra[1];
    lines.push_back(detail::normalize_modulo(std::move(v), u));
  }
  if (lines[0] == lines[1]) throw DegeneratePair("isotropic lines coincide");
  if (detail::row_less(lines[1], lines[0])) std::swap(lines[0], lines[1]);
  return {lines[0], lines[1]};
}

// Splits two Lagrangian subspaces meeting in dimension n-1.
inline SubspacePair split_subspace_pair(const Representation& first,
                                        const Representation& second) {
  const int n = first.n();
  if (second.n() != n || first.m() != 0 || second.m() != 0 ||
      first.k() != n || second.k() != n) {
    throw NotAPair("need two Lagrangian representations without f columns");
  }
  const Matrix r1 = first.reference_matrix();
  const Matrix r2 = second.reference_matrix();
  if (rank(r1) != n || rank(r2) != n) throw RankDeficient("rows dependent");
  // (l, m) with l r1 = m r2.
  const Matrix coeffs = null_space(vcat(r1, -r2).transpose());
  Matrix shared(coeffs.rows(), 2 * n);
  for (int r = 0; r < coeffs.rows(); ++r) {
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < 2 * n; ++c) shared(r, c) += coeffs(r, i) * r1(i, c);
    }
  }
  shared = row_space_basis(shared);
  if (shared.rows() != n - 1) {
    throw NotAPair("subspaces meet in dimension " +
                   std::to_string(shared.rows()) + ", expected n-1");
  }
  auto pick_outside = [&](const Matrix& rows) {
    for (int r = 0; r < rows.rows(); ++r) {
      if (rank(vcat(shared, rows.row_matrix(r))) == n) {
        return rows.row_matrix(r);
      }
    }
    throw NotAPair("no completing row");
  };
  return {shared, pick_outside(r1), pick_outside(r2)};
}

// [[A, 0], [x + beta y, c]] with c = 1 and beta = -1 / (2 <x, y>), so that
// <x, beta y> = -c^2 / 2 and the new row is isotropic.
inline Representation glue_pair_representations(const Matrix& shared,
                                                const Matrix& x,
                                                const Matrix& y) {
  const int n = x.cols() / 2;
  if (x.cols() != 2 * n || y.cols() != 2 * n || x.rows() != 1 ||
      y.rows() != 1 || shared.cols() != 2 * n || shared.rows() != n - 1) {
    throw DimensionMismatch("gluing needs (n-1) x 2n, 1 x 2n and 1 x 2n");
  }
  const Matrix side_x = vcat(shared, x);
  const Matrix side_y = vcat(shared, y);
  for (const Matrix* side : {&side_x, &side_y}) {
    for (int r = 0; r < n; ++r) {
      for (int s = r; s < n; ++s) {
        if (scalar_product(side->row(r), side->row(s), n) != 0) {
          throw NotIsotropic("a side of the pair is not totally isotropic");
        }
      }
    }
    if (rank(*side) != n) throw RankDeficient("a side is not Lagrangian");
  }
  const Rational xy = scalar_product(x.row(0), y.row(0), n);
  if (xy == 0) throw DegeneratePair("<x, y> = 0");
  const Rational beta = -1 / (2 * xy);
  Matrix d(n, 2 * n + 1);
  for (int r = 0; r < n - 1; ++r) {
    for (int c = 0; c < 2 * n; ++c) d(r, c) = shared(r, c);
  }
  for (int c = 0; c < 2 * n; ++c) d(n - 1, c) = x(0, c) + beta * y(0, c);
  d(n - 1, 2 * n) = 1;
  return Representation(n, 1, std::move(d), Kind::General);
}

struct RepresentationPair {
  Representation first;
  Representation second;
  SubspacePair subspaces;
};

// Either the two D_n representations whose union is the input, or the
// input itself as an orthogonal representation when its f column vanishes.
using Decomposition = std::variant<RepresentationPair, Representation>;

inline Decomposition decompose_bn_representation(const Representation& rep) {
  if (rep.m() != 1 || rep.k() != rep.n()) {
    throw InvalidRepresentation("decomposition needs m = 1 and k = n");
  }
  if (!check_isotropy(rep)) throw NotIsotropic("not totally isotropic");
  const int n = rep.n();
  Matrix d = rref(rep.reference_matrix()).reduced;
  int pivot_row = -1;
  for (int r = 0; r < n; ++r) {
    if (d(r, 2 * n) != 0) {
      pivot_row = r;
      break;
    }
  }
  if (pivot_row < 0) {
    return Representation(n, 0, d.col_block(0, 2 * n), Kind::Orthogonal);
  }
  const Rational inv = 1 / d(pivot_row, 2 * n);
  for (int c = 0; c <= 2 * n; ++c) d(pivot_row, c) *= inv;
  for (int r = 0; r < n; ++r) {
    if (r != pivot_row) d.add_row_multiple(r, pivot_row, -d(r, 2 * n));
  }
  Matrix shared(n - 1, 2 * n);
  for (int r = 0, out = 0; r < n; ++r) {
    if (r == pivot_row) continue;
    for (int c = 0; c < 2 * n; ++c) shared(out, c) = d(r, c);
    ++out;
  }
  auto [x, y] = lagrangian_extensions(shared, n);
  Representation first(n, 0, vcat(shared, x), Kind::Orthogonal);
  Representation second(n, 0, vcat(shared, y), Kind::Orthogonal);
  return RepresentationPair{std::move(first), std::move(second),
                            SubspacePair{shared, x, y}};
}

// A random Lagrangian pair of subspaces: a random orthogonal Lagrangian
// subspace, a random hyperplane in it, and that hyperplane's two
// completions.
inline SubspacePair random_subspace_pair(int n, std::uint64_t seed) {
  Rng rng(seed);
  const Representation base = generate_random_isotropic(
      n, 0, Kind::Orthogonal, rng(), {.row_operations = true,
                                      .label_swaps = true});
  const Matrix l = base.reference_matrix();
  Matrix combo;
  do {
    combo = random_matrix(rng, n - 1, n, 2, 0.3);
  } while (rank(combo) != n - 1);
  const Matrix shared = row_space_basis(combo * l);
  auto [x, y] = lagrangian_extensions(shared, n);
  return {shared, x, y};
}

}  // namespace lagmat

#endif  // LAGMAT_PAIRS_HPP_
