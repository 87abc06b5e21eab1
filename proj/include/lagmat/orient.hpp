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

// Orientations from Pfaffians.
//
// A skew matrix A on [n] and a twisting set T give the sign map
//   p(X) = sign Pf(A[X ^ T]).
// For a Lagrangian orthogonal representation, bring some basis F into the
// right block with signed swaps, reduce the right block to the identity and
// read A from the left block; the basis B then gets the sign of the
// principal Pfaffian on the left positions whose label lies in B. A B_n
// representation (A | I | c) is first exploded to the D_{n+1}
// representation with left block [[S, c], [-c^T, 0]], S = A + c c^T / 2.

#ifndef LAGMAT_ORIENT_HPP_
#define LAGMAT_ORIENT_HPP_

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lagmat/axioms.hpp"
#include "lagmat/collection.hpp"
#include "lagmat/error.hpp"
#include "lagmat/ground.hpp"
#include "lagmat/linalg.hpp"
#include "lagmat/pairs.hpp"
#include "lagmat/pfaffian.hpp"
#include "lagmat/repr.hpp"
#include "lagmat/signmap.hpp"

namespace lagmat {

// ---------------------------------------------------------------------------
// Twisted-Pfaffian maps.

// A map from subsets of [n] (as masks) to the rationals.
struct PfaffianMap {
  int n = 0;
  std::vector<Rational> values;  // indexed by mask

  explicit PfaffianMap(int size) : n(size), values(std::size_t{1} << size) {}
  const Rational& operator()(std::uint64_t mask) const { return values[mask]; }
  Rational& operator()(std::uint64_t mask) { return values[mask]; }
};

// X -> Pf(A[X ^ twist]).
inline PfaffianMap twisted_pfaffian_map(const Matrix& skew,
                                        std::uint64_t twist = 0) {
  PfaffianEvaluator pf(skew);
  PfaffianMap out(skew.rows());
  for (std::uint64_t x = 0; x < out.values.size(); ++x) {
    out(x) = pf.principal(x ^ twist);
  }
  return out;
}

struct TwistedPfaffianCheck {
  bool holds = true;
  int failed_condition = 0;  // 1: zero map, 2: mixed parity, 3: identity
  std::uint64_t first = 0;
  std::uint64_t second = 0;
};

// p is nonzero, its support has a single parity, and for all A, B with
// A ^ B = {i_1 < ... < i_l}:
//   sum_j (-1)^j p(A ^ {i_j}) p(B ^ {i_j}) = 0.
inline TwistedPfaffianCheck check_twisted_pfaffian(const PfaffianMap& p) {
  TwistedPfaffianCheck result;
  const std::uint64_t size = p.values.size();
  std::optional<int> parity;
  for (std::uint64_t x = 0; x < size; ++x) {
    if (p(x) == 0) continue;
    const int px = std::popcount(x) % 2;
    if (!parity) {
      parity = px;
    } else if (*parity != px) {
      return {false, 2, x, 0};
    }
  }
  if (!parity) return {false, 1, 0, 0};
  for (std::uint64_t a = 0; a < size; ++a) {
    for (std::uint64_t b = 0; b < size; ++b) {
      Rational sum = 0;
      int j = 1;
      for (std::uint64_t m = a ^ b; m != 0; m &= m - 1, ++j) {
        const std::uint64_t bit = m & -m;
        const Rational term = p(a ^ bit) * p(b ^ bit);
        if (j % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      if (sum != 0) return {false, 3, a, b};
    }
  }
  return result;
}

// sum_j (-1)^j Pf(A[I1 ^ {i_j}]) Pf(A[I2 ^ {i_j}]) over I1 ^ I2.
inline Rational wenzel_identity_residual(const Matrix& skew, std::uint64_t i1,
                                         std::uint64_t i2) {
  PfaffianEvaluator pf(skew);
  Rational sum = 0;
  int j = 1;
  for (std::uint64_t m = i1 ^ i2; m != 0; m &= m - 1, ++j) {
    const std::uint64_t bit = m & -m;
    const Rational term = pf.principal(i1 ^ bit) * pf.principal(i2 ^ bit);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

// X -> sign Pf(A[X ^ twist]); an oriented even Delta-matroid.
inline SignMap orient_delta_from_skew(const Matrix& skew,
                                      std::uint64_t twist = 0) {
  if (!skew.is_skew_symmetric()) throw NotSkewSymmetric("matrix is not skew");
  const PfaffianMap p = twisted_pfaffian_map(skew, twist);
  SignMap out(skew.rows());
  for (std::uint64_t x = 0; x < p.values.size(); ++x) out.set(x, sign(p(x)));
  return out;
}

// ---------------------------------------------------------------------------
// D_n.

namespace detail {

inline void require_lagrangian(const Representation& rep, int m) {
  if (rep.m() != m || rep.k() != rep.n()) {
    throw InvalidRepresentation("need a Lagrangian representation with m = " +
                                std::to_string(m));
  }
  if (m == 0 && rep.kind() == Kind::Symplectic) {
    throw KindMismatch("orientation needs the orthogonal form");
  }
  if (!check_isotropy(rep)) throw NotIsotropic("not totally isotropic");
}

inline BasisCollection bases_of(const Representation& rep) {
  try {
    return extract_bases(rep);
  } catch (const RankDeficient& e) {
    throw NoBasis(e.what());
  }
}

inline ElementSet resolve_basis(const BasisCollection& bases,
                                const std::optional<ElementSet>& chosen) {
  const ElementSet f = chosen ? *chosen : bases.bases().front();
  if (!bases.contains(f)) {
    throw BasisNotInMatroid(to_string(f) + " is not a basis");
  }
  return f;
}

// Signed swaps that move every element of f into the right block.
inline Representation move_to_right(Representation rep, const ElementSet& f) {
  for (int p = 0; p < rep.n(); ++p) {
    if (f.contains(rep.label_element(p))) rep = signed_swap(rep, p + 1);
  }
  return rep;
}

// Left block after reducing the right n x n block to the identity.
inline Matrix reduced_left_block(const Representation& rep) {
  const int n = rep.n();
  const Matrix right = rep.matrix().col_block(n, n);
  if (det(right) == 0) throw NotReducible("right block is singular");
  return inverse(right) * rep.matrix();
}

}  // namespace detail

// Orientation of a Lagrangian orthogonal representation, read off relative
// to the basis f (default: the lexicographically least basis), before
// canonicalization.
inline SignMap orient_dn_signed_swaps(
    const Representation& rep, std::optional<ElementSet> f = std::nullopt) {
  detail::require_lagrangian(rep, 0);
  const int n = rep.n();
  const ElementSet basis = detail::resolve_basis(detail::bases_of(rep), f);
  const Representation moved = detail::move_to_right(rep, basis);
  const Matrix left = detail::reduced_left_block(moved).col_block(0, n);
  if (!left.is_skew_symmetric()) {
    throw NotIsotropic("reduced left block is not skew-symmetric");
  }
  // Left position p holds the partner of basis's element at index p+1, so
  // B takes it exactly when B and basis differ at p+1.
  const PfaffianMap p = twisted_pfaffian_map(left, basis.plain());
  SignMap out(n);
  for (std::uint64_t b = 0; b < p.values.size(); ++b) out.set(b, sign(p(b)));
  return out;
}

inline SignMap orient_dn(const Representation& rep,
                         std::optional<ElementSet> f = std::nullopt) {
  return orient_dn_signed_swaps(rep, f).canonical();
}

// The same map as orient_dn_signed_swaps through the twisting sign vector:
// from the reference layout, swap i and i* without sign changes for every
// i in T = f n [n], reduce, and correct a'_ij by eps_i eps_j with
//   eps_i = (-1)^{#{t in T : t <= i}}.
inline SignMap orient_dn_twisted(const Representation& rep,
                                 std::optional<ElementSet> f = std::nullopt) {
  detail::require_lagrangian(rep, 0);
  const int n = rep.n();
  const ElementSet basis = detail::resolve_basis(detail::bases_of(rep), f);
  const Matrix ref = to_reference_layout(rep).matrix();
  Matrix swapped = ref;
  const std::uint64_t t = basis.plain();
  for (int p = 0; p < n; ++p) {
    if ((t >> p) & 1U) swapped.swap_cols(p, n + p);
  }
  const Matrix right = swapped.col_block(n, n);
  if (det(right) == 0) throw NotReducible("right block is singular");
  Matrix a = (inverse(right) * swapped).col_block(0, n);
  std::vector<int> eps(n);
  int count = 0;
  for (int p = 0; p < n; ++p) {
    if ((t >> p) & 1U) ++count;
    eps[p] = count % 2 == 0 ? 1 : -1;
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a(r, c) *= eps[r] * eps[c];
  }
  return orient_delta_from_skew(a, t);
}

// ---------------------------------------------------------------------------
// B_n.

// The D_{n+1} representation
//   (S c | I 0)
//   (-c^T 0 | 0 1)
// built from the current layout (A | I | c) after reducing its right block,
// with S = A + c c^T / 2. Index n+1 sits in the right block as w, chosen so
// that (D u w) n [n+1] is even for D the right block set.
inline Representation explode_oriented(const Representation& rep) {
  detail::require_lagrangian(rep, 1);
  const int n = rep.n();
  const Matrix reduced = detail::reduced_left_block(rep);
  const Matrix a = reduced.col_block(0, n);
  const Matrix c = reduced.col_block(2 * n, 1);
  const Matrix s = a + Rational(1, 2) * (c * c.transpose());
  if (!s.is_skew_symmetric()) throw NotIsotropic("A + cc^T/2 is not skew");
  const int big = n + 1;
  Matrix out(big, 2 * big);
  for (int r = 0; r < n; ++r) {
    for (int col = 0; col < n; ++col) out(r, col) = s(r, col);
    out(r, n) = c(r, 0);
    out(n, r) = -c(r, 0);
    out(r, big + r) = 1;
  }
  out(n, 2 * big - 1) = 1;
  const bool w_plain = rep.right_block_set().plain_count() % 2 == 1;
  std::vector<int> labels(2 * big);
  for (int p = 0; p < n; ++p) {
    const Element left = rep.label_element(p);
    const Element right = rep.label_element(n + p);
    labels[p] = element_code(left, big);
    labels[big + p] = element_code(right, big);
  }
  labels[n] = element_code({big, w_plain}, big);
  labels[2 * big - 1] = element_code({big, !w_plain}, big);
  return Representation(big, 0, std::move(out), Kind::Orthogonal,
                        std::move(labels));
}

// Orientation of a B_n representation: each basis B is extended by n+1 or
// (n+1)* to an even set and takes the sign of the extension in the
// exploded D_{n+1} representation. `d` (default: lexicographically least
// basis) selects the reduction basis. Returned in canonical form.
inline SignMap orient_bn(const Representation& rep,
                         std::optional<ElementSet> d = std::nullopt) {
  detail::require_lagrangian(rep, 1);
  const int n = rep.n();
  const ElementSet basis = detail::resolve_basis(detail::bases_of(rep), d);
  const Representation moved = detail::move_to_right(rep, basis);
  const Representation big = explode_oriented(moved);
  const SignMap lifted = orient_dn(big, big.right_block_set());
  SignMap out(n);
  for (std::uint64_t b = 0; b < out.domain_size(); ++b) {
    const std::uint64_t ext =
        std::popcount(b) % 2 == 1 ? b | (std::uint64_t{1} << n) : b;
    out.set(b, lifted.at(ext));
  }
  return out.canonical();
}

// ---------------------------------------------------------------------------
// Canonical form of a B_n representation.
//
// With [n]* and [n-1]* u {n} among the bases the reference matrix reduces to
//   ( S - x^2 b b^T / 2     a - x^2 b / 2 | I | x b )
//   ( -a^T - x^2 b^T / 2    -x^2 / 2      |   |  x  )
// with S skew of size n-1, a and b columns and x != 0.

struct BnCanonicalForm {
  Matrix s;  // (n-1) x (n-1)
  Matrix a;  // (n-1) x 1
  Matrix b;  // (n-1) x 1
  Rational x;

  int n() const { return s.rows() + 1; }

  // The reduced n x (2n+1) matrix in reference column order.
  Matrix to_matrix() const {
    const int k = n() - 1;
    const Rational half_x2 = x * x / 2;
    Matrix out(k + 1, 2 * (k + 1) + 1);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) {
        out(r, c) = s(r, c) - half_x2 * b(r, 0) * b(c, 0);
      }
      out(r, k) = a(r, 0) - half_x2 * b(r, 0);
      out(k, r) = -a(r, 0) - half_x2 * b(r, 0);
      out(r, 2 * (k + 1)) = x * b(r, 0);
    }
    out(k, k) = -half_x2;
    out(k, 2 * (k + 1)) = x;
    for (int r = 0; r <= k; ++r) out(r, k + 1 + r) = 1;
    return out;
  }

  Representation to_representation() const {
    return Representation(n(), 1, to_matrix(), Kind::General);
  }

  friend bool operator==(const BnCanonicalForm&,
                         const BnCanonicalForm&) = default;
};

inline BnCanonicalForm bn_canonical_form(const Representation& rep) {
  detail::require_lagrangian(rep, 1);
  const int n = rep.n();
  const BasisCollection bases = extract_bases(rep);
  const ElementSet all_starred = ElementSet::lagrangian(0, n);
  const ElementSet last_plain =
      ElementSet::lagrangian(std::uint64_t{1} << (n - 1), n);
  if (!bases.contains(all_starred) || !bases.contains(last_plain)) {
    throw MissingRequiredBases("need [n]* and [n-1]* u {n} as bases");
  }
  const Matrix ref = rep.reference_matrix();
  const Matrix reduced = inverse(ref.col_block(n, n)) * ref;
  BnCanonicalForm form;
  const int k = n - 1;
  form.x = reduced(k, 2 * n);
  const Rational half_x2 = form.x * form.x / 2;
  form.b = Matrix(k, 1);
  form.a = Matrix(k, 1);
  form.s = Matrix(k, k);
  for (int r = 0; r < k; ++r) form.b(r, 0) = reduced(r, 2 * n) / form.x;
  for (int r = 0; r < k; ++r) {
    form.a(r, 0) = reduced(r, k) + half_x2 * form.b(r, 0);
  }
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      form.s(r, c) = reduced(r, c) + half_x2 * form.b(r, 0) * form.b(c, 0);
    }
  }
  if (!form.s.is_skew_symmetric()) throw NotIsotropic("S is not skew");
  return form;
}

// For A = S - c c^T / 2 and M = [[S, c], [-c^T, 0]]:
//   det A[I] = det M[I]                    for |I| even,
//   det A[I] = -det M[I u {n+1}] / 2       for |I| odd.
// Returns (lhs, rhs).
inline std::pair<Rational, Rational> det_identity_sides(const Matrix& s,
                                                        const Matrix& c,
                                                        std::uint64_t subset) {
  const int n = s.rows();
  if (!s.is_skew_symmetric() || c.rows() != n || c.cols() != 1) {
    throw DimensionMismatch("need skew S and a column c of matching size");
  }
  const Matrix a = s - Rational(1, 2) * (c * c.transpose());
  Matrix big(n + 1, n + 1);
  for (int r = 0; r < n; ++r) {
    for (int col = 0; col < n; ++col) big(r, col) = s(r, col);
    big(r, n) = c(r, 0);
    big(n, r) = -c(r, 0);
  }
  std::vector<int> idx;
  for (int i = 0; i < n; ++i) {
    if ((subset >> i) & 1U) idx.push_back(i);
  }
  const Rational lhs = det(principal_minor(a, idx));
  if (idx.size() % 2 == 0) return {lhs, det(principal_minor(big, idx))};
  idx.push_back(n);
  return {lhs, -det(principal_minor(big, idx)) / 2};
}

inline bool check_det_identity(const Matrix& s, const Matrix& c,
                               std::uint64_t subset) {
  const auto [lhs, rhs] = det_identity_sides(s, c, subset);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Pairs and oriented orthogonal matroids.

namespace detail {

inline SignMap restrict_to(const SignMap& p, const BasisCollection& support) {
  SignMap out(p.n());
  for (const auto& b : support) out.set(b, p.at(b));
  return out;
}

}  // namespace detail

struct PairSignReport {
  bool consistent = false;
  bool first_matches = false;
  bool second_matches = false;
  bool support_matches = false;
};

// Glues (shared, x, y) into a B_n representation and compares its
// orientation against the D_n orientations of the two sides, each up to a
// global sign.
inline PairSignReport pair_sign_consistency(const Matrix& shared,
                                            const Matrix& x,
                                            const Matrix& y) {
  const int n = x.cols() / 2;
  const Representation first(n, 0, vcat(shared, x), Kind::Orthogonal);
  const Representation second(n, 0, vcat(shared, y), Kind::Orthogonal);
  const SignMap p1 = orient_dn(first);
  const SignMap p2 = orient_dn(second);
  const SignMap glued = orient_bn(glue_pair_representations(shared, x, y));
  PairSignReport report;
  const BasisCollection s1 = p1.support_collection();
  const BasisCollection s2 = p2.support_collection();
  std::vector<ElementSet> both = s1.bases();
  both.insert(both.end(), s2.begin(), s2.end());
  report.support_matches =
      glued.support_collection() == BasisCollection(n, n, std::move(both));
  report.first_matches = detail::restrict_to(glued, s1).equivalent(p1);
  report.second_matches = detail::restrict_to(glued, s2).equivalent(p2);
  report.consistent =
      report.support_matches && report.first_matches && report.second_matches;
  return report;
}

struct OrientedOrthogonalCheck {
  bool valid = false;
  std::string reason;
  SignMap delta{0};
};

// A Lagrangian sign map read as a map on subsets of [n], valid when it is
// an oriented even Delta-matroid.
inline OrientedOrthogonalCheck to_oriented_orthogonal(const SignMap& p) {
  OrientedOrthogonalCheck out;
  out.delta = p;
  try {
    const OrientedDeltaCheck check = check_oriented_even_delta(p);
    out.valid = check.holds;
    if (!check.holds) {
      out.reason = "exchange fails for " + std::to_string(check.first) +
                   " and " + std::to_string(check.second);
    }
  } catch (const OddSupport& e) {
    out.reason = e.what();
  } catch (const InvalidCollection& e) {
    out.reason = e.what();
  }
  return out;
}

}  // namespace lagmat

#endif  // LAGMAT_ORIENT_HPP_
