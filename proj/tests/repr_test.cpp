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

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "lagmat/axioms.hpp"
#include "lagmat/repr.hpp"
#include "test_util.hpp"

namespace lagmat {
namespace {

using testing::collection;

Representation skew_example() {
  return Representation(2, 0, Matrix{{0, 2, 1, 0}, {-2, 0, 0, 1}},
                        Kind::Orthogonal);
}

Representation b1_example() {
  return Representation(1, 1, Matrix{{-2, 1, 2}}, Kind::General);
}

TEST(Representation, ValidatesShape) {
  EXPECT_THROW(Representation(2, 0, Matrix(2, 5), Kind::Orthogonal),
               InvalidRepresentation);
  EXPECT_THROW(Representation(2, 0, Matrix(3, 4), Kind::Orthogonal),
               InvalidRepresentation);
  EXPECT_THROW(Representation(0, 0, Matrix(0, 0), Kind::Orthogonal),
               InvalidRepresentation);
  EXPECT_THROW(Representation(2, 0, Matrix(2, 4), Kind::Orthogonal,
                              {2, 1, 3, 4}),
               InvalidRepresentation);
  EXPECT_NO_THROW(Representation(2, 0, Matrix(2, 4), Kind::Orthogonal,
                                 {3, 2, 1, 4}));
}

TEST(Isotropy, Examples) {
  for (Kind kind : {Kind::Symplectic, Kind::Orthogonal, Kind::General}) {
    const Matrix d = hcat(Matrix::identity(3), Matrix(3, 3));
    EXPECT_TRUE(check_isotropy(Representation(3, 0, d, kind)));
  }
  EXPECT_TRUE(check_isotropy(b1_example()));
  EXPECT_TRUE(check_isotropy(skew_example()));
  EXPECT_FALSE(check_isotropy(Representation(
      2, 0, Matrix{{0, 2, 1, 0}, {-2, 0, 0, 1}}, Kind::Symplectic)));
  EXPECT_FALSE(check_isotropy(
      Representation(1, 1, Matrix{{1, 1, 1}}, Kind::General)));
  EXPECT_THROW(check_isotropy(Representation(1, 1, Matrix{{-2, 1, 2}},
                                             Kind::Orthogonal)),
               KindMismatch);
}

TEST(ExtractBases, Examples) {
  const Representation top(3, 0, hcat(Matrix::identity(3), Matrix(3, 3)),
                           Kind::Orthogonal);
  EXPECT_EQ(extract_bases(top), collection(3, 3, {"1 2 3"}));
  EXPECT_EQ(extract_bases(skew_example()),
            collection(2, 2, {"1 2", "1* 2*"}));
  EXPECT_EQ(extract_bases(b1_example()), collection(1, 1, {"1", "1*"}));
}

TEST(ExtractBases, Errors) {
  EXPECT_THROW(extract_bases(Representation(
                   1, 1, Matrix{{1, 1, 1}}, Kind::General)),
               NotIsotropic);
  EXPECT_THROW(extract_bases(Representation(2, 0, Matrix(2, 4),
                                            Kind::Orthogonal)),
               RankDeficient);
}

TEST(EmbedClassical, Examples) {
  EXPECT_EQ(extract_bases(embed_classical(Matrix::identity(3))),
            collection(3, 3, {"1 2 3"}));

  const BasisCollection b = extract_bases(embed_classical(Matrix{{1, 1}}));
  EXPECT_EQ(b, collection(2, 2, {"1 2*", "2 1*"}));
  EXPECT_THROW(embed_classical(Matrix(0, 2)), RankDeficient);
  EXPECT_THROW(embed_classical(Matrix{{1, 1}, {2, 2}}), RankDeficient);
}

// The represented matroid does not depend on which kernel basis is chosen.
TEST(EmbedClassical, IndependentOfComplementBasis) {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(rng, 2, 4);
    if (rank(m) != 2) continue;
    const Representation rep = embed_classical(m);
    const Matrix kernel = null_space(m);
    const Matrix other = random_invertible(rng, kernel.rows()) * kernel;
    Matrix d = rep.matrix();
    for (int r = 0; r < other.rows(); ++r) {
      for (int c = 0; c < 4; ++c) d(2 + r, 4 + c) = other(r, c);
    }
    EXPECT_EQ(extract_bases(rep.with_matrix(d)), extract_bases(rep));
  }
}

// Classical bases are the unstarred parts of the Lagrangian bases.
TEST(EmbedClassical, UnstarredPartsAreClassicalBases) {
  const Matrix m{{1, 0, 1, 2}, {0, 1, 1, 0}};
  const BasisCollection b = extract_bases(embed_classical(m));
  for (const auto& s : b) {
    EXPECT_EQ(s.plain_count(), 2);
    std::vector<int> cols;
    for (int i = 0; i < 4; ++i) {
      if ((s.plain() >> i) & 1U) cols.push_back(i);
    }
    EXPECT_NE(det(minor(m, std::vector<int>{0, 1}, cols)), 0);
  }
  EXPECT_EQ(b.size(), 5U);
}

TEST(SwapColumns, Examples) {
  const Representation top(1, 0, Matrix{{1, 0}}, Kind::Orthogonal);
  EXPECT_EQ(extract_bases(swap_columns_unsigned(top, 1)),
            collection(1, 1, {"1*"}));
  const Representation rep = skew_example();
  EXPECT_EQ(extract_bases(swap_columns_unsigned(rep, 1)),
            collection(2, 2, {"1* 2", "1 2*"}));
  EXPECT_EQ(swap_columns_unsigned(swap_columns_unsigned(rep, 1), 1), rep);
}

TEST(SwapColumns, SymplecticTwiceRestoresTheMatroid) {
  const Representation rep(2, 0, Matrix{{1, 2, 1, 0}, {2, 3, 0, 1}},
                           Kind::Symplectic);
  ASSERT_TRUE(check_isotropy(rep));
  const Representation once = swap_columns_unsigned(rep, 2);
  EXPECT_TRUE(check_isotropy(once));
  const Representation twice = swap_columns_unsigned(once, 2);
  EXPECT_EQ(extract_bases(twice), extract_bases(rep));
  EXPECT_EQ(twice.labels(), rep.labels());
}

TEST(SignedSwap, InvolutiveAndCommuting) {
  const Representation rep =
      generate_random_isotropic(3, 0, Kind::Orthogonal, 42);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(signed_swap(signed_swap(rep, i), i), rep);
    for (int j = 1; j <= 3; ++j) {
      EXPECT_EQ(signed_swap(signed_swap(rep, i), j),
                signed_swap(signed_swap(rep, j), i));
    }
    EXPECT_EQ(extract_bases(signed_swap(rep, i)), extract_bases(rep));
  }
  EXPECT_THROW(signed_swap(rep, 4), IndexOutOfRange);
}

TEST(SignedSwap, ReferenceLayoutIsStraight) {
  const Representation rep =
      generate_random_isotropic(4, 0, Kind::Orthogonal, 9);
  const Representation ref = to_reference_layout(rep);
  for (int i = 1; i <= 4; ++i) EXPECT_FALSE(ref.crossed(i));
  EXPECT_EQ(extract_bases(ref), extract_bases(rep));
}

TEST(RandomIsotropic, DeterministicAndIsotropic) {
  for (Kind kind : {Kind::Symplectic, Kind::Orthogonal, Kind::General}) {
    for (int m : {0, 1, 2}) {
      if (m > 0 && kind != Kind::General) continue;
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Representation a = generate_random_isotropic(3, m, kind, seed);
        EXPECT_TRUE(check_isotropy(a));
        EXPECT_EQ(a, generate_random_isotropic(3, m, kind, seed));
      }
    }
  }
  EXPECT_THROW(generate_random_isotropic(2, 1, Kind::Orthogonal, 0),
               KindMismatch);
}

TEST(RandomIsotropic, SeedZeroGivesASymplecticMatroid) {
  const auto rep = generate_random_isotropic(3, 1, Kind::General, 0);
  EXPECT_TRUE(is_symplectic_matroid(extract_bases(rep)).holds);
}

TEST(RowEquivalence, SameBases) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Kind kind = seed % 3 == 0   ? Kind::Symplectic
                      : seed % 3 == 1 ? Kind::Orthogonal
                                      : Kind::General;
    const int m = kind == Kind::General ? 1 + static_cast<int>(seed % 2) : 0;
    const auto rep = generate_random_isotropic(3, m, kind, seed);
    Rng rng(seed + 1000);
    const auto other = apply_row_operations(rep, random_invertible(rng, 3));
    EXPECT_EQ(extract_bases(other), extract_bases(rep));
  }
}

// Every isotropic representation yields a symplectic matroid.
TEST(Theorem, IsotropicRepresentationsGiveSymplecticMatroids) {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 2; ++m) {
      for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Kind kind = m > 0 ? Kind::General
                                : (seed % 2 ? Kind::Orthogonal
                                            : Kind::Symplectic);
        const auto rep = generate_random_isotropic(n, m, kind, seed);
        EXPECT_TRUE(is_symplectic_matroid(extract_bases(rep)).holds)
            << "n=" << n << " m=" << m << " seed=" << seed;
      }
    }
  }
}

TEST(Theorem, OrthogonalLagrangianSatisfiesStrongExchange) {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto rep = generate_random_isotropic(n, 0, Kind::Orthogonal, seed);
      EXPECT_TRUE(check_strong_exchange(extract_bases(rep)).holds);
    }
  }
}

TEST(Theorem, NonLagrangianSubspace) {
  // A rank-1 isotropic line: bases are admissible singletons.
  const Representation line(2, 0, Matrix{{1, 1, 0, 0}}, Kind::Orthogonal);
  EXPECT_EQ(extract_bases(line), collection(2, 1, {"1", "2"}));
}

}  // namespace
}  // namespace lagmat
