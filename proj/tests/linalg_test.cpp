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

#include <vector>

#include <gtest/gtest.h>

#include "lagmat/linalg.hpp"
#include "lagmat/matrix.hpp"
#include "lagmat/random.hpp"

namespace lagmat {
namespace {

TEST(Rational, ParsesIntegersAndFractions) {
  Rational q;
  ASSERT_TRUE(parse_rational("-3/6", q));
  EXPECT_EQ(q, Rational(-1, 2));
  EXPECT_EQ(q.get_den(), 2);
  ASSERT_TRUE(parse_rational("+7", q));
  EXPECT_EQ(q, 7);
  EXPECT_FALSE(parse_rational("1/0", q));
  EXPECT_FALSE(parse_rational("1/", q));
  EXPECT_FALSE(parse_rational("/2", q));
  EXPECT_FALSE(parse_rational("1.5", q));
  EXPECT_FALSE(parse_rational("", q));
  EXPECT_FALSE(parse_rational("4/-6", q));
  ASSERT_TRUE(parse_rational("-4/6", q));
  EXPECT_EQ(to_string(q), "-2/3");
}

TEST(Rref, Examples) {
  const auto id = rref(Matrix::identity(3));
  EXPECT_EQ(id.reduced, Matrix::identity(3));
  EXPECT_EQ(id.pivots, (std::vector<int>{0, 1, 2}));

  const auto r = rref(Matrix{{2, 4}, {1, 2}});
  EXPECT_EQ(r.reduced, (Matrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, std::vector<int>{0});

  const auto z = rref(Matrix(2, 3));
  EXPECT_EQ(z.reduced, Matrix(2, 3));
  EXPECT_TRUE(z.pivots.empty());
}

TEST(Rref, IsIdempotentAndPreservesRowSpace) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const Matrix m = random_matrix(rng, 3, 5);
    const auto r = rref(m);
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
    EXPECT_EQ(rank(vcat(m, r.reduced)), rank(m));
  }
}

TEST(Det, Examples) {
  EXPECT_EQ(det(Matrix::identity(3)), 1);
  EXPECT_EQ(det(Matrix{{0, 2}, {-2, 0}}), 4);
  EXPECT_EQ(det(Matrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(det(Matrix(0, 0)), 1);
  EXPECT_THROW(det(Matrix(2, 3)), NonSquare);
}

TEST(Det, IsMultiplicative) {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    const Matrix a = random_matrix(rng, 4, 4);
    const Matrix b = random_matrix(rng, 4, 4);
    EXPECT_EQ(det(a * b), det(a) * det(b));
  }
}

TEST(Minor, Examples) {
  EXPECT_EQ(minor(Matrix::identity(3), {0, 1}, {0, 1}), Matrix::identity(2));
  const Matrix empty = minor(Matrix::identity(3), {}, {});
  EXPECT_EQ(empty.rows(), 0);
  EXPECT_EQ(empty.cols(), 0);
  EXPECT_EQ(minor(Matrix{{1, 2}, {3, 4}}, {1}, {0}), (Matrix{{3}}));
  EXPECT_THROW(minor(Matrix::identity(2), {2}, {0}), IndexOutOfRange);
}

TEST(NullSpace, SpansTheKernel) {
  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    const Matrix m = random_matrix(rng, 3, 6);
    const Matrix k = null_space(m);
    EXPECT_EQ(k.rows(), 6 - rank(m));
    EXPECT_TRUE((m * k.transpose()).is_zero());
    EXPECT_EQ(rank(k), k.rows());
  }
}

TEST(Inverse, RoundTrip) {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const Matrix g = random_invertible(rng, 4);
    EXPECT_EQ(g * inverse(g), Matrix::identity(4));
  }
  EXPECT_THROW(inverse(Matrix{{1, 2}, {2, 4}}), RankDeficient);
}

// Nonzero maximal minors do not change under row operations.
TEST(Minor, MaximalMinorSupportIsRowInvariant) {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = random_matrix(rng, 2, 5);
    const Matrix g = random_invertible(rng, 2);
    const Matrix gm = g * m;
    for (int a = 0; a < 5; ++a) {
      for (int b = a + 1; b < 5; ++b) {
        EXPECT_EQ(det(minor(m, {0, 1}, {a, b})) != 0,
                  det(minor(gm, {0, 1}, {a, b})) != 0);
      }
    }
  }
}

TEST(Matrix, ShapesAndPredicates) {
  const Matrix s{{0, 1}, {-1, 0}};
  EXPECT_TRUE(s.is_skew_symmetric());
  EXPECT_FALSE(s.is_symmetric());
  EXPECT_EQ(s.transpose(), -s);
  EXPECT_EQ(hcat(s, s).cols(), 4);
  EXPECT_EQ(vcat(s, s).rows(), 4);
  EXPECT_EQ(hcat(s, Matrix::identity(2)).col_block(2, 2), Matrix::identity(2));
}

}  // namespace
}  // namespace lagmat
