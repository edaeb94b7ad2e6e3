// Copyright 2026 The zxw Authors
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

#include <gtest/gtest.h>

#include <random>

#include "zxw/numerics.hpp"

using namespace zxw;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::normal_distribution<double> g;
  Matrix m(r, c);
  for (auto& v : m.a) v = {g(rng), g(rng)};
  return m;
}

RingElement random_ring(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-1024, 1024), ex(0, 6);
  return {Dyadic(num(rng), ex(rng)), Dyadic(num(rng), ex(rng)), Dyadic(num(rng), ex(rng)), Dyadic(num(rng), ex(rng))};
}

}  // namespace

TEST(Kron, BasisStates) {
  Matrix k0(2, 1, {1, 0}), k1(2, 1, {0, 1});
  Matrix r = kron(k0, k1);
  EXPECT_EQ(r.rows, 4u);
  EXPECT_EQ(r.cols, 1u);
  EXPECT_EQ(r.a, (std::vector<Complex>{0, 1, 0, 0}));
}

TEST(Kron, IdentityTimesIdentity) { EXPECT_EQ(kron(Matrix::identity(2), Matrix::identity(2)), Matrix::identity(4)); }

TEST(Kron, CapIsSumOfDiagonalKets) {
  Matrix k0(2, 1, {1, 0}), k1(2, 1, {0, 1});
  Matrix cap(4, 1);
  for (std::size_t i = 0; i < 4; ++i) cap.a[i] = kron(k0, k0).a[i] + kron(k1, k1).a[i];
  EXPECT_EQ(cap.a, (std::vector<Complex>{1, 0, 0, 1}));
}

TEST(Kron, EntryFormula) {
  std::mt19937_64 rng(3);
  Matrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 2);
  Matrix k = kron(a, b);
  ASSERT_EQ(k.rows, 6u);
  ASSERT_EQ(k.cols, 6u);
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t j1 = 0; j1 < 3; ++j1)
      for (std::size_t i2 = 0; i2 < 3; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2) EXPECT_EQ(k(i1 * 3 + i2, j1 * 2 + j2), a(i1, j1) * b(i2, j2));
}

TEST(Kron, AssociativeExactly) {
  // Gaussian-integer entries keep every product exact in floating point.
  std::mt19937_64 rng(5);
  auto gauss = [&](std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> u(-9, 9);
    Matrix m(r, c);
    for (auto& v : m.a) v = {double(u(rng)), double(u(rng))};
    return m;
  };
  for (int t = 0; t < 20; ++t) {
    Matrix a = gauss(2, 1), b = gauss(1, 3), c = gauss(2, 2);
    Matrix l = kron(kron(a, b), c), r = kron(a, kron(b, c));
    ASSERT_EQ(l.rows, r.rows);
    ASSERT_EQ(l.cols, r.cols);
    EXPECT_EQ(l, r);
  }
}

TEST(Kron, OverflowIsReported) {
  BasicMatrix<int> big;
  big.rows = std::size_t{1} << 30;
  big.cols = 1;
  EXPECT_THROW(kron(big, big), DimensionOverflow);
}

TEST(ScalarEquiv, Scaling) {
  auto c = scalar_equiv(Matrix::identity(2), 2.0 * Matrix::identity(2));
  ASSERT_TRUE(c);
  EXPECT_NEAR(std::abs(*c - 0.5), 0, 1e-15);
}

TEST(ScalarEquiv, HadamardVersusPhase) {
  double s = 1 / std::sqrt(2.0);
  Matrix h(2, 2, {s, s, s, -s});
  EXPECT_FALSE(scalar_equiv(h, diag({1, Complex(0, 1)})));
}

TEST(ScalarEquiv, ZeroConventions) {
  Matrix z(2, 2);
  auto c = scalar_equiv(z, z);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, Complex(1, 0));
  EXPECT_FALSE(scalar_equiv(z, Matrix::identity(2)));
  EXPECT_FALSE(scalar_equiv(Matrix::identity(2), z));
}

TEST(ScalarEquiv, ShapeMismatchThrows) { EXPECT_THROW(scalar_equiv(Matrix(2, 1), Matrix(1, 2)), ShapeError); }

TEST(ScalarEquiv, EquivalenceRelationOnRandomMatrices) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int t = 0; t < 50; ++t) {
    Matrix a = random_matrix(rng, 3, 2);
    Complex k1(g(rng), g(rng)), k2(g(rng), g(rng));
    Matrix b = k1 * a, c = k2 * b;
    auto self = scalar_equiv(a, a);
    ASSERT_TRUE(self);
    EXPECT_NEAR(std::abs(*self - 1.0), 0, 1e-12);
    auto ab = scalar_equiv(a, b), ba = scalar_equiv(b, a);
    ASSERT_TRUE(ab && ba);
    EXPECT_NEAR(std::abs(*ab * *ba - 1.0), 0, 1e-9);
    auto bc = scalar_equiv(b, c), ac = scalar_equiv(a, c);
    ASSERT_TRUE(bc && ac);
    EXPECT_NEAR(std::abs(*ab * *bc - *ac), 0, 1e-9);
  }
}

TEST(Dyadic, Canonical) {
  Dyadic d(4, 3);
  EXPECT_EQ(d.numerator(), 1);
  EXPECT_EQ(d.exponent(), 1u);
  Dyadic z(0, 5);
  EXPECT_EQ(z.exponent(), 0u);
  EXPECT_EQ(Dyadic(1, 1) + Dyadic(1, 1), Dyadic(1));
  EXPECT_EQ(Dyadic(3, 2) * Dyadic(2, 0), Dyadic(3, 1));
}

TEST(Dyadic, OverflowIsReported) {
  Dyadic big(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, std::overflow_error);
}

TEST(Ring, OmegaTimesOmegaCubed) {
  EXPECT_EQ(ring_mul(RingElement::omega_pow(1), RingElement::omega_pow(3)), RingElement(-1));
}

TEST(Ring, InvSqrt2Squared) {
  RingElement r = RingElement::inv_sqrt2();
  EXPECT_EQ(ring_mul(r, r), RingElement(Dyadic(1, 1), Dyadic(0), Dyadic(0), Dyadic(0)));
  // Independent check in floating point.
  EXPECT_NEAR(std::abs(ring_to_complex(r) - 1 / std::sqrt(2.0)), 0, 1e-15);
}

TEST(Ring, OmegaSquaredIsI) {
  RingElement w = RingElement::omega_pow(1);
  EXPECT_EQ(ring_mul(w, w), RingElement(Dyadic(0), Dyadic(0), Dyadic(1), Dyadic(0)));
}

TEST(Ring, ToComplexBasis) {
  double h = std::sqrt(2.0) / 2;
  EXPECT_EQ(ring_to_complex(RingElement(1)), Complex(1, 0));
  EXPECT_NEAR(std::abs(ring_to_complex(RingElement::omega_pow(1)) - Complex(h, h)), 0, 1e-15);
  EXPECT_NEAR(std::abs(ring_to_complex(RingElement::omega_pow(2)) - Complex(0, 1)), 0, 1e-15);
}

TEST(Ring, HomomorphismProperty) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 500; ++t) {
    RingElement r = random_ring(rng), s = random_ring(rng);
    Complex lhs = ring_to_complex(ring_mul(r, s));
    Complex rhs = ring_to_complex(r) * ring_to_complex(s);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs)));
    EXPECT_LE(std::abs(ring_to_complex(r + s) - ring_to_complex(r) - ring_to_complex(s)), 1e-9);
  }
}

TEST(Ring, DistinctRepresentationsHaveDistinctValues) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 2000; ++t) {
    RingElement r = random_ring(rng), s = random_ring(rng);
    if (r == s) continue;
    EXPECT_GT(std::abs(ring_to_complex(r) - ring_to_complex(s)), 1e-12);
  }
  // A single-coefficient perturbation by the smallest step is still visible.
  RingElement r = random_ring(rng), s = r;
  s.c[3] = s.c[3] + Dyadic(1, 6);
  EXPECT_GT(std::abs(ring_to_complex(r) - ring_to_complex(s)), 1e-12);
}
