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

#include <functional>
#include <random>

#include "zxw/gallery.hpp"

using namespace zxw;
using namespace zxw::gallery;

namespace {

// Unitary of an n-qubit register, built gate by gate on basis states. Qubit 0 is the most significant bit.
struct Sim {
  int n;
  Matrix u;
  explicit Sim(int wires) : n(wires), u(Matrix::identity(std::size_t{1} << wires)) {}

  int bit(std::size_t i, int q) const { return static_cast<int>(i >> (n - 1 - q) & 1); }

  void one(int q, Complex a, Complex b, Complex c, Complex d) {
    Matrix r(u.rows, u.cols);
    for (std::size_t i = 0; i < u.rows; ++i) {
      std::size_t flip = i ^ (std::size_t{1} << (n - 1 - q));
      Complex same = bit(i, q) ? d : a, other = bit(i, q) ? b : c;
      for (std::size_t j = 0; j < u.cols; ++j) r(i, j) = same * u(i, j) + other * u(flip, j);
    }
    u = r;
  }
  void classical(const std::function<std::size_t(std::size_t)>& f) {
    Matrix r(u.rows, u.cols);
    for (std::size_t i = 0; i < u.rows; ++i)
      for (std::size_t j = 0; j < u.cols; ++j) r(f(i), j) = u(i, j);
    u = r;
  }
  void phase_if(const std::function<bool(std::size_t)>& f, Complex ph) {
    for (std::size_t i = 0; i < u.rows; ++i)
      if (f(i))
        for (std::size_t j = 0; j < u.cols; ++j) u(i, j) *= ph;
  }
  Sim& h(int q) {
    double s = 1 / std::sqrt(2.0);
    one(q, s, s, s, -s);
    return *this;
  }
  Sim& ph(int q, double t) {
    one(q, 1, 0, 0, std::polar(1.0, t));
    return *this;
  }
  Sim& x(int q) {
    one(q, 0, 1, 1, 0);
    return *this;
  }
  Sim& cnot(int c, int t) {
    classical([=, this](std::size_t i) { return bit(i, c) ? i ^ (std::size_t{1} << (n - 1 - t)) : i; });
    return *this;
  }
  Sim& cz(int a, int b) {
    phase_if([=, this](std::size_t i) { return bit(i, a) && bit(i, b); }, -1);
    return *this;
  }
  Sim& toffoli(int a, int b, int t) {
    classical([=, this](std::size_t i) { return bit(i, a) && bit(i, b) ? i ^ (std::size_t{1} << (n - 1 - t)) : i; });
    return *this;
  }
};

bool equiv(const Diagram& d, const Matrix& m) { return scalar_equiv(interpret(d), m, 1e-9).has_value(); }

Matrix column(const std::vector<Complex>& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

}  // namespace

TEST(Circuit, RandomCircuitsMatchSimulation) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 3;
    Circuit c(n);
    Sim s(n);
    std::uniform_int_distribution<int> kind(0, 5), wire(0, n - 1);
    for (int g = 0; g < 8; ++g) {
      int a = wire(rng), b = wire(rng);
      while (b == a) b = wire(rng);
      switch (kind(rng)) {
        case 0: c.h(a), s.h(a); break;
        case 1: c.t(a), s.ph(a, kPi / 4); break;
        case 2: c.s(a), s.ph(a, kPi / 2); break;
        case 3: c.x(a), s.x(a); break;
        case 4: c.cnot(a, b), s.cnot(a, b); break;
        default: c.cz(a, b), s.cz(a, b); break;
      }
    }
    EXPECT_TRUE(equiv(c.diagram(), s.u)) << trial;
  }
}

TEST(Circuit, OnRejectsBadWires) {
  EXPECT_THROW(on(3, {0, 0}, build::cnot()), std::invalid_argument);
  EXPECT_THROW(on(3, {0, 3}, build::cnot()), std::invalid_argument);
  EXPECT_THROW(on(3, {0}, build::cnot()), ShapeError);
}

TEST(Toffoli, BothFormsArePermutation) {
  Sim s(3);
  s.toffoli(0, 1, 2);
  EXPECT_TRUE(equiv(toffoli_circuit(), s.u));
  EXPECT_TRUE(equiv(toffoli_triangle(), s.u));
  auto item = gallery::build("toffoli");
  ASSERT_TRUE(item.is_pair());
  EXPECT_TRUE(check_equiv(item.diagram, *item.rhs).has_value());
}

TEST(Toffoli, CircuitFormIsExactlyUnitary) {
  Sim s(3);
  s.toffoli(0, 1, 2);
  auto c = check_equiv(toffoli_circuit(), toffoli_triangle());
  ASSERT_TRUE(c);
  EXPECT_LE(max_distance(interpret(toffoli_circuit()), s.u), 1e-9);
}

TEST(Toffoli, AndGate) {
  Matrix m(2, 4);
  m(0, 0) = m(0, 1) = m(0, 2) = 1;
  m(1, 3) = 1;
  EXPECT_TRUE(equiv(and_gate(2), m));
  Matrix m3(2, 8);
  for (int i = 0; i < 7; ++i) m3(0, i) = 1;
  m3(1, 7) = 1;
  EXPECT_TRUE(equiv(and_gate(3), m3));
}

TEST(Toffoli, MultiControl) {
  for (int k = 1; k <= 4; ++k) {
    Sim s(k + 1);
    s.classical([&](std::size_t i) { return (i >> 1) == (std::size_t{1} << k) - 1 ? i ^ 1 : i; });
    EXPECT_TRUE(equiv(multi_toffoli(k), s.u)) << k;
  }
  EXPECT_THROW(multi_toffoli(0), std::invalid_argument);
  EXPECT_EQ(gallery::build("multi-toffoli", {3}).diagram.n_in, 4);
  EXPECT_THROW(gallery::build("multi-toffoli", {1.5}), std::invalid_argument);
}

TEST(Uma, BothVersionsMatchClassicalGate) {
  // UMA on (c, b, a): a ^= c b, c ^= a, b ^= c.
  Sim s(3);
  s.toffoli(0, 1, 2).cnot(2, 0).cnot(0, 1);
  EXPECT_TRUE(equiv(uma_two_cnot(), s.u));
  EXPECT_TRUE(equiv(uma_three_cnot(), s.u));
  auto item = gallery::build("uma");
  EXPECT_TRUE(check_equiv(item.diagram, *item.rhs).has_value());
}

TEST(WState, BothForms) {
  Matrix w = column({0, 1, 1, 0, 1, 0, 0, 0});
  EXPECT_TRUE(equiv(w_triangle(), w));
  EXPECT_TRUE(equiv(w_phases(), w));
  EXPECT_LE(max_distance(interpret(w_triangle()), w), 1e-9);
  auto item = gallery::build("w-forms");
  EXPECT_TRUE(check_equiv(item.diagram, *item.rhs).has_value());
}

TEST(WState, PhaseGadgetsMultiplyParities) {
  Sim s(3);
  s.phase_if([](std::size_t i) { return std::popcount(i & 0b101u) % 2 == 1; }, std::polar(1.0, 0.7));
  EXPECT_TRUE(equiv(phase_gadget(3, 0b101, Phase::radians(0.7)), s.u));
  EXPECT_TRUE(equiv(phase_gadget(3, 0, Phase::radians(0.7)), Matrix::identity(8)));
}

TEST(Ghz, LoopFormMatchesPrintedMatrix) {
  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  for (int t = 0; t < 20; ++t) {
    Complex l1(g(rng), g(rng)), l2(g(rng), g(rng)), l3(g(rng), g(rng));
    Matrix m(4, 2);
    m(0, 0) = 1.0 + l1 * l2 * l3;
    m(1, 1) = l2 + l1 * l3;
    m(2, 1) = l1 + l2 * l3;
    m(3, 0) = l3 + l1 * l2;
    EXPECT_TRUE(equiv(ghz_loop(l1, l2, l3), m)) << t;
  }
}

TEST(Ghz, NormalFormOnHundredRandomTriples) {
  std::mt19937 rng(99);
  std::normal_distribution<double> g;
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    Complex l1(g(rng), g(rng)), l2(g(rng), g(rng)), l3(g(rng), g(rng));
    auto x = ghz_normalize(l1, l2, l3);
    EXPECT_TRUE(check_equiv(ghz_loop(l1, l2, l3), ghz_normal(x.x1, x.x2, x.x3)).has_value()) << t;
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(Ghz, DegenerateTripleThrows) {
  EXPECT_THROW(ghz_normalize(1, -1, 1), DegenerateGhz);
  EXPECT_THROW(ghz_normalize(0, 0, 0), DegenerateGhz);
}

TEST(Ghz, TriangleBrokenCoefficients) {
  double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  const Complex i(0, 1);
  Matrix m(4, 2);
  m(0, 0) = 1;
  m(1, 1) = -r2 + i;
  m(2, 1) = 1.0 - r2 * i;
  m(3, 0) = -i;
  auto x = ghz_from_matrix(m);
  double sign = x.x1.imag() > 0 ? 1 : -1;
  EXPECT_LE(std::abs(x.x1 - sign * r3 * i), 1e-12);
  EXPECT_LE(std::abs(x.x2 + sign * (r2 + i) / r3), 1e-12);
  EXPECT_LE(std::abs(x.x3 - sign * (1.0 + r2 * i) / r3), 1e-12);
  EXPECT_TRUE(equiv(ghz_normal(x.x1, x.x2, x.x3), m));
}

TEST(SbRelations, AllSeventeenHold) {
  auto labels = sb_relation_labels();
  EXPECT_EQ(labels.size(), 17u);
  for (const auto& l : labels) {
    auto item = gallery::build("sb-relation-" + l);
    ASSERT_TRUE(item.is_pair());
    EXPECT_EQ(item.diagram.n_in, 2) << l;
    EXPECT_TRUE(check_equiv(item.diagram, *item.rhs).has_value()) << l;
  }
}

TEST(SbRelations, NonCliffordInvolutions) {
  Sim a(2);
  a.ph(1, -kPi / 4).cnot(0, 1).ph(1, kPi / 4);
  EXPECT_TRUE(equiv(sb_a(), a.u));
  Sim b(2);
  b.h(0).ph(0, kPi / 4).cnot(1, 0).ph(0, -kPi / 4).h(0);
  EXPECT_TRUE(equiv(sb_b(), b.u));
  EXPECT_FALSE(check_equiv(sb_a(), build::I(2)).has_value());
  EXPECT_FALSE(check_equiv(sb_b(), build::I(2)).has_value());
}

TEST(Supplementarity, ProductFormulaAndDiagrams) {
  for (int n = 1; n <= 6; ++n)
    for (double a : {0.0, 0.3, 1.1, 2.5, -0.7}) {
      auto r = verify_supplementarity(n, Phase::radians(a));
      EXPECT_TRUE(r.pass()) << n << " " << a;
      EXPECT_EQ(r.rule, "supplementarity-" + std::to_string(n));
    }
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(verify_supplementarity(n, Phase::turn(1, 4)).pass());
  EXPECT_THROW(verify_supplementarity(0, Phase::zero()), std::invalid_argument);
  EXPECT_THROW(verify_supplementarity(7, Phase::zero()), std::invalid_argument);
}

TEST(Catalogue, EveryEntryBuilds) {
  auto es = entries();
  EXPECT_EQ(es.size(), 13u + 17u);
  for (const auto& e : es) {
    auto item = gallery::build(e.name);
    EXPECT_EQ(item.is_pair(), e.pair) << e.name;
    if (item.is_pair()) EXPECT_TRUE(check_equiv(item.diagram, *item.rhs).has_value()) << e.name;
  }
  EXPECT_THROW(gallery::build("nonsense"), std::invalid_argument);
  EXPECT_THROW(gallery::build("toffoli", {1.0}), std::invalid_argument);
}

TEST(CheckEquiv, ArityMismatchThrows) {
  EXPECT_THROW(check_equiv(build::I(1), build::I(2)), std::invalid_argument);
  EXPECT_THROW(check_equiv(build::I(1), build::Z0(1, 2)), std::invalid_argument);
  EXPECT_FALSE(check_equiv(build::I(1), build::Z(build::pi())).has_value());
}

TEST(Ghz, AllOnesTriple) {
  auto x = ghz_normalize(1, 1, 1);
  for (Complex c : {x.x1, x.x2, x.x3}) EXPECT_LE(std::abs(std::abs(c.real()) - 1) + std::abs(c.imag()), 1e-12);
  Matrix ghz(4, 2);
  ghz(0, 0) = ghz(3, 0) = ghz(1, 1) = ghz(2, 1) = 1;
  EXPECT_TRUE(equiv(ghz_normal(x.x1, x.x2, x.x3), ghz));
}

TEST(Supplementarity, TwoLegProduct) {
  double a = kPi / 3;
  EXPECT_LE(std::abs(supplementarity_product(2, a) - (1.0 - std::polar(1.0, 2 * a))), 1e-12);
  EXPECT_TRUE(verify_supplementarity(2, Phase::turn(1, 3)).pass());
}

TEST(Catalogue, ExpectedMatrices) {
  int with_oracle = 0;
  for (const auto& e : entries()) {
    auto m = expected_matrix(e.name);
    if (!m) continue;
    ++with_oracle;
    EXPECT_TRUE(equiv(gallery::build(e.name).diagram, *m)) << e.name;
  }
  EXPECT_EQ(with_oracle, 8);
  EXPECT_FALSE(expected_matrix("sb-relation-0"));
}
