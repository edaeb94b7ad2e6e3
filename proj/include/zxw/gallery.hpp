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

// Concrete circuits and identities: Toffoli in circuit and triangle form, AND, multi-control Toffoli, the two
// UMA gates, the two-qubit Clifford+T relations, W and GHZ forms, cyclotomic supplementarity.

#pragma once

#include <bit>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxw/build.hpp"
#include "zxw/rules.hpp"
#include "zxw/semantics.hpp"

namespace zxw::gallery {

using namespace build;

// ---- small circuit toolkit ----

// Applies a k-wire gate to the listed wires of an n-wire register, all other wires pass through.
inline Diagram on(int n, const std::vector<int>& wires, const Diagram& gate) {
  int k = static_cast<int>(wires.size());
  if (gate.n_in != k || gate.n_out != k) throw ShapeError("gate arity does not match wire list");
  std::vector<int> perm(n, -1), used(n, 0);
  for (int j = 0; j < k; ++j) {
    if (wires[j] < 0 || wires[j] >= n || used[wires[j]]) throw std::invalid_argument("bad wire list");
    perm[wires[j]] = j;
    used[wires[j]] = 1;
  }
  int next = k;
  for (int i = 0; i < n; ++i)
    if (perm[i] < 0) perm[i] = next++;
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  return seq({permutation(perm), par({gate, I(n - k)}), permutation(inv)});
}

class Circuit {
 public:
  explicit Circuit(int wires) : n_(wires), d_(I(wires)) {}

  Circuit& gate(const std::vector<int>& wires, const Diagram& g) {
    d_ = seq({d_, on(n_, wires, g)});
    return *this;
  }
  Circuit& h(int q) { return gate({q}, H()); }
  Circuit& x(int q) { return gate({q}, X(pi())); }
  Circuit& z(int q) { return gate({q}, Z(pi())); }
  Circuit& s(int q) { return gate({q}, Z(quarter(1))); }
  Circuit& t(int q) { return gate({q}, Z(eighth(1))); }
  Circuit& tdg(int q) { return gate({q}, Z(eighth(7))); }
  Circuit& cnot(int c, int t) { return gate({c, t}, build::cnot()); }
  Circuit& cz(int a, int b) { return gate({a, b}, build::cz()); }
  Circuit& swap(int a, int b) { return gate({a, b}, Sw()); }
  Circuit& toffoli(int c1, int c2, int t);
  Circuit& then(const Circuit& other) {
    d_ = seq({d_, other.d_});
    return *this;
  }

  const Diagram& diagram() const { return d_; }
  int wires() const { return n_; }

 private:
  int n_;
  Diagram d_;
};

// ---- triangle constructions ----

// k-input AND: inverse triangle after a Z merge of triangles. Sends |x> to |x_1 ... x_k>.
inline Diagram and_gate(int k = 2) {
  if (k < 1) throw std::invalid_argument("AND needs at least one input");
  Diagram tri = I(0);
  for (int i = 0; i < k; ++i) tri = par({tri, T()});
  return seq({tri, Z0(k, 1), T(-1)});
}

// Controls on wires 0..k-1, target on wire k. The AND of copies of the controls is XOR-ed into the target.
inline Diagram multi_toffoli(int k) {
  if (k < 1) throw std::invalid_argument("need at least one control");
  Diagram copies = I(0);
  for (int i = 0; i < k; ++i) copies = par({copies, Z0(1, 2)});
  std::vector<int> perm(2 * k + 1);
  for (int i = 0; i < k; ++i) perm[2 * i] = i, perm[2 * i + 1] = k + i;
  perm[2 * k] = 2 * k;
  return seq({par({copies, I()}), permutation(perm), par({I(k), and_gate(k), I()}), par({I(k), X0(2, 1)})});
}

inline Diagram toffoli_triangle() { return multi_toffoli(2); }

inline Circuit& Circuit::toffoli(int c1, int c2, int t) { return gate({c1, c2, t}, toffoli_triangle()); }

// Seven-T decomposition with Hadamards on the target.
inline Diagram toffoli_circuit() {
  Circuit c(3);
  c.h(2).cnot(1, 2).tdg(2).cnot(0, 2).t(2).cnot(1, 2).tdg(2).cnot(0, 2).t(1).t(2).h(2).cnot(0, 1).t(0).tdg(1).cnot(0, 1);
  return c.diagram();
}

// ---- UMA, wires (c, b, a) ----

inline Diagram uma_two_cnot() {
  Circuit c(3);
  c.toffoli(0, 1, 2).cnot(2, 0).cnot(0, 1);
  return c.diagram();
}

inline Diagram uma_three_cnot() {
  Circuit c(3);
  c.x(1).cnot(0, 1).toffoli(0, 1, 2).x(1).cnot(2, 0).cnot(2, 1);
  return c.diagram();
}

// ---- phase polynomials ----

// Multiplies the amplitude of |x> by e^{i phi} when the parity of the wires in mask is odd.
inline Diagram phase_gadget(int n, unsigned mask, Phase phi) {
  std::vector<int> wires;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1u) wires.push_back(i);
  int k = static_cast<int>(wires.size());
  if (k == 0) return I(n);
  Diagram copies = I(0);
  for (int i = 0; i < k; ++i) copies = par({copies, Z0(1, 2)});
  std::vector<int> perm(2 * k);
  for (int i = 0; i < k; ++i) perm[2 * i] = i, perm[2 * i + 1] = k + i;
  Diagram g = seq({copies, permutation(perm), par({I(k), seq({X0(k, 1), Z(phi, 1, 0)})})});
  return on(n, wires, g);
}

// W state |100> + |010> + |001>, triangle form.
inline Diagram w_triangle() { return w_state(3); }

// W state from phases only: odd-parity state times (1 + (-1)^{a x1 x2 x3}) summed over an ancilla a, with the
// quartic phase spread over fifteen pi/8 gadgets.
inline Diagram w_phases() {
  Diagram d = par({X(pi(), 0, 3), Z0(0, 1)});
  for (unsigned mask = 1; mask < 16; ++mask) {
    int bits = std::popcount(mask);
    d = seq({d, phase_gadget(4, mask, Phase::turn(bits % 2 ? 1 : -1, 8))});
  }
  return seq({d, par({I(3), Z0(1, 0)})});
}

// ---- GHZ normal form ----

// diag(1, z) as a one-wire ZX diagram.
inline Diagram general_green(Complex z) { return seq({L(std::abs(z)), Z(Phase::radians(std::arg(z)))}); }

// Loop form of a GHZ-class map: amplitude of (in, out1, out2) with even parity is sum_s prod_k lambda_k^{s xor x_k}
// with lambda_3 on the input, lambda_2 on out1, lambda_1 on out2.
inline Diagram ghz_loop(Complex l1, Complex l2, Complex l3) {
  auto leg = [](Complex l) { return seq({Z0(0, 2), par({general_green(l), I()})}); };
  Diagram s = par({leg(l3), leg(l2), leg(l1)});
  s = seq({s, permutation({0, 3, 1, 4, 2, 5}), par({X0(3, 1), I(3)}), par({Z0(1, 3), I(3)}),
           permutation({0, 2, 4, 1, 3, 5}), par({X0(2, 1), X0(2, 1), X0(2, 1)})});
  return bend(s, 1);
}

inline Diagram ghz_normal(Complex x1, Complex x2, Complex x3) {
  return seq({general_green(x1), X0(1, 2), par({general_green(x2), general_green(x3)})});
}

struct GhzCoefficients {
  Complex x1, x2, x3;
};

struct DegenerateGhz : std::domain_error {
  using std::domain_error::domain_error;
};

// x1 is the principal root; x2 and x3 follow from x1 x2 and x1 x3 so that all three pair products are exact.
inline GhzCoefficients ghz_normalize(Complex l1, Complex l2, Complex l3) {
  Complex d = 1.0 + l1 * l2 * l3, a = l1 + l2 * l3, b = l2 + l1 * l3, c = l3 + l1 * l2;
  if (std::abs(d * a * b * c) < 1e-12) throw DegenerateGhz("GHZ normal form needs (1+l1l2l3)(l1+l2l3)(l2+l1l3)(l3+l1l2) != 0");
  Complex x1 = std::sqrt(b * a / (d * c));
  return {x1, a / (d * x1), b / (d * x1)};
}

// Coefficients from the 4x2 parity matrix [[p,0],[0,q],[0,r],[s,0]] of a GHZ-class map.
inline GhzCoefficients ghz_from_matrix(const Matrix& m) {
  if (m.rows != 4 || m.cols != 2) throw ShapeError("expected a 4x2 matrix");
  Complex p = m(0, 0), q = m(1, 1), r = m(2, 1), s = m(3, 0);
  if (std::abs(p * q * r * s) < 1e-12) throw DegenerateGhz("matrix is not of GHZ normal shape");
  Complex x13 = q / p, x12 = r / p, x23 = s / p;
  Complex x1 = std::sqrt(x13 * x12 / x23);
  return {x1, x12 / x1, x13 / x1};
}

// ---- two-qubit Clifford+T relations ----

inline Diagram cnot01() { return build::cnot(); }
inline Diagram cnot10() { return build::cnot_rev(); }

inline std::vector<std::string> sb_relation_labels() {
  return {"m2", "m1", "0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12", "13", "14"};
}

inline Diagram sb_a() {
  Circuit c(2);
  c.tdg(1).cnot(0, 1).t(1);
  return c.diagram();
}

inline Diagram sb_b() {
  Circuit c(2);
  c.h(0).t(0).cnot(1, 0).tdg(0).h(0);
  return c.diagram();
}

inline std::pair<Diagram, Diagram> sb_relation(const std::string& label) {
  auto c2 = [] { return Circuit(2); };
  if (label == "m2") return {c2().h(0).h(0).diagram(), I(2)};
  if (label == "m1") return {c2().s(0).s(0).s(0).s(0).diagram(), I(2)};
  if (label == "0") return {c2().s(0).h(0).s(0).h(0).s(0).h(0).diagram(), I(2)};
  if (label == "1") return {c2().cz(0, 1).cz(0, 1).diagram(), I(2)};
  if (label == "2") return {c2().swap(0, 1).cz(0, 1).swap(0, 1).diagram(), c2().cz(0, 1).diagram()};
  if (label == "3") return {c2().s(0).cz(0, 1).diagram(), c2().cz(0, 1).s(0).diagram()};
  if (label == "4") return {c2().cz(0, 1).x(0).cz(0, 1).diagram(), c2().x(0).z(1).diagram()};
  if (label == "5") return {c2().cnot(0, 1).cnot(1, 0).cnot(0, 1).diagram(), Sw()};
  if (label == "6") return {c2().h(0).h(1).cnot(0, 1).h(0).h(1).diagram(), c2().cnot(1, 0).diagram()};
  if (label == "7") return {c2().h(1).cz(0, 1).h(1).diagram(), c2().cnot(0, 1).diagram()};
  if (label == "8") return {c2().t(0).t(0).diagram(), c2().s(0).diagram()};
  if (label == "9") return {c2().t(0).cnot(0, 1).diagram(), c2().cnot(0, 1).t(0).diagram()};
  if (label == "10") return {c2().t(0).cz(0, 1).diagram(), c2().cz(0, 1).t(0).diagram()};
  if (label == "11") return {c2().x(0).t(0).x(0).diagram(), c2().tdg(0).diagram()};
  if (label == "12") return {seq({sb_a(), sb_a()}), I(2)};
  if (label == "13") return {seq({sb_b(), sb_b()}), I(2)};
  if (label == "14") {
    Circuit c(2);
    c.cnot(0, 1).t(1).cnot(0, 1).t(0).cnot(0, 1).tdg(1).cnot(0, 1).tdg(0);
    c.h(0).h(1).cnot(1, 0).t(0).cnot(1, 0).t(1).cnot(1, 0).tdg(0).cnot(1, 0).tdg(1).h(0).h(1);
    return {c.diagram(), I(2)};
  }
  throw std::invalid_argument("unknown relation " + label);
}

// ---- supplementarity ----

inline Complex supplementarity_product(int n, double alpha) {
  Complex p = 1;
  for (int j = 0; j < n; ++j) p *= 1.0 + std::polar(1.0, alpha + 2 * kPi * j / n);
  return p;
}

inline Complex supplementarity_closed_form(int n, double alpha) { return 1.0 + std::polar(1.0, n * alpha + (n - 1) * kPi); }

inline SoundnessReport verify_supplementarity(int n, Phase alpha, double tol = kDefaultTol) {
  if (n < 1 || n > 6) throw std::invalid_argument("n must be in 1..6");
  SoundnessReport r;
  r.rule = "supplementarity-" + std::to_string(n);
  r.samples = 2;
  auto [lhs, rhs] = supplementarity_pair(n, alpha);
  Matrix L = interpret(lhs), R = interpret(rhs);
  if (auto c = scalar_equiv(L, R, tol)) {
    r.scalars.push_back(*c);
  } else {
    r.failures.push_back({"alpha=" + std::to_string(alpha.value()), matrix_digest(L), matrix_digest(R), max_distance(L, R)});
  }
  Complex prod = supplementarity_product(n, alpha.value()), closed = supplementarity_closed_form(n, alpha.value());
  if (std::abs(prod - closed) > tol * std::max(1.0, std::abs(closed)))
    r.failures.push_back({"product alpha=" + std::to_string(alpha.value()), format_complex(prod), format_complex(closed), std::abs(prod - closed)});
  return r;
}

// ---- catalogue ----

struct GalleryItem {
  Diagram diagram;
  std::optional<Diagram> rhs;  // set for identities
  bool is_pair() const { return rhs.has_value(); }
};

struct GalleryEntry {
  std::string name;
  std::string description;
  bool pair;
  std::vector<std::string> params;
};

inline std::vector<GalleryEntry> entries() {
  std::vector<GalleryEntry> v = {
      {"toffoli-circuit", "Toffoli gate from Clifford+T gates (seven T)", false, {}},
      {"toffoli-triangle", "Toffoli gate from triangles and an AND", false, {}},
      {"toffoli", "circuit form vs triangle form", true, {}},
      {"and-gate", "AND gate 2 -> 1 built from triangles", false, {}},
      {"multi-toffoli", "k-control Toffoli from a k-input AND", false, {"k"}},
      {"uma-v1", "UMA gate, two-CNOT version, wires (c, b, a)", false, {}},
      {"uma-v2", "UMA gate, three-CNOT version, wires (c, b, a)", false, {}},
      {"uma", "the two UMA versions", true, {}},
      {"w-triangle", "W state with triangles", false, {}},
      {"w-phases", "W state from pi/8 phase gadgets", false, {}},
      {"w-forms", "the two W state forms", true, {}},
      {"ghz-normal", "GHZ loop form vs normal form", true, {"re1", "im1", "re2", "im2", "re3", "im3"}},
      {"supplementarity", "cyclotomic supplementarity", true, {"n", "alpha"}},
  };
  for (const auto& l : sb_relation_labels())
    v.push_back({"sb-relation-" + l, "two-qubit Clifford+T relation " + l, true, {}});
  return v;
}

inline std::optional<GalleryEntry> find_entry(const std::string& name) {
  for (auto& e : entries())
    if (e.name == name) return e;
  return std::nullopt;
}

inline GalleryItem build(const std::string& name, const std::vector<double>& params = {}) {
  auto entry = find_entry(name);
  if (!entry) throw std::invalid_argument("unknown gallery entry " + name);
  auto param = [&](std::size_t i, double fallback) { return i < params.size() ? params[i] : fallback; };
  if (params.size() > entry->params.size()) throw std::invalid_argument("too many parameters for " + name);
  if (name == "toffoli-circuit") return {toffoli_circuit(), {}};
  if (name == "toffoli-triangle") return {toffoli_triangle(), {}};
  if (name == "toffoli") return {toffoli_circuit(), toffoli_triangle()};
  if (name == "and-gate") return {and_gate(2), {}};
  if (name == "multi-toffoli") {
    double k = param(0, 3);
    if (k < 1 || k != std::floor(k)) throw std::invalid_argument("k must be a positive integer");
    return {multi_toffoli(static_cast<int>(k)), {}};
  }
  if (name == "uma-v1") return {uma_two_cnot(), {}};
  if (name == "uma-v2") return {uma_three_cnot(), {}};
  if (name == "uma") return {uma_two_cnot(), uma_three_cnot()};
  if (name == "w-triangle") return {w_triangle(), {}};
  if (name == "w-phases") return {w_phases(), {}};
  if (name == "w-forms") return {w_phases(), w_triangle()};
  if (name == "ghz-normal") {
    Complex l1(param(0, 1), param(1, 0)), l2(param(2, 1), param(3, 0)), l3(param(4, 1), param(5, 0));
    auto x = ghz_normalize(l1, l2, l3);
    return {ghz_loop(l1, l2, l3), ghz_normal(x.x1, x.x2, x.x3)};
  }
  if (name == "supplementarity") {
    double n = param(0, 3);
    if (n < 1 || n > 6 || n != std::floor(n)) throw std::invalid_argument("n must be an integer in 1..6");
    auto [l, r] = supplementarity_pair(static_cast<int>(n), Phase::radians(param(1, 0.3)));
    return {l, r};
  }
  auto [l, r] = sb_relation(name.substr(std::string("sb-relation-").size()));
  return {l, r};
}

// Matrix of a classical map on bit strings, wire 0 most significant.
inline Matrix classical_matrix(int n_in, int n_out, const std::function<std::size_t(std::size_t)>& f) {
  Matrix m(std::size_t{1} << n_out, std::size_t{1} << n_in);
  for (std::size_t x = 0; x < m.cols; ++x) m(f(x), x) = 1;
  return m;
}

// Expected interpretation (up to scalar) of the single-diagram entries that have a closed form.
inline std::optional<Matrix> expected_matrix(const std::string& name, const std::vector<double>& params = {}) {
  auto toffoli = [](int k) {
    std::size_t all = (std::size_t{1} << k) - 1;
    return classical_matrix(k + 1, k + 1, [=](std::size_t x) { return (x >> 1) == all ? x ^ 1 : x; });
  };
  if (name == "toffoli-circuit" || name == "toffoli-triangle") return toffoli(2);
  if (name == "multi-toffoli") return toffoli(params.empty() ? 3 : static_cast<int>(params[0]));
  if (name == "and-gate") return classical_matrix(2, 1, [](std::size_t x) { return std::size_t{x == 3}; });
  if (name == "uma-v1" || name == "uma-v2") {
    return classical_matrix(3, 3, [](std::size_t x) {
      std::size_t c = x >> 2 & 1, b = x >> 1 & 1, a = x & 1;
      a ^= c & b;
      c ^= a;
      b ^= c;
      return c << 2 | b << 1 | a;
    });
  }
  if (name == "w-triangle" || name == "w-phases") {
    Matrix w(8, 1);
    w(1, 0) = w(2, 0) = w(4, 0) = 1;
    return w;
  }
  return std::nullopt;
}

// Semantic equivalence up to a nonzero scalar.
inline std::optional<Complex> check_equiv(const Diagram& a, const Diagram& b, double tol = kDefaultTol) {
  if (a.n_in != b.n_in || a.n_out != b.n_out)
    throw std::invalid_argument("boundary arities differ: " + std::to_string(a.n_in) + "->" + std::to_string(a.n_out) +
                                " vs " + std::to_string(b.n_in) + "->" + std::to_string(b.n_out));
  if (a.dim != b.dim) throw std::invalid_argument("wire dimensions differ");
  return scalar_equiv(interpret(a), interpret(b), tol);
}

}  // namespace zxw::gallery
