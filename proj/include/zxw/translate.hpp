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

#pragma once

#include <cmath>
#include <stdexcept>

#include "zxw/build.hpp"
#include "zxw/semantics.hpp"

namespace zxw {

enum class TranslationMode { Full, CliffordT };

struct TranslationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline const char* mode_name(TranslationMode m) { return m == TranslationMode::Full ? "full" : "clifford-t"; }

// Triangle [[1,1],[0,1]] written with pi/4 phase gadgets only.
//
// <y|T|x> = (1 + (-1)^{y(1-x)}) / 2 = 1/2 sum_s (-1)^{sy} (-1)^{sxy}; the cubic term expands into
// parities of {s, x, y} with coefficients that are multiples of pi/4.
inline Diagram decompose_triangle() {
  using namespace build;
  Diagram d;
  d.n_in = d.n_out = 1;
  std::string s = d.add(z_node(eighth(3))), x = d.add(z_node(eighth(1))), y = d.add(z_node(eighth(3)));
  d.connect(Endpoint::in(0), Endpoint::at(x));
  d.connect(Endpoint::at(y), Endpoint::out(0));
  struct Gadget {
    std::vector<std::string> vars;
    int eighths;
  };
  std::vector<Gadget> gadgets = {{{s, x}, -1}, {{s, y}, -3}, {{x, y}, -1}, {{s, x, y}, 1}};
  for (const auto& g : gadgets) {
    std::string hub = d.add(x_node(Phase::zero())), leaf = d.add(z_node(eighth(g.eighths)));
    for (const auto& v : g.vars) d.connect(Endpoint::at(v), Endpoint::at(hub));
    d.connect(Endpoint::at(hub), Endpoint::at(leaf));
  }
  return par({d, sqrt2_pow(3)});
}

inline Diagram decompose_triangle_inverse() {
  using namespace build;
  return seq({Z(pi()), decompose_triangle(), Z(pi())});
}

namespace detail {

// |0> + n|1> by binary doubling through the amplitude-adding merge.
inline Diagram integer_state(std::uint64_t n) {
  using namespace build;
  if (n == 0) return par({X0(0, 1), inv_sqrt2()});
  if (n == 1) return Z0(0, 1);
  Diagram half = integer_state(n / 2);
  Diagram r = seq({par({half, half}), plus_merge()});
  if (n % 2) r = seq({par({r, Z0(0, 1)}), plus_merge()});
  return r;
}

inline Diagram box_from_state(const Diagram& state) { return seq({par({build::I(), state}), build::Z0(2, 1)}); }

inline Diagram half_box() {
  using namespace build;
  return par({seq({X(pi()), box_from_state(integer_state(2)), X(pi())}), sqrt2_pow(-2)});
}

}  // namespace detail

// A diagram over spiders, Hadamards and triangles that interprets to diag(1, lambda).
inline Diagram decompose_lambda(double lambda, TranslationMode mode) {
  using namespace build;
  if (!(lambda >= 0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be a nonnegative real");
  if (mode == TranslationMode::CliffordT) {
    auto dy = Dyadic::from_double(lambda, 30);
    if (!dy) throw TranslationError("lambda is not dyadic");
    Diagram r = detail::box_from_state(detail::integer_state(static_cast<std::uint64_t>(dy->numerator())));
    for (unsigned k = 0; k < dy->exponent(); ++k) r = seq({r, detail::half_box()});
    return r;
  }
  double whole = std::floor(lambda), frac = lambda - whole;
  if (whole > 1e15) throw std::invalid_argument("lambda too large");
  Diagram state = detail::integer_state(static_cast<std::uint64_t>(whole));
  if (frac > 0) {
    double a = std::acos(frac / 2);
    Diagram fs = seq({par({Z(Phase::radians(a), 0, 1), Z(Phase::radians(-a), 0, 1)}), plus_merge()});
    state = whole == 0 ? fs : seq({par({state, fs}), plus_merge()});
  }
  return detail::box_from_state(state);
}

namespace detail {

inline void require_qubit_zx(const Diagram& d) {
  if (d.calculus != Calculus::ZX) throw TranslationError("expected a ZX diagram");
  if (d.dim != 2) throw TranslationError("translation is qubit-only");
}

inline Node white_for_phase(const Phase& p) {
  if (auto k = p.eighth()) return white_node(RingElement::omega_pow(*k));
  return white_node(std::polar(1.0, p.value()));
}

inline Node white_for_lambda(double l) {
  if (auto dy = Dyadic::from_double(l, 30)) return white_node(RingElement(*dy, Dyadic(0), Dyadic(0), Dyadic(0)));
  return white_node(Complex(l, 0));
}

inline void check_clifford_t(const Node& n) {
  if (is_spider(n.kind))
    for (const auto& p : n.phases)
      if (!p.eighth()) throw TranslationError("phase is not a multiple of pi/4");
  if (n.kind == Kind::LambdaBox && !Dyadic::from_double(n.lambda, 30)) throw TranslationError("lambda is not dyadic");
}

// Exact ring value of a white node parameter, if it has one.
inline std::optional<RingElement> white_ring(const Node& n) {
  if (n.exact_r) return n.exact_r;
  try {
    return ring_complex(n.r);
  } catch (const NotExact&) {
    return std::nullopt;
  }
}

inline Diagram expand_boxes(const Diagram& d) {
  Diagram r = splice(
      d,
      [](const Node& n, int, int) -> std::optional<Diagram> {
        if (n.kind == Kind::LambdaBox) return decompose_lambda(n.lambda, TranslationMode::CliffordT);
        return std::nullopt;
      },
      Calculus::ZX);
  return splice(
      r,
      [](const Node& n, int, int) -> std::optional<Diagram> {
        if (n.kind != Kind::Triangle) return std::nullopt;
        return n.power == -1 ? decompose_triangle_inverse() : decompose_triangle();
      },
      Calculus::ZX);
}

}  // namespace detail

inline Diagram zx_to_zw(const Diagram& d, TranslationMode mode = TranslationMode::Full) {
  using namespace build;
  detail::require_qubit_zx(d);
  auto gadget = [mode](const Node& n, int ni, int no) -> std::optional<Diagram> {
    if (mode == TranslationMode::CliffordT) detail::check_clifford_t(n);
    switch (n.kind) {
      case Kind::ZSpider: return gen(detail::white_for_phase(n.phases.at(0)), ni, no);
      case Kind::XSpider:
        return seq({tensor_power(h_w(), ni), gen(detail::white_for_phase(n.phases.at(0)), ni, no)});
      case Kind::Hadamard: return (n.power % 2 + 2) % 2 ? h_w() : Iw();
      case Kind::Triangle: return n.power == -1 ? triangle_inv_w() : triangle_w();
      case Kind::LambdaBox: return gen(detail::white_for_lambda(n.lambda), 1, 1);
      default: throw TranslationError("unexpected node kind in ZX diagram");
    }
  };
  return splice(d, gadget, Calculus::ZW);
}

inline Diagram zw_to_zx(const Diagram& d, TranslationMode mode = TranslationMode::Full) {
  using namespace build;
  if (d.calculus != Calculus::ZW) throw TranslationError("expected a ZW diagram");
  auto white = [mode](const Node& n, int legs) -> Diagram {
    if (mode == TranslationMode::Full) {
      double lambda = std::abs(n.r), alpha = std::arg(n.r);
      Phase a = Phase::radians(alpha < 0 ? alpha + 2 * kPi : alpha);
      for (int k = 0; k < 8 && n.exact_r; ++k)
        if (*n.exact_r == RingElement::omega_pow(k)) a = eighth(k), lambda = 1;
      if (legs == 0) return seq({Z(a, 0, 1), L(lambda), Z0(1, 0)});
      return seq({par({L(lambda), I(legs - 1)}), Z(a, legs, 0)});
    }
    auto ring = detail::white_ring(n);
    if (!ring) throw TranslationError("white parameter is not in Z[1/2, e^{i pi/4}]");
    Diagram state;
    bool any = false;
    for (int j = 0; j < 4; ++j) {
      Dyadic c = ring->c[j];
      if (c.is_zero()) continue;
      bool neg = c.numerator() < 0;
      double mag = std::abs(c.value());
      Diagram term = seq({Z(eighth(j + (neg ? 4 : 0)), 0, 1), L(mag)});
      state = any ? seq({par({state, term}), plus_merge()}) : term;
      any = true;
    }
    if (!any) state = par({X0(0, 1), inv_sqrt2()});
    return seq({par({I(legs), state}), Z0(legs + 1, 0)});
  };
  auto gadget = [&](const Node& n, int ni, int no) -> std::optional<Diagram> {
    switch (n.kind) {
      case Kind::ZWWhite: return white(n, ni + no);
      case Kind::ZWBlack: return bend(w_state(ni + no), ni);
      case Kind::ZWCrossing: return seq({cz(), Sw()});
      case Kind::ZWPi: return X(pi());
      default: throw TranslationError("unexpected node kind in ZW diagram");
    }
  };
  Diagram r = splice(d, gadget, Calculus::ZX);
  if (mode == TranslationMode::CliffordT) r = detail::expand_boxes(r);
  return r;
}

}  // namespace zxw
