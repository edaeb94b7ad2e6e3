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

// Short constructors for qubit ZX, qutrit ZX and ZW diagrams, plus a few
// reusable gadgets. Everything here returns a fresh Diagram.

#pragma once

#include <vector>

#include "zxw/diagram.hpp"

namespace zxw::build {

// ---- qubit ZX ----

inline Diagram Z(Phase a, int n = 1, int m = 1) { return gen(z_node(a), n, m); }
inline Diagram X(Phase a, int n = 1, int m = 1) { return gen(x_node(a), n, m); }
inline Diagram Z0(int n = 1, int m = 1) { return Z(Phase::zero(), n, m); }
inline Diagram X0(int n = 1, int m = 1) { return X(Phase::zero(), n, m); }
inline Phase pi() { return Phase::turn(1, 1); }
// Multiples of a quarter turn (pi/2) and an eighth of a turn (pi/4).
inline Phase quarter(int k) { return Phase::turn(k, 2); }
inline Phase eighth(int k) { return Phase::turn(k, 4); }

inline Diagram H() { return gen(h_node(), 1, 1); }
inline Diagram T(int power = 1) { return gen(triangle_node(power), 1, 1); }
inline Diagram L(double lambda) { return gen(lambda_node(lambda), 1, 1); }
inline Diagram I(int n = 1) { return identity(n); }
inline Diagram Sw() { return swap_wires(); }
inline Diagram Cup() { return cup(); }
inline Diagram Cap() { return cap(); }
inline Diagram Empty() { return empty_diagram(); }

inline Diagram tensor_power(const Diagram& d, int k) {
  Diagram r = empty_diagram(d.calculus, d.dim);
  for (int i = 0; i < k; ++i) r = compose_par(r, d);
  return r;
}

// Scalar sqrt(2): a green state wired to a red effect.
inline Diagram sqrt2() { return seq({Z0(0, 1), X0(1, 0)}); }

// Scalar 1/sqrt(2): a green and a red spider joined by three wires.
inline Diagram inv_sqrt2() { return seq({Z0(0, 3), X0(3, 0)}); }

// Scalar sqrt(2)^k for any integer k.
inline Diagram sqrt2_pow(int k) { return tensor_power(k >= 0 ? sqrt2() : inv_sqrt2(), k >= 0 ? k : -k); }

// Transpose of a 1->1 diagram, bent through a cup and a cap.
inline Diagram transpose(const Diagram& d) {
  Diagram id = identity(1, d.calculus, d.dim);
  return seq({par({id, cup(d.calculus, d.dim)}), par({id, d, id}), par({cap(d.calculus, d.dim), id})});
}

// Turns a state on n+m wires into an n->m map by bending its first n legs into inputs.
inline Diagram bend(const Diagram& state, int n) {
  int k = state.n_out, m = k - n;
  std::vector<int> perm(n + k);
  for (int i = 0; i < n; ++i) perm[i] = 2 * i;
  for (int j = 0; j < k; ++j) perm[n + j] = j < n ? 2 * j + 1 : 2 * n + (j - n);
  Diagram caps = empty_diagram(state.calculus, state.dim);
  for (int i = 0; i < n; ++i) caps = compose_par(caps, cap(state.calculus, state.dim));
  return seq({par({identity(n, state.calculus, state.dim), state}), permutation(perm, state.calculus, state.dim),
              par({caps, identity(m, state.calculus, state.dim)})});
}

// Trace of a 1->1 diagram.
inline Diagram trace1(const Diagram& d) { return seq({cup(d.calculus, d.dim), par({identity(1, d.calculus, d.dim), d}), cap(d.calculus, d.dim)}); }

// A spider with a self-loop: the 1->1 spider `s` (given as 1->3) with legs 1 and 2 joined through `loop`.
inline Diagram spider_self_loop(const Diagram& s13, const Diagram& loop) {
  return seq({s13, par({I(), loop, I()}), par({I(), Cap()})});
}

// 2->0 effect with amplitude 1 unless both inputs are 1.
inline Diagram nand_filter() { return seq({par({T(), T()}), Z(pi(), 2, 0)}); }

// 1->2 map |0> -> |00>, |1> -> |01> + |10>.
inline Diagram plus_copy() {
  return par({seq({X0(1, 2), par({Z0(1, 2), Z0(1, 2)}), permutation({0, 2, 1, 3}), par({I(2), nand_filter()})}), sqrt2()});
}

// 2->1 map |00> -> |0>, |01>,|10> -> |1>, |11> -> 0. It adds the |1> amplitudes of two states.
inline Diagram plus_merge() {
  return par({seq({par({Z0(1, 2), Z0(1, 2)}), permutation({0, 2, 1, 3}), par({X0(2, 1), nand_filter()})}), sqrt2()});
}

// 1->2 W map of the black node: a single 1 shared among all three legs.
inline Diagram w_map() { return seq({X(pi(), 1, 1), plus_copy()}); }

// k-leg W state (k >= 1), weight exactly one.
inline Diagram w_state(int k) {
  Diagram s = par({X(pi(), 0, 1), inv_sqrt2()});
  for (int i = 1; i < k; ++i) s = seq({s, par({I(i - 1), plus_copy()})});
  return s;
}

// The state |0> + lambda e^{i alpha} |1>.
inline Diagram weighted_state(double lambda, Phase alpha) { return seq({Z(alpha, 0, 1), L(lambda)}); }

inline Diagram cz() {
  Diagram d = seq({par({Z0(1, 2), Z0(1, 2)}), par({I(), H(), I(2)}), par({I(), Cap(), I()})});
  return par({d, sqrt2()});
}

inline Diagram cnot() { return par({seq({par({Z0(1, 2), I()}), par({I(), X0(2, 1)})}), sqrt2()}); }

// CNOT with target on wire 0 and control on wire 1.
inline Diagram cnot_rev() { return seq({Sw(), cnot(), Sw()}); }

// ---- qutrit ZX ----

inline Diagram Z3(int a, int b, int n = 1, int m = 1) { return gen(z_node({Phase::third(a), Phase::third(b)}), n, m, 3); }
inline Diagram X3(int a, int b, int n = 1, int m = 1) { return gen(x_node({Phase::third(a), Phase::third(b)}), n, m, 3); }
inline Diagram H3(int power = 1) { return gen(h_node(power), 1, 1, 3); }
inline Diagram I3(int n = 1) { return identity(n, Calculus::ZX, 3); }
inline Diagram Sw3() { return swap_wires(Calculus::ZX, 3); }

// ---- ZW ----

inline Diagram Wh(Complex r, int n = 1, int m = 1) { return gen(white_node(r), n, m); }
inline Diagram Wh(const RingElement& r, int n = 1, int m = 1) { return gen(white_node(r), n, m); }
inline Diagram Bk(int n, int m) { return gen(black_node(), n, m); }
inline Diagram Cr() { return gen(crossing_node(), 2, 2); }
inline Diagram Pi() { return gen(zwpi_node(), 1, 1); }
inline Diagram Iw(int n = 1) { return identity(n, Calculus::ZW); }
inline Diagram Sww() { return swap_wires(Calculus::ZW); }
inline Diagram Cupw() { return cup(Calculus::ZW); }
inline Diagram Capw() { return cap(Calculus::ZW); }

inline Diagram cz_w() { return seq({Cr(), Sww()}); }

// Hadamard from a CZ between the wire and a |+> ancilla, then a |+> effect; scale 1/sqrt(2).
inline Diagram h_w() {
  RingElement fix = RingElement::inv_sqrt2() - RingElement(1);
  return par({seq({par({Iw(), Wh(RingElement(1), 0, 1)}), cz_w(), par({Wh(RingElement(1), 1, 0), Iw()})}), Wh(fix, 0, 0)});
}

inline Diagram triangle_w() { return seq({par({Pi(), Wh(RingElement(1), 0, 1)}), Bk(2, 1)}); }

inline Diagram triangle_inv_w() {
  return seq({Wh(RingElement(-1)), triangle_w(), Wh(RingElement(-1))});
}

}  // namespace zxw::build
