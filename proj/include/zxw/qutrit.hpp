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

// Qutrit stabilizer states: the local Clifford group C1 with its normal forms, weighted graph states,
// local complementation, GS-LC diagrams and their reduced form, and state equality.
//
// Scalars are dropped everywhere in this header; states are compared up to a non-zero factor.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxw/build.hpp"
#include "zxw/semantics.hpp"

namespace zxw::qutrit {

inline int mod3(int x) { return ((x % 3) + 3) % 3; }

// The label <a over b>: angles 2pi a / 3 and 2pi b / 3 on the |1> and |2> branches.
struct Z3PhasePair {
  int a = 0, b = 0;
  Z3PhasePair() = default;
  Z3PhasePair(int x, int y) : a(mod3(x)), b(mod3(y)) {}
  bool operator==(const Z3PhasePair&) const = default;
  friend Z3PhasePair operator+(Z3PhasePair x, Z3PhasePair y) { return {x.a + y.a, x.b + y.b}; }
  friend Z3PhasePair operator-(Z3PhasePair x) { return {-x.a, -x.b}; }
  std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

inline bool in_P(Z3PhasePair p) { return p == Z3PhasePair(1, 1) || p == Z3PhasePair(2, 2); }
inline bool in_N(Z3PhasePair p) {
  return p == Z3PhasePair(0, 1) || p == Z3PhasePair(1, 0) || p == Z3PhasePair(0, 2) || p == Z3PhasePair(2, 0);
}
inline bool in_M(Z3PhasePair p) { return p == Z3PhasePair(0, 0) || p == Z3PhasePair(1, 2) || p == Z3PhasePair(2, 1); }
inline bool in_Q(Z3PhasePair p) { return in_P(p) || in_N(p); }
inline bool in_A(Z3PhasePair p) { return in_Q(p) || in_M(p); }

inline std::vector<Z3PhasePair> all_pairs() {
  std::vector<Z3PhasePair> v;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) v.emplace_back(a, b);
  return v;
}

inline std::vector<Z3PhasePair> pairs_where(bool (*pred)(Z3PhasePair)) {
  std::vector<Z3PhasePair> v;
  for (auto p : all_pairs())
    if (pred(p)) v.push_back(p);
  return v;
}

inline Matrix z_phase(Z3PhasePair p) { return interpret(build::Z3(p.a, p.b)); }
inline Matrix x_phase(Z3PhasePair p) { return interpret(build::X3(p.a, p.b)); }
inline Matrix hadamard3(int power = 1) { return interpret(build::H3(power)); }
inline Matrix s_gate() { return diag({1, 1, std::polar(1.0, 2 * kPi / 3)}); }

// Unique normal forms of C1, read bottom to top:
//   Form1  Z(top) X(bottom)               top, bottom in A          81
//   Form2  Z(a) X(p) Z(q)                 q in Q, p in P, a in A    108
//   Form3  Z(a) H H X(m)                  m in M, a in A            27
enum class C1Form { Form1 = 1, Form2 = 2, Form3 = 3 };

struct C1NormalForm {
  C1Form form = C1Form::Form1;
  // Form1: (top, bottom). Form2: (q, p, a). Form3: (m, a).
  Z3PhasePair x, y, z;
  bool operator==(const C1NormalForm&) const = default;

  static C1NormalForm form1(Z3PhasePair top, Z3PhasePair bottom) { return {C1Form::Form1, top, bottom, {}}; }
  static C1NormalForm form2(Z3PhasePair q, Z3PhasePair p, Z3PhasePair a) { return {C1Form::Form2, q, p, a}; }
  static C1NormalForm form3(Z3PhasePair m, Z3PhasePair a) { return {C1Form::Form3, m, a, {}}; }

  Matrix matrix() const {
    switch (form) {
      case C1Form::Form1: return z_phase(x) * x_phase(y);
      case C1Form::Form2: return z_phase(z) * x_phase(y) * z_phase(x);
      case C1Form::Form3: return z_phase(y) * hadamard3(2) * x_phase(x);
    }
    return {};
  }

  // As a one-wire qutrit ZX diagram, bottom node first.
  Diagram diagram() const {
    using namespace build;
    switch (form) {
      case C1Form::Form1: return seq({X3(y.a, y.b), Z3(x.a, x.b)});
      case C1Form::Form2: return seq({Z3(x.a, x.b), X3(y.a, y.b), Z3(z.a, z.b)});
      case C1Form::Form3: return seq({X3(x.a, x.b), H3(2), Z3(y.a, y.b)});
    }
    return {};
  }

  std::string str() const {
    switch (form) {
      case C1Form::Form1: return "Z" + x.str() + " X" + y.str();
      case C1Form::Form2: return "Z" + z.str() + " X" + y.str() + " Z" + x.str();
      case C1Form::Form3: return "Z" + y.str() + " HH X" + x.str();
    }
    return {};
  }
};

// Projective key of a C1 matrix: every nonzero entry, divided by the first nonzero one, is a sixth root of unity.
inline std::uint64_t c1_key(const Matrix& m) {
  if (m.rows != 3 || m.cols != 3) throw ShapeError("C1 elements are 3x3");
  Complex piv = 0;
  for (Complex v : m.a)
    if (std::abs(v) > 1e-9) {
      piv = v;
      break;
    }
  if (piv == Complex(0)) throw std::invalid_argument("zero matrix is not in C1");
  std::uint64_t key = 0;
  for (Complex v : m.a) {
    Complex r = v / piv;
    std::uint64_t digit = 0;
    if (std::abs(r) > 1e-9) {
      if (std::abs(std::abs(r) - 1) > 1e-6) throw std::invalid_argument("matrix is not in C1");
      double k = std::arg(r) / (kPi / 3);
      long kr = std::lround(k);
      if (std::abs(k - kr) > 1e-6) throw std::invalid_argument("matrix is not in C1");
      digit = 1 + static_cast<std::uint64_t>(((kr % 6) + 6) % 6);
    }
    key = key * 7 + digit;
  }
  return key;
}

// The 216 classes, indexed in normal-form order (identity first), with the multiplication table
// and a word in {S, H} for each element. Words are applied left to right.
class C1Group {
 public:
  static constexpr int kOrder = 216;

  struct Element {
    C1NormalForm form;
    Matrix matrix;
    std::string word;
  };

  const std::vector<Element>& elements() const { return elems_; }
  const Element& operator[](int i) const { return elems_.at(i); }
  int size() const { return static_cast<int>(elems_.size()); }

  std::optional<int> find(const Matrix& m) const {
    auto it = index_.find(c1_key(m));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int index_of(const C1NormalForm& f) const { return *find(f.matrix()); }

  int mul(int i, int j) const { return table_[i * kOrder + j]; }
  int identity() const { return 0; }
  int s() const { return s_; }
  int h() const { return h_; }
  int h2() const { return mul(h_, h_); }
  int z(Z3PhasePair p) const { return index_of(C1NormalForm::form1(p, {})); }
  int x(Z3PhasePair p) const { return index_of(C1NormalForm::form1({}, p)); }

  // Vertex operators allowed in a reduced diagram: green Z(a) for any a, or a Hadamard followed by a
  // red Pauli X(m), m in M. The latter are the red operators.
  bool is_green(int i) const { return green_[i]; }
  bool is_red(int i) const { return red_[i]; }
  bool in_r(int i) const { return green_[i] || red_[i]; }
  // The element X(m) H sending |+> to |k>.
  int red_op(int k) const { return red_for_[mod3(k)]; }

  static const C1Group& get() {
    static const C1Group g;
    return g;
  }

 private:
  C1Group() {
    auto add = [&](C1NormalForm f) {
      Matrix m = f.matrix();
      auto [it, fresh] = index_.emplace(c1_key(m), static_cast<int>(elems_.size()));
      if (!fresh) throw std::logic_error("normal forms are not unique: " + f.str());
      elems_.push_back({f, std::move(m), {}});
    };
    for (auto t : all_pairs())
      for (auto b : all_pairs()) add(C1NormalForm::form1(t, b));
    for (auto q : pairs_where(in_Q))
      for (auto p : pairs_where(in_P))
        for (auto a : all_pairs()) add(C1NormalForm::form2(q, p, a));
    for (auto m : pairs_where(in_M))
      for (auto a : all_pairs()) add(C1NormalForm::form3(m, a));
    if (size() != kOrder) throw std::logic_error("C1 enumeration incomplete");

    table_.resize(kOrder * kOrder);
    for (int i = 0; i < kOrder; ++i)
      for (int j = 0; j < kOrder; ++j) {
        auto k = find(elems_[i].matrix * elems_[j].matrix);
        if (!k) throw std::logic_error("C1 not closed under multiplication");
        table_[i * kOrder + j] = *k;
      }
    s_ = *find(s_gate());
    h_ = *find(hadamard3());

    // Breadth-first words: g applied after x has word word(x) + g.
    std::vector<bool> seen(kOrder, false);
    std::vector<int> queue = {0};
    seen[0] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (auto [g, letter] : {std::pair{s_, 'S'}, std::pair{h_, 'H'}}) {
        int y = mul(g, x);
        if (seen[y]) continue;
        seen[y] = true;
        elems_[y].word = elems_[x].word + letter;
        queue.push_back(y);
      }
    }
    if (static_cast<int>(queue.size()) != kOrder) throw std::logic_error("S and H do not generate C1");

    green_.assign(kOrder, false);
    red_.assign(kOrder, false);
    for (auto a : all_pairs()) green_[z(a)] = true;
    for (auto m : pairs_where(in_M)) {
      int r = mul(x(m), h_);
      red_[r] = true;
      // X(m) H |+> = X(m) |0>.
      const Matrix& xm = elems_[x(m)].matrix;
      for (int k = 0; k < 3; ++k)
        if (std::abs(xm(k, 0)) > 1e-9) red_for_[k] = r;
    }
  }

  std::vector<Element> elems_;
  std::map<std::uint64_t, int> index_;
  std::vector<int> table_;
  int s_ = 0, h_ = 0;
  std::vector<bool> green_, red_;
  std::array<int, 3> red_for_{};
};

inline const C1Group& c1() { return C1Group::get(); }

inline std::vector<std::pair<C1NormalForm, Matrix>> enumerate_c1() {
  std::vector<std::pair<C1NormalForm, Matrix>> out;
  for (const auto& e : c1().elements()) out.emplace_back(e.form, e.matrix);
  return out;
}

// ---------------------------------------------------------------------------------------------------------------
// Weighted graphs and graph states

struct WeightedGraph {
  int n = 0;
  std::vector<std::vector<int>> gamma;

  WeightedGraph() = default;
  explicit WeightedGraph(int vertices) : n(vertices), gamma(vertices, std::vector<int>(vertices, 0)) {}
  bool operator==(const WeightedGraph&) const = default;

  int weight(int u, int v) const { return gamma.at(u).at(v); }
  void set_edge(int u, int v, int w) {
    check(u), check(v);
    if (u == v) throw std::invalid_argument("graph states have no self-loops");
    gamma[u][v] = gamma[v][u] = mod3(w);
  }
  std::vector<int> neighbours(int v) const {
    check(v);
    std::vector<int> out;
    for (int u = 0; u < n; ++u)
      if (gamma[v][u]) out.push_back(u);
    return out;
  }
  bool valid() const {
    if (static_cast<int>(gamma.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(gamma[i].size()) != n || gamma[i][i] != 0) return false;
      for (int j = 0; j < n; ++j)
        if (gamma[i][j] != gamma[j][i] || gamma[i][j] < 0 || gamma[i][j] > 2) return false;
    }
    return true;
  }
  void check(int v) const {
    if (v < 0 || v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
};

inline WeightedGraph local_comp(const WeightedGraph& g, int v, int a) {
  g.check(v);
  WeightedGraph h = g;
  for (int j = 0; j < g.n; ++j)
    for (int k = 0; k < g.n; ++k)
      if (j != k) h.gamma[j][k] = mod3(g.gamma[j][k] + a * g.gamma[v][j] * g.gamma[v][k]);
  return h;
}

inline WeightedGraph scale_vertex(const WeightedGraph& g, int v, int b) {
  g.check(v);
  if (mod3(b) == 0) throw std::invalid_argument("scale factor must be nonzero mod 3");
  WeightedGraph h = g;
  for (int u = 0; u < g.n; ++u) {
    h.gamma[v][u] = mod3(g.gamma[v][u] * b);
    h.gamma[u][v] = h.gamma[v][u];
  }
  return h;
}

inline constexpr int kMaxStateVectorQutrits = 10;

namespace detail {

inline std::size_t pow3(int n) {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

inline Complex omega(int k) { return std::polar(1.0, 2 * kPi * mod3(k) / 3); }

// Applies a single-qutrit matrix to qutrit q of an n-qutrit column vector (qutrit 0 most significant).
inline Matrix apply_local(const Matrix& psi, int n, int q, const Matrix& u) {
  std::size_t stride = pow3(n - 1 - q);
  Matrix out(psi.rows, 1);
  for (std::size_t x = 0; x < psi.rows; ++x) {
    std::size_t d = (x / stride) % 3;
    std::size_t base = x - d * stride;
    for (std::size_t k = 0; k < 3; ++k) out.a[base + k * stride] += u(k, d) * psi.a[x];
  }
  return out;
}

}  // namespace detail

inline Matrix graph_state_vector(const WeightedGraph& g) {
  if (g.n > kMaxStateVectorQutrits) throw DimensionOverflow("graph state vector limited to 10 qutrits");
  std::size_t N = detail::pow3(g.n);
  Matrix v(N, 1);
  double norm = 1 / std::sqrt(static_cast<double>(N));
  std::vector<int> digit(g.n);
  for (std::size_t x = 0; x < N; ++x) {
    std::size_t t = x;
    for (int i = g.n - 1; i >= 0; --i) digit[i] = static_cast<int>(t % 3), t /= 3;
    int e = 0;
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j) e += g.gamma[i][j] * digit[i] * digit[j];
    v.a[x] = norm * detail::omega(e);
  }
  return v;
}

// ---------------------------------------------------------------------------------------------------------------
// GS-LC diagrams

struct GSLCDiagram {
  WeightedGraph graph;
  std::vector<int> ops;  // indices into c1(), one per vertex

  GSLCDiagram() = default;
  explicit GSLCDiagram(WeightedGraph g) : graph(std::move(g)), ops(graph.n, 0) {}
  GSLCDiagram(WeightedGraph g, std::vector<int> o) : graph(std::move(g)), ops(std::move(o)) {
    if (static_cast<int>(ops.size()) != graph.n) throw std::invalid_argument("one vertex operator per vertex");
  }
  bool operator==(const GSLCDiagram&) const = default;

  int size() const { return graph.n; }
  const C1NormalForm& op_form(int v) const { return c1()[ops.at(v)].form; }
};

struct StateOrZero {
  std::optional<GSLCDiagram> state;

  StateOrZero() = default;
  StateOrZero(GSLCDiagram d) : state(std::move(d)) {}
  static StateOrZero zero() { return {}; }
  bool is_zero() const { return !state.has_value(); }
  bool operator==(const StateOrZero&) const = default;
};

inline Matrix state_vector(const GSLCDiagram& d) {
  Matrix psi = graph_state_vector(d.graph);
  for (int v = 0; v < d.size(); ++v) psi = detail::apply_local(psi, d.size(), v, c1()[d.ops[v]].matrix);
  return psi;
}

inline bool is_rgslc(const GSLCDiagram& d) {
  for (int v = 0; v < d.size(); ++v) {
    if (!c1().in_r(d.ops[v])) return false;
    if (!c1().is_red(d.ops[v])) continue;
    for (int u : d.graph.neighbours(v))
      if (c1().is_red(d.ops[u])) return false;
  }
  return true;
}

// |G> = X_v(c) prod_{u ~ v} Z_u(d) |G *_a v> with (c, d) = ((1,1), (2,2)) for a = 1 and ((2,2), (1,1)) for a = 2,
// so the corrections are absorbed into the vertex operators from the right.
inline GSLCDiagram apply_local_comp_with_corrections(const GSLCDiagram& d, int v, int a) {
  d.graph.check(v);
  a = mod3(a);
  if (a == 0) return d;
  const C1Group& g = c1();
  int xc = g.x(a == 1 ? Z3PhasePair(1, 1) : Z3PhasePair(2, 2));
  int zc = g.z(a == 1 ? Z3PhasePair(2, 2) : Z3PhasePair(1, 1));
  GSLCDiagram out = d;
  out.graph = local_comp(d.graph, v, a);
  out.ops[v] = g.mul(d.ops[v], xc);
  for (int u : d.graph.neighbours(v)) out.ops[u] = g.mul(d.ops[u], zc);
  return out;
}

// |G> = H_v^2 |G o_2 v>: the Hadamard pair lands in the vertex operator.
inline GSLCDiagram apply_scale_with_corrections(const GSLCDiagram& d, int v, int b) {
  GSLCDiagram out = d;
  out.graph = scale_vertex(d.graph, v, b);
  if (mod3(b) == 2) out.ops[v] = c1().mul(d.ops[v], c1().h2());
  return out;
}

// ---------------------------------------------------------------------------------------------------------------
// Affine form: a stabilizer state as sum over u in Z3^k of w^{Q(u)} |c + A u>, with A injective.
// Used to carry the two-qutrit and post-selection cases and to read off the reduced diagram.

namespace detail {

struct Affine {
  std::vector<int> lin;
  int c = 0;
};

class AffineState {
 public:
  int n = 0, k = 0;
  std::vector<std::vector<int>> A;  // n x k
  std::vector<int> c;
  std::vector<std::vector<int>> q;  // k x k: q[j][j] squares, q[j][l] = q[l][j] cross coefficient
  std::vector<int> lin;
  bool zero = false;

  static AffineState from_graph(const WeightedGraph& g) {
    AffineState s;
    s.n = s.k = g.n;
    s.A.assign(g.n, std::vector<int>(g.n, 0));
    for (int i = 0; i < g.n; ++i) s.A[i][i] = 1;
    s.c.assign(g.n, 0);
    s.q = g.gamma;
    s.lin.assign(g.n, 0);
    return s;
  }

  static AffineState from_gslc(const GSLCDiagram& d) {
    AffineState s = from_graph(d.graph);
    for (int v = 0; v < d.size(); ++v) s.apply_c1(v, d.ops[v]);
    return s;
  }

  Affine row(int i) const { return {A[i], c[i]}; }
  Affine constant(int x) const { return {std::vector<int>(k, 0), mod3(x)}; }

  // Q += coef * L1 * L2, constants dropped.
  void add_product(int coef, const Affine& l1, const Affine& l2) {
    coef = mod3(coef);
    if (!coef) return;
    for (int j = 0; j < k; ++j) {
      lin[j] = mod3(lin[j] + coef * (l1.lin[j] * l2.c + l2.lin[j] * l1.c));
      for (int l = 0; l < k; ++l) {
        int t = coef * l1.lin[j] * l2.lin[l];
        if (!t) continue;
        if (j == l) {
          q[j][j] = mod3(q[j][j] + t);
        } else {
          q[j][l] = mod3(q[j][l] + t);
          q[l][j] = mod3(q[l][j] + t);
        }
      }
    }
  }

  // Substitutes u_old = T u_new + t0, T is k_old x k_new.
  void change_vars(const std::vector<std::vector<int>>& T, const std::vector<int>& t0) {
    int k_new = T.empty() ? 0 : static_cast<int>(T[0].size());
    std::vector<Affine> sub(k);
    for (int j = 0; j < k; ++j) sub[j] = {T[j], t0[j]};
    auto old_q = q;
    auto old_lin = lin;
    int k_old = k;
    std::vector<std::vector<int>> new_a(n, std::vector<int>(k_new, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k_old; ++j) {
        if (!A[i][j]) continue;
        c[i] = mod3(c[i] + A[i][j] * t0[j]);
        for (int l = 0; l < k_new; ++l) new_a[i][l] = mod3(new_a[i][l] + A[i][j] * T[j][l]);
      }
    A = std::move(new_a);
    k = k_new;
    q.assign(k, std::vector<int>(k, 0));
    lin.assign(k, 0);
    for (int j = 0; j < k_old; ++j) {
      add_product(old_lin[j], sub[j], constant(1));
      add_product(old_q[j][j], sub[j], sub[j]);
      for (int l = j + 1; l < k_old; ++l) add_product(old_q[j][l], sub[j], sub[l]);
    }
  }

  // Drops variable j, which must not occur in any row or in Q.
  void remove_var(int j) {
    for (auto& r : A) r.erase(r.begin() + j);
    q.erase(q.begin() + j);
    for (auto& r : q) r.erase(r.begin() + j);
    lin.erase(lin.begin() + j);
    --k;
  }

  int add_var() {
    for (auto& r : A) r.push_back(0);
    for (auto& r : q) r.push_back(0);
    q.emplace_back(k + 1, 0);
    lin.push_back(0);
    return k++;
  }

  // Identity substitution except u_j := expr (expr must not mention u_j).
  void substitute(int j, const Affine& expr) {
    std::vector<std::vector<int>> T(k, std::vector<int>(k, 0));
    std::vector<int> t0(k, 0);
    for (int l = 0; l < k; ++l) T[l][l] = 1;
    T[j] = expr.lin;
    t0[j] = expr.c;
    change_vars(T, t0);
  }

  // Imposes L(u) = 0 by eliminating one variable; flags the zero state if L is a nonzero constant.
  void impose(const Affine& l) {
    int p = -1;
    for (int j = 0; j < k; ++j)
      if (l.lin[j]) {
        p = j;
        break;
      }
    if (p < 0) {
      if (l.c) zero = true;
      return;
    }
    int inv = l.lin[p];  // 1 and 2 are self-inverse mod 3
    Affine expr{std::vector<int>(k, 0), mod3(-inv * l.c)};
    for (int j = 0; j < k; ++j)
      if (j != p) expr.lin[j] = mod3(-inv * l.lin[j]);
    substitute(p, expr);
    remove_var(p);
  }

  // Sums out variable j, which must not occur in any row.
  void sum_out(int j) {
    Affine l{q[j], lin[j]};
    int beta = q[j][j];
    l.lin[j] = 0;
    for (int m = 0; m < k; ++m) q[j][m] = q[m][j] = 0;
    lin[j] = 0;
    if (beta) {
      // beta z^2 + L z summed over z leaves -L^2 / (4 beta) = 2 beta L^2 mod 3.
      add_product(2 * beta, l, l);
      remove_var(j);
      return;
    }
    remove_var(j);
    l.lin.erase(l.lin.begin() + j);
    impose(l);
  }

  // Restores injectivity of A by summing out redundant directions.
  void reduce() {
    while (!zero) {
      auto ker = kernel_vector();
      if (!ker) return;
      int p = 0;
      while (!(*ker)[p]) ++p;
      int inv = (*ker)[p];
      std::vector<std::vector<int>> T(k, std::vector<int>(k, 0));
      for (int l = 0; l < k; ++l) T[l][l] = 1;
      for (int l = 0; l < k; ++l) T[l][p] = mod3(inv * (*ker)[l]);
      change_vars(T, std::vector<int>(k, 0));
      sum_out(p);
    }
  }

  std::optional<std::vector<int>> kernel_vector() const {
    std::vector<std::vector<int>> m = A;
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < k && r < n; ++col) {
      int piv = -1;
      for (int i = r; i < n; ++i)
        if (m[i][col]) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[r], m[piv]);
      int inv = m[r][col];
      for (int& x : m[r]) x = mod3(x * inv);
      for (int i = 0; i < n; ++i)
        if (i != r && m[i][col]) {
          int f = m[i][col];
          for (int l = 0; l < k; ++l) m[i][l] = mod3(m[i][l] - f * m[r][l]);
        }
      pivot_col.push_back(col);
      ++r;
    }
    if (r == k) return std::nullopt;
    int free_col = 0;
    for (int col = 0; col < k; ++col)
      if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end()) {
        free_col = col;
        break;
      }
    std::vector<int> v(k, 0);
    v[free_col] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = mod3(-m[i][free_col]);
    return v;
  }

  // Z(a, b): f(1) = a, f(2) = b, so f(y) = (b - a) y + (2a - b) y^2.
  void apply_z(int i, Z3PhasePair p) {
    int alpha = mod3(p.b - p.a), beta = mod3(2 * p.a - p.b);
    add_product(beta, row(i), row(i));
    add_product(alpha, row(i), constant(1));
  }

  // H |x> = sum_y w^{xy} |y>: fresh variable y for the output, phase y * x_i.
  void apply_h(int i) {
    Affine old = row(i);
    int y = add_var();
    old.lin.push_back(0);
    Affine yv = constant(0);
    yv.lin[y] = 1;
    add_product(1, yv, old);
    A[i].assign(k, 0);
    A[i][y] = 1;
    c[i] = 0;
    reduce();
  }

  void apply_c1(int i, int op) {
    for (char ch : c1()[op].word) {
      if (ch == 'S') apply_z(i, {0, 1});
      else apply_h(i);
    }
  }

  void apply_sum(int ctrl, int tgt) {
    for (int j = 0; j < k; ++j) A[tgt][j] = mod3(A[tgt][j] + A[ctrl][j]);
    c[tgt] = mod3(c[tgt] + c[ctrl]);
  }

  void add_zero_qutrit() {
    A.emplace_back(k, 0);
    c.push_back(0);
    ++n;
  }

  // Post-selects qutrit i on |value> and removes it.
  void project(int i, int value) {
    Affine l = row(i);
    l.c = mod3(l.c - value);
    impose(l);
    if (zero) return;
    A.erase(A.begin() + i);
    c.erase(c.begin() + i);
    --n;
    reduce();
  }

  // Reads off the reduced diagram: pivot qutrits (chosen greedily in ascending order) carry the free variables
  // and green operators, the others are affine functions of them and carry red operators.
  GSLCDiagram to_reduced() const {
    if (zero) throw std::logic_error("zero state has no diagram");
    AffineState s = *this;
    std::vector<int> pivots;
    std::vector<std::vector<int>> basis;  // row-reduced copies of the chosen rows
    std::vector<int> basis_col;
    for (int i = 0; i < n && static_cast<int>(pivots.size()) < k; ++i) {
      std::vector<int> r = s.A[i];
      for (std::size_t b = 0; b < basis.size(); ++b)
        if (int f = r[basis_col[b]]) {
          for (int l = 0; l < k; ++l) r[l] = mod3(r[l] - f * basis[b][l]);
        }
      int col = -1;
      for (int l = 0; l < k; ++l)
        if (r[l]) {
          col = l;
          break;
        }
      if (col < 0) continue;
      int inv = r[col];
      for (int& x : r) x = mod3(x * inv);
      for (auto& b : basis)
        if (int f = b[col]) {
          for (int l = 0; l < k; ++l) b[l] = mod3(b[l] - f * r[l]);
        }
      basis.push_back(r);
      basis_col.push_back(col);
      pivots.push_back(i);
    }
    // u = A_P^{-1} (v - c_P)
    std::vector<std::vector<int>> ap(k);
    std::vector<int> cp(k);
    for (int j = 0; j < k; ++j) ap[j] = s.A[pivots[j]], cp[j] = s.c[pivots[j]];
    auto inv = invert(ap);
    std::vector<int> t0(k, 0);
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) t0[j] = mod3(t0[j] - inv[j][l] * cp[l]);
    s.change_vars(inv, t0);

    const C1Group& g = c1();
    GSLCDiagram d{WeightedGraph(n)};
    std::vector<int> var_of(n, -1);
    for (int j = 0; j < k; ++j) var_of[pivots[j]] = j;
    for (int i = 0; i < n; ++i) {
      int j = var_of[i];
      if (j >= 0) {
        int beta = s.q[j][j], alpha = s.lin[j];
        d.ops[i] = g.z({alpha + beta, 2 * alpha + beta});
        for (int l = j + 1; l < k; ++l) d.graph.set_edge(i, pivots[l], s.q[j][l]);
      } else {
        d.ops[i] = g.red_op(s.c[i]);
        for (int l = 0; l < k; ++l) d.graph.set_edge(i, pivots[l], -s.A[i][l]);
      }
    }
    return d;
  }

  static std::vector<std::vector<int>> invert(std::vector<std::vector<int>> m) {
    int k = static_cast<int>(m.size());
    std::vector<std::vector<int>> inv(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) inv[i][i] = 1;
    for (int col = 0; col < k; ++col) {
      int piv = col;
      while (!m[piv][col]) ++piv;
      std::swap(m[col], m[piv]);
      std::swap(inv[col], inv[piv]);
      int f = m[col][col];
      for (int l = 0; l < k; ++l) m[col][l] = mod3(m[col][l] * f), inv[col][l] = mod3(inv[col][l] * f);
      for (int i = 0; i < k; ++i)
        if (i != col && m[i][col]) {
          int h = m[i][col];
          for (int l = 0; l < k; ++l) {
            m[i][l] = mod3(m[i][l] - h * m[col][l]);
            inv[i][l] = mod3(inv[i][l] - h * inv[col][l]);
          }
        }
    }
    return inv;
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------------------------------------------
// Generators, reduction and equality

enum class GateKind { S, H, Sum, Prep, Effect };

struct CliffordGate {
  GateKind kind = GateKind::S;
  int v = 0;      // operand; control for SUM
  int t = 0;      // SUM target
  int value = 0;  // effect <value|

  static CliffordGate S(int v) { return {GateKind::S, v}; }
  static CliffordGate H(int v) { return {GateKind::H, v}; }
  static CliffordGate Sum(int c, int t) { return {GateKind::Sum, c, t}; }
  static CliffordGate Prep() { return {GateKind::Prep}; }
  static CliffordGate Effect(int v, int value) { return {GateKind::Effect, v, 0, mod3(value)}; }

  std::string str() const {
    switch (kind) {
      case GateKind::S: return "S " + std::to_string(v);
      case GateKind::H: return "H " + std::to_string(v);
      case GateKind::Sum: return "SUM " + std::to_string(v) + " " + std::to_string(t);
      case GateKind::Prep: return "PREP";
      case GateKind::Effect: return "EFFECT " + std::to_string(v) + " " + std::to_string(value);
    }
    return {};
  }
};

inline GSLCDiagram to_rgslc(const GSLCDiagram& d) { return detail::AffineState::from_gslc(d).to_reduced(); }

// The empty register: zero qutrits, the scalar 1.
inline StateOrZero empty_state() { return GSLCDiagram{WeightedGraph(0)}; }

inline StateOrZero apply_clifford_generator(const StateOrZero& s, const CliffordGate& gate) {
  if (s.is_zero()) return s;
  const GSLCDiagram& d = *s.state;
  const C1Group& g = c1();
  auto check = [&](int v) { d.graph.check(v); };
  switch (gate.kind) {
    case GateKind::S:
    case GateKind::H: {
      check(gate.v);
      GSLCDiagram out = d;
      out.ops[gate.v] = g.mul(gate.kind == GateKind::S ? g.s() : g.h(), d.ops[gate.v]);
      return out;
    }
    case GateKind::Prep: {
      // |0> = H |+> on a fresh isolated vertex.
      GSLCDiagram out = d;
      WeightedGraph wg(d.size() + 1);
      for (int i = 0; i < d.size(); ++i)
        for (int j = 0; j < d.size(); ++j) wg.gamma[i][j] = d.graph.gamma[i][j];
      out.graph = wg;
      out.ops.push_back(g.h());
      return out;
    }
    case GateKind::Sum: {
      check(gate.v), check(gate.t);
      if (gate.v == gate.t) throw std::invalid_argument("SUM needs two distinct qutrits");
      auto a = detail::AffineState::from_gslc(d);
      a.apply_sum(gate.v, gate.t);
      return a.to_reduced();
    }
    case GateKind::Effect: {
      check(gate.v);
      auto a = detail::AffineState::from_gslc(d);
      a.project(gate.v, gate.value);
      if (a.zero) return StateOrZero::zero();
      return a.to_reduced();
    }
  }
  return s;
}

inline StateOrZero run_circuit(const std::vector<CliffordGate>& gates, StateOrZero s = empty_state()) {
  for (const auto& gate : gates) s = apply_clifford_generator(s, gate);
  return s;
}

// Both sides go to the reduced form, whose pivot choice depends only on the support of the state, so the pair
// is already simplified and equality is structural identity.
inline bool equal_states(const StateOrZero& a, const StateOrZero& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.state->size() != b.state->size()) throw std::invalid_argument("vertex counts differ");
  return to_rgslc(*a.state) == to_rgslc(*b.state);
}

}  // namespace zxw::qutrit
