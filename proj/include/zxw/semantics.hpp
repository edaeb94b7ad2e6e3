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

#include <functional>

#include "zxw/diagram.hpp"

namespace zxw {

struct InvalidDiagram : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotExact : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r = checked_mul(r, b);
  return r;
}

inline Complex unit_root(int dim, long k) {
  double t = 2 * kPi * static_cast<double>(((k % dim) + dim) % dim) / dim;
  return {std::cos(t), std::sin(t)};
}

inline Matrix hadamard_matrix(int dim, int power = 1) {
  Matrix h(dim, dim);
  double s = 1 / std::sqrt(static_cast<double>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) h(i, j) = s * unit_root(dim, static_cast<long>(i) * j);
  int mod = dim == 2 ? 2 : 4;
  power = ((power % mod) + mod) % mod;
  Matrix r = Matrix::identity(dim);
  for (int p = 0; p < power; ++p) r = h * r;
  return r;
}

namespace detail {

// Visits every matrix entry with the output and input digit strings.
template <class F>
void for_each_entry(int dim, int n, int m, F&& f) {
  std::size_t rows = ipow(dim, m), cols = ipow(dim, n);
  std::vector<int> od(m), id(n);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t t = r;
    for (int i = m - 1; i >= 0; --i) od[i] = static_cast<int>(t % dim), t /= dim;
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t u = c;
      for (int i = n - 1; i >= 0; --i) id[i] = static_cast<int>(u % dim), u /= dim;
      f(r, c, od, id);
    }
  }
}

inline int common_value(const std::vector<int>& a, const std::vector<int>& b) {
  int v = -1;
  for (int x : a) {
    if (v >= 0 && x != v) return -2;
    v = x;
  }
  for (int x : b) {
    if (v >= 0 && x != v) return -2;
    v = x;
  }
  return v;
}

}  // namespace detail

inline Matrix generator_matrix(const Node& node, int n, int m, int dim) {
  int pc = port_count(node.kind);
  if (pc == 2 && (n != 1 || m != 1)) throw ArityError("unary generator must be 1->1");
  if (pc == 4 && (n != 2 || m != 2)) throw ArityError("crossing must be 2->2");
  if (is_zw_kind(node.kind) && dim != 2) throw ArityError("zw generators are qubit-only");
  Matrix M(ipow(dim, m), ipow(dim, n));
  switch (node.kind) {
    case Kind::ZSpider:
    case Kind::XSpider: {
      if (static_cast<int>(node.phases.size()) != dim - 1) throw ArityError("phase count must be d-1");
      std::vector<Complex> e(dim, Complex{1, 0});
      for (int j = 1; j < dim; ++j) e[j] = std::polar(1.0, node.phases[j - 1].value());
      if (node.kind == Kind::ZSpider) {
        detail::for_each_entry(dim, n, m, [&](std::size_t r, std::size_t c, auto& od, auto& id) {
          int v = detail::common_value(od, id);
          if (v == -1) {
            Complex s{0, 0};
            for (int j = 0; j < dim; ++j) s += e[j];
            M(r, c) = s;
          } else if (v >= 0) {
            M(r, c) = e[v];
          }
        });
      } else {
        double norm = std::pow(static_cast<double>(dim), -0.5 * (n + m));
        detail::for_each_entry(dim, n, m, [&](std::size_t r, std::size_t c, auto& od, auto& id) {
          long s = 0;
          for (int x : od) s += x;
          for (int x : id) s -= x;
          Complex acc{0, 0};
          for (int j = 0; j < dim; ++j) acc += e[j] * unit_root(dim, j * s);
          M(r, c) = norm * acc;
        });
      }
      return M;
    }
    case Kind::Hadamard: return hadamard_matrix(dim, node.power);
    case Kind::Triangle:
      if (dim != 2) throw ArityError("triangle is qubit-only");
      return Matrix(2, 2, {1, node.power == -1 ? -1.0 : 1.0, 0, 1});
    case Kind::LambdaBox:
      if (dim != 2) throw ArityError("lambda box is qubit-only");
      if (!(node.lambda >= 0)) throw std::invalid_argument("lambda must be nonnegative");
      return Matrix(2, 2, {1, 0, 0, node.lambda});
    case Kind::ZWWhite:
      detail::for_each_entry(2, n, m, [&](std::size_t r, std::size_t c, auto& od, auto& id) {
        int v = detail::common_value(od, id);
        if (v == -1) M(r, c) = 1.0 + node.r;
        if (v == 0) M(r, c) = 1;
        if (v == 1) M(r, c) = node.r;
      });
      return M;
    case Kind::ZWBlack:
      if (n + m == 0) throw ArityError("black node needs legs");
      detail::for_each_entry(2, n, m, [&](std::size_t r, std::size_t c, auto& od, auto& id) {
        int w = 0;
        for (int x : od) w += x;
        for (int x : id) w += x;
        if (w == 1) M(r, c) = 1;
      });
      return M;
    case Kind::ZWCrossing: return Matrix(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1});
    case Kind::ZWPi: return Matrix(2, 2, {0, 1, 1, 0});
  }
  throw ArityError("unknown kind");
}

namespace detail {

inline RingElement ring_phase(const Phase& p) {
  auto k = p.eighth();
  if (!k) throw NotExact("phase is not a multiple of pi/4");
  return RingElement::omega_pow(*k);
}

inline RingElement inv_sqrt2_pow(int e) {
  RingElement r(1);
  for (int i = 0; i < e; ++i) r = r * RingElement::inv_sqrt2();
  return r;
}

inline RingElement ring_real(double v) {
  auto dy = Dyadic::from_double(v, 30);
  if (!dy) throw NotExact("value is not dyadic");
  return RingElement(*dy, Dyadic(0), Dyadic(0), Dyadic(0));
}

inline RingElement ring_complex(Complex z) {
  auto re = Dyadic::from_double(z.real(), 30), im = Dyadic::from_double(z.imag(), 30);
  if (!re || !im) throw NotExact("value is not in Z[1/2, i]");
  return RingElement(*re, Dyadic(0), *im, Dyadic(0));
}

}  // namespace detail

// Exact counterpart for qubit generators whose parameters lie in Z[1/2, e^{i pi/4}].
inline BasicMatrix<RingElement> generator_matrix_exact(const Node& node, int n, int m, int dim) {
  if (dim != 2) throw NotExact("exact mode is qubit-only");
  BasicMatrix<RingElement> M(ipow(2, m), ipow(2, n));
  switch (node.kind) {
    case Kind::ZSpider: {
      RingElement e1 = detail::ring_phase(node.phases.at(0));
      detail::for_each_entry(2, n, m, [&](std::size_t r, std::size_t c, auto& od, auto& id) {
        int v = detail::common_value(od, id);
        if (v == -1) M(r, c) = RingElement(1) + e1;
        if (v == 0) M(r, c) = RingElement(1);
        if (v == 1) M(r, c) = e1;
      });
      return M;
    }
    case Kind::XSpider: {
      RingElement e1 = detail::ring_phase(node.phases.at(0));
      RingElement norm = detail::inv_sqrt2_pow(n + m);
      RingElement plus = norm * (RingElement(1) + e1), minus = norm * (RingElement(1) - e1);
      detail::for_each_entry(2, n, m, [&](std::size_t r, std::size_t c, auto& od, auto& id) {
        int s = 0;
        for (int x : od) s += x;
        for (int x : id) s += x;
        M(r, c) = (s % 2 == 0) ? plus : minus;
      });
      return M;
    }
    case Kind::Hadamard: {
      if (((node.power % 2) + 2) % 2 == 0) return BasicMatrix<RingElement>::identity(2);
      RingElement h = RingElement::inv_sqrt2();
      return BasicMatrix<RingElement>(2, 2, {h, h, h, -h});
    }
    case Kind::LambdaBox:
      return BasicMatrix<RingElement>(2, 2, {RingElement(1), RingElement(0), RingElement(0), detail::ring_real(node.lambda)});
    case Kind::ZWWhite: {
      RingElement r = node.exact_r ? *node.exact_r : detail::ring_complex(node.r);
      detail::for_each_entry(2, n, m, [&](std::size_t i, std::size_t j, auto& od, auto& id) {
        int v = detail::common_value(od, id);
        if (v == -1) M(i, j) = RingElement(1) + r;
        if (v == 0) M(i, j) = RingElement(1);
        if (v == 1) M(i, j) = r;
      });
      return M;
    }
    default: {
      Matrix f = generator_matrix(node, n, m, dim);
      for (std::size_t i = 0; i < f.a.size(); ++i) M.a[i] = RingElement(static_cast<int>(f.a[i].real()));
      return M;
    }
  }
}

// Dense tensor with one label per leg, all legs of dimension dim.
template <class T>
struct Tensor {
  std::vector<int> labels;
  std::vector<T> data;
};

namespace detail {

template <class T>
Tensor<T> permute(const Tensor<T>& t, const std::vector<int>& order, int dim) {
  std::size_t k = t.labels.size();
  std::vector<std::size_t> stride(k);
  std::size_t s = 1;
  for (std::size_t i = k; i-- > 0;) stride[i] = s, s *= dim;
  std::vector<std::size_t> src(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto it = std::find(t.labels.begin(), t.labels.end(), order[i]);
    src[i] = stride[it - t.labels.begin()];
  }
  Tensor<T> r;
  r.labels = order;
  r.data.resize(t.data.size());
  std::vector<int> digit(k, 0);
  std::size_t off = 0;
  for (std::size_t lin = 0; lin < r.data.size(); ++lin) {
    r.data[lin] = t.data[off];
    for (std::size_t i = k; i-- > 0;) {
      off += src[i];
      if (++digit[i] < dim) break;
      off -= src[i] * dim;
      digit[i] = 0;
    }
  }
  return r;
}

// Sums over pairs of equal labels inside a single tensor (self-loops).
template <class T>
Tensor<T> trace_repeated(Tensor<T> t, int dim) {
  for (;;) {
    int a = -1, b = -1;
    for (std::size_t i = 0; i < t.labels.size() && a < 0; ++i)
      for (std::size_t j = i + 1; j < t.labels.size(); ++j)
        if (t.labels[i] == t.labels[j]) {
          a = static_cast<int>(i), b = static_cast<int>(j);
          break;
        }
    if (a < 0) return t;
    std::vector<int> rest;
    for (std::size_t i = 0; i < t.labels.size(); ++i)
      if (static_cast<int>(i) != a && static_cast<int>(i) != b) rest.push_back(t.labels[i]);
    // Make the pair unique so permute can locate it, then move it to the back.
    t.labels[a] = -1000001, t.labels[b] = -1000002;
    std::vector<int> order = rest;
    order.push_back(-1000001), order.push_back(-1000002);
    Tensor<T> p = permute(t, order, dim);
    Tensor<T> r;
    r.labels = rest;
    r.data.assign(p.data.size() / (dim * dim), T{});
    for (std::size_t i = 0; i < r.data.size(); ++i)
      for (int j = 0; j < dim; ++j) r.data[i] = r.data[i] + p.data[i * dim * dim + j * dim + j];
    t = std::move(r);
  }
}

template <class T>
Tensor<T> contract(const Tensor<T>& x, const Tensor<T>& y, int dim) {
  std::vector<int> fx, fy, sh;
  for (int l : x.labels)
    if (std::find(y.labels.begin(), y.labels.end(), l) != y.labels.end())
      sh.push_back(l);
    else
      fx.push_back(l);
  for (int l : y.labels)
    if (std::find(sh.begin(), sh.end(), l) == sh.end()) fy.push_back(l);
  std::vector<int> ox = fx, oy = sh;
  ox.insert(ox.end(), sh.begin(), sh.end());
  oy.insert(oy.end(), fy.begin(), fy.end());
  Tensor<T> px = permute(x, ox, dim), py = permute(y, oy, dim);
  std::size_t R = ipow(dim, fx.size()), K = ipow(dim, sh.size()), C = ipow(dim, fy.size());
  Tensor<T> r;
  r.labels = fx;
  r.labels.insert(r.labels.end(), fy.begin(), fy.end());
  r.data.assign(checked_mul(R, C), T{});
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t k = 0; k < K; ++k) {
      const T& s = px.data[i * K + k];
      if (s == T{}) continue;
      for (std::size_t j = 0; j < C; ++j) r.data[i * C + j] = r.data[i * C + j] + s * py.data[k * C + j];
    }
  return r;
}

}  // namespace detail

template <class T>
using GeneratorFn = std::function<BasicMatrix<T>(const Node&, int, int, int)>;

// Contracts the diagram's tensor network. Rows index outputs, columns inputs,
// boundary index 0 being the most significant digit.
template <class T>
BasicMatrix<T> interpret_with(const Diagram& d, const GeneratorFn<T>& genfn, bool check = true) {
  if (check) {
    auto bad = validate(d);
    if (!bad.empty()) throw InvalidDiagram(bad.front());
  }
  const int dim = d.dim;
  const std::size_t cap = dim == 2 ? 12 : 8;
  int next_label = 0;
  std::vector<int> in_label(d.n_in), out_label(d.n_out);
  for (auto& l : in_label) l = next_label++;
  for (auto& l : out_label) l = next_label++;

  struct Leg {
    int label;
    int port;
  };
  std::map<std::string, std::vector<Leg>, IdLess> legs;
  std::vector<Tensor<T>> ts;
  auto delta = [&](int a, int b) {
    Tensor<T> t;
    t.labels = {a, b};
    t.data.assign(dim * dim, T{});
    for (int j = 0; j < dim; ++j) t.data[j * dim + j] = T{1};
    ts.push_back(std::move(t));
  };
  auto bl = [&](const Endpoint& e) { return e.type == Endpoint::Type::In ? in_label[e.index] : out_label[e.index]; };
  for (const auto& [a, b] : d.edges) {
    if (a.is_boundary() && b.is_boundary()) {
      delta(bl(a), bl(b));
      continue;
    }
    int l = a.is_boundary() ? bl(a) : b.is_boundary() ? bl(b) : next_label++;
    if (!a.is_boundary()) legs[a.node].push_back({l, a.port});
    if (!b.is_boundary()) legs[b.node].push_back({l, b.port});
  }
  for (const auto& [id, node] : d.nodes) {
    auto& lg = legs[id];
    int pc = port_count(node.kind);
    Tensor<T> t;
    if (pc > 0) {
      std::vector<int> byport(pc, -1);
      for (auto& g : lg) byport[g.port] = g.label;
      BasicMatrix<T> M = genfn(node, pc / 2, pc / 2, dim);
      if (pc == 2)
        t.labels = {byport[1], byport[0]};
      else
        t.labels = {byport[2], byport[3], byport[0], byport[1]};
      t.data = std::move(M.a);
      ts.push_back(detail::trace_repeated(std::move(t), dim));
      continue;
    }
    bool oriented = qutrit_x_oriented(d, node);
    std::vector<int> outs, ins;
    for (auto& g : lg) (oriented && g.port == 0 ? ins : outs).push_back(g.label);
    // Split very high degree nodes into a fused chain; all split kinds fuse exactly.
    Node rest = node;
    if (is_spider(node.kind)) rest.phases.assign(node.phases.size(), Phase::zero());
    if (node.kind == Kind::ZWWhite) rest.r = 1;
    Node cur = node;
    while (outs.size() + ins.size() > cap) {
      int link = next_label++;
      std::vector<int> o2, i2;
      while (o2.size() + i2.size() + 1 < cap && (!outs.empty() || !ins.empty())) {
        if (!outs.empty())
          o2.push_back(outs.back()), outs.pop_back();
        else
          i2.push_back(ins.back()), ins.pop_back();
      }
      o2.push_back(link);
      ins.push_back(link);
      if (!oriented) outs.push_back(ins.back()), ins.pop_back();
      BasicMatrix<T> M = genfn(cur, static_cast<int>(i2.size()), static_cast<int>(o2.size()), dim);
      Tensor<T> piece;
      piece.labels = o2;
      piece.labels.insert(piece.labels.end(), i2.begin(), i2.end());
      piece.data = std::move(M.a);
      ts.push_back(detail::trace_repeated(std::move(piece), dim));
      cur = rest;
    }
    BasicMatrix<T> M = genfn(cur, static_cast<int>(ins.size()), static_cast<int>(outs.size()), dim);
    t.labels = outs;
    t.labels.insert(t.labels.end(), ins.begin(), ins.end());
    t.data = std::move(M.a);
    ts.push_back(detail::trace_repeated(std::move(t), dim));
  }

  while (ts.size() > 1) {
    // Prefer connected pairs; among them the smallest resulting rank, lowest indices first.
    std::size_t bi = 0, bj = 1;
    std::pair<int, long> best{2, 0};
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        long sh = 0;
        for (int l : ts[i].labels) sh += std::count(ts[j].labels.begin(), ts[j].labels.end(), l);
        long rank = static_cast<long>(ts[i].labels.size() + ts[j].labels.size()) - 2 * sh;
        std::pair<int, long> key{sh > 0 ? 0 : 1, rank};
        if (key < best) best = key, bi = i, bj = j;
      }
    Tensor<T> c = detail::contract(ts[bi], ts[bj], dim);
    ts.erase(ts.begin() + bj);
    ts[bi] = std::move(c);
  }
  Tensor<T> fin;
  if (ts.empty()) {
    fin.data = {T{1}};
  } else {
    fin = std::move(ts[0]);
  }
  std::vector<int> order = out_label;
  order.insert(order.end(), in_label.begin(), in_label.end());
  if (!order.empty()) fin = detail::permute(fin, order, dim);
  BasicMatrix<T> R(ipow(dim, d.n_out), ipow(dim, d.n_in), std::move(fin.data));
  T scale{1};
  for (int i = 0; i < d.loops; ++i) scale = scale * T(dim);
  if (d.loops > 0)
    for (auto& v : R.a) v = v * scale;
  return R;
}

inline Matrix interpret(const Diagram& d) {
  return interpret_with<Complex>(d, [](const Node& n, int a, int b, int dim) { return generator_matrix(n, a, b, dim); });
}

inline BasicMatrix<RingElement> interpret_exact(const Diagram& d) {
  return interpret_with<RingElement>(
      d, [](const Node& n, int a, int b, int dim) { return generator_matrix_exact(n, a, b, dim); });
}

}  // namespace zxw
