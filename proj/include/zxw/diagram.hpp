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

#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zxw/numerics.hpp"

namespace zxw {

enum class Calculus { ZX, ZW };

struct ArityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CompositionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An angle, either k*pi/m exactly or a float in [0, 2pi).
struct Phase {
  bool exact = true;
  std::int64_t k = 0;
  std::int64_t m = 1;
  double rad = 0;

  static Phase turn(std::int64_t k, std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("phase denominator must be positive");
    std::int64_t g = std::gcd(k < 0 ? -k : k, m);
    if (g == 0) g = 1;
    k /= g, m /= g;
    k %= 2 * m;
    if (k < 0) k += 2 * m;
    Phase p;
    p.k = k, p.m = m;
    return p;
  }

  static Phase radians(double r) {
    if (!std::isfinite(r)) throw std::invalid_argument("phase must be finite");
    r = std::fmod(r, 2 * kPi);
    if (r < 0) r += 2 * kPi;
    if (r >= 2 * kPi) r = 0;
    Phase p;
    p.exact = false, p.rad = r;
    return p;
  }

  static Phase zero() { return turn(0, 1); }

  // Qutrit shorthand: a multiple of 2pi/3.
  static Phase third(int a) { return turn(2 * a, 3); }

  double value() const { return exact ? kPi * static_cast<double>(k) / static_cast<double>(m) : rad; }
  bool is_zero() const { return exact ? k == 0 : rad == 0; }

  friend Phase operator+(const Phase& x, const Phase& y) {
    if (x.exact && y.exact) return turn(x.k * y.m + y.k * x.m, x.m * y.m);
    return radians(x.value() + y.value());
  }
  friend Phase operator-(const Phase& x) { return x.exact ? turn(-x.k, x.m) : radians(-x.rad); }
  friend Phase operator-(const Phase& x, const Phase& y) { return x + (-y); }

  bool operator==(const Phase& o) const {
    if (exact != o.exact) return false;
    return exact ? (k == o.k && m == o.m) : rad == o.rad;
  }

  // Multiple of pi/4, as required by exact mode.
  std::optional<int> eighth() const {
    if (!exact || 4 % m != 0) return std::nullopt;
    return static_cast<int>(k * (4 / m));
  }
};

enum class Kind { ZSpider, XSpider, Hadamard, Triangle, LambdaBox, ZWWhite, ZWBlack, ZWCrossing, ZWPi };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::ZSpider: return "Z";
    case Kind::XSpider: return "X";
    case Kind::Hadamard: return "H";
    case Kind::Triangle: return "Triangle";
    case Kind::LambdaBox: return "LambdaBox";
    case Kind::ZWWhite: return "ZWWhite";
    case Kind::ZWBlack: return "ZWBlackW";
    case Kind::ZWCrossing: return "ZWCrossing";
    case Kind::ZWPi: return "ZWPi";
  }
  return "?";
}

inline bool is_zw_kind(Kind k) {
  return k == Kind::ZWWhite || k == Kind::ZWBlack || k == Kind::ZWCrossing || k == Kind::ZWPi;
}

inline bool is_spider(Kind k) { return k == Kind::ZSpider || k == Kind::XSpider; }

// Kinds whose legs are numbered ports; the rest only see the multiset of incident edges.
inline int port_count(Kind k) {
  switch (k) {
    case Kind::Hadamard:
    case Kind::Triangle:
    case Kind::LambdaBox:
    case Kind::ZWPi: return 2;
    case Kind::ZWCrossing: return 4;
    default: return 0;
  }
}

struct Node {
  Kind kind = Kind::ZSpider;
  std::vector<Phase> phases;  // spiders: d-1 entries
  int power = 1;              // Hadamard (mod 2 or 4), Triangle (+1/-1)
  double lambda = 1;          // LambdaBox
  Complex r{1, 0};            // ZWWhite
  std::optional<RingElement> exact_r;  // ZWWhite parameter as an element of Z[1/2, e^{i pi/4}], when known

  bool operator==(const Node& o) const {
    return kind == o.kind && phases == o.phases && power == o.power && lambda == o.lambda && r == o.r &&
           exact_r == o.exact_r;
  }
};

inline Node z_node(std::vector<Phase> ph) { return Node{Kind::ZSpider, std::move(ph)}; }
inline Node x_node(std::vector<Phase> ph) { return Node{Kind::XSpider, std::move(ph)}; }
inline Node z_node(Phase p) { return z_node(std::vector<Phase>{p}); }
inline Node x_node(Phase p) { return x_node(std::vector<Phase>{p}); }
inline Node h_node(int power = 1) { return Node{Kind::Hadamard, {}, power}; }
inline Node triangle_node(int power = 1) { return Node{Kind::Triangle, {}, power}; }
inline Node lambda_node(double l) { return Node{Kind::LambdaBox, {}, 1, l}; }
inline Node white_node(Complex r) { return Node{Kind::ZWWhite, {}, 1, 1, r}; }
inline Node white_node(const RingElement& r) { return Node{Kind::ZWWhite, {}, 1, 1, ring_to_complex(r), r}; }
inline Node black_node() { return Node{Kind::ZWBlack}; }
inline Node crossing_node() { return Node{Kind::ZWCrossing}; }
inline Node zwpi_node() { return Node{Kind::ZWPi}; }

struct Endpoint {
  enum class Type { NodePort, In, Out };
  Type type = Type::NodePort;
  std::string node;
  int port = -1;  // -1: unnumbered spider leg
  int index = 0;  // boundary index

  static Endpoint at(std::string n, int p = -1) { return {Type::NodePort, std::move(n), p, 0}; }
  static Endpoint in(int i) { return {Type::In, {}, -1, i}; }
  static Endpoint out(int i) { return {Type::Out, {}, -1, i}; }

  bool is_boundary() const { return type != Type::NodePort; }
  bool operator==(const Endpoint& o) const = default;
  auto operator<=>(const Endpoint& o) const = default;

  std::string str() const {
    if (type == Type::In) return "in:" + std::to_string(index);
    if (type == Type::Out) return "out:" + std::to_string(index);
    return port < 0 ? node : node + ":" + std::to_string(port);
  }
};

using Edge = std::pair<Endpoint, Endpoint>;

// Orders "n2" before "n10".
struct IdLess {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct Diagram {
  Calculus calculus = Calculus::ZX;
  int dim = 2;
  std::map<std::string, Node, IdLess> nodes;
  std::vector<Edge> edges;
  int n_in = 0, n_out = 0;
  int loops = 0;  // closed wires, each a factor of dim
  long next_id = 0;

  std::string fresh_id() {
    for (;;) {
      std::string id = "n" + std::to_string(next_id++);
      if (!nodes.count(id)) return id;
    }
  }

  std::string add(Node n) {
    std::string id = fresh_id();
    nodes.emplace(id, std::move(n));
    return id;
  }

  void connect(Endpoint a, Endpoint b) { edges.emplace_back(std::move(a), std::move(b)); }

  bool operator==(const Diagram& o) const {
    return calculus == o.calculus && dim == o.dim && nodes == o.nodes && edges == o.edges && n_in == o.n_in &&
           n_out == o.n_out && loops == o.loops;
  }
};

inline bool qutrit_x_oriented(const Diagram& d, const Node& n) { return d.dim == 3 && n.kind == Kind::XSpider; }

inline std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> v;
  if (d.dim != 2 && d.dim != 3) v.push_back("dimension must be 2 or 3");
  if (d.calculus == Calculus::ZW && d.dim != 2) v.push_back("zw calculus requires dimension 2");
  for (const auto& [id, n] : d.nodes) {
    bool zw = is_zw_kind(n.kind);
    if (zw != (d.calculus == Calculus::ZW)) v.push_back("kind/calculus mismatch at " + id);
    if (is_spider(n.kind) && static_cast<int>(n.phases.size()) != d.dim - 1)
      v.push_back("phase count mismatch at " + id);
    if ((n.kind == Kind::Triangle || n.kind == Kind::LambdaBox) && d.dim != 2)
      v.push_back("qubit-only generator in qutrit diagram at " + id);
    if (n.kind == Kind::LambdaBox && !(n.lambda >= 0 && std::isfinite(n.lambda)))
      v.push_back("negative lambda at " + id);
    if (n.kind == Kind::Triangle && n.power != 1 && n.power != -1) v.push_back("triangle power must be +1/-1 at " + id);
    if (n.kind == Kind::ZWWhite && !(std::isfinite(n.r.real()) && std::isfinite(n.r.imag())))
      v.push_back("non-finite parameter at " + id);
  }
  std::map<std::pair<std::string, int>, int> port_use;
  std::vector<int> in_use(d.n_in, 0), out_use(d.n_out, 0);
  auto see = [&](const Endpoint& e) {
    switch (e.type) {
      case Endpoint::Type::In:
        if (e.index < 0 || e.index >= d.n_in)
          v.push_back("boundary index out of range " + e.str());
        else
          ++in_use[e.index];
        return;
      case Endpoint::Type::Out:
        if (e.index < 0 || e.index >= d.n_out)
          v.push_back("boundary index out of range " + e.str());
        else
          ++out_use[e.index];
        return;
      case Endpoint::Type::NodePort: break;
    }
    auto it = d.nodes.find(e.node);
    if (it == d.nodes.end()) {
      v.push_back("unknown node " + e.node);
      return;
    }
    int pc = port_count(it->second.kind);
    if (pc > 0) {
      if (e.port < 0 || e.port >= pc)
        v.push_back("bad port " + e.str());
      else
        ++port_use[{e.node, e.port}];
    } else if (qutrit_x_oriented(d, it->second) && e.port > 1) {
      v.push_back("bad port " + e.str());
    }
  };
  for (const auto& [a, b] : d.edges) see(a), see(b);
  for (int i = 0; i < d.n_in; ++i)
    if (in_use[i] != 1) v.push_back("boundary in:" + std::to_string(i) + " used " + std::to_string(in_use[i]) + " times");
  for (int i = 0; i < d.n_out; ++i)
    if (out_use[i] != 1)
      v.push_back("boundary out:" + std::to_string(i) + " used " + std::to_string(out_use[i]) + " times");
  for (const auto& [id, n] : d.nodes) {
    int pc = port_count(n.kind);
    for (int p = 0; p < pc; ++p) {
      int c = port_use.count({id, p}) ? port_use[{id, p}] : 0;
      if (c == 0) v.push_back("unconnected port " + id + ":" + std::to_string(p));
      if (c > 1) v.push_back("port used twice " + id + ":" + std::to_string(p));
    }
    if (n.kind == Kind::ZWBlack) {
      int deg = 0;
      for (const auto& [a, b] : d.edges) deg += (a.node == id && !a.is_boundary()) + (b.node == id && !b.is_boundary());
      if (deg == 0) v.push_back("black node without legs " + id);
    }
  }
  return v;
}

inline Calculus calculus_of(Kind k) { return is_zw_kind(k) ? Calculus::ZW : Calculus::ZX; }

inline Diagram from_generator(const Node& node, int n, int m, Calculus calc, int dim) {
  if (n < 0 || m < 0) throw ArityError("negative arity");
  Kind k = node.kind;
  int pc = port_count(k);
  if (pc == 2 && (n != 1 || m != 1)) throw ArityError(std::string(kind_name(k)) + " is 1->1");
  if (pc == 4 && (n != 2 || m != 2)) throw ArityError("ZWCrossing is 2->2");
  if (k == Kind::ZWBlack && n + m == 0) throw ArityError("ZWBlackW needs at least one leg");
  if (calculus_of(k) != calc) throw ArityError("kind/calculus mismatch");
  Diagram d;
  d.calculus = calc, d.dim = dim, d.n_in = n, d.n_out = m;
  std::string id = d.add(node);
  if (pc == 2) {
    d.connect(Endpoint::in(0), Endpoint::at(id, 0));
    d.connect(Endpoint::at(id, 1), Endpoint::out(0));
  } else if (pc == 4) {
    d.connect(Endpoint::in(0), Endpoint::at(id, 0));
    d.connect(Endpoint::in(1), Endpoint::at(id, 1));
    d.connect(Endpoint::at(id, 2), Endpoint::out(0));
    d.connect(Endpoint::at(id, 3), Endpoint::out(1));
  } else {
    bool oriented = dim == 3 && k == Kind::XSpider;
    for (int i = 0; i < n; ++i) d.connect(Endpoint::in(i), Endpoint::at(id, oriented ? 0 : -1));
    for (int i = 0; i < m; ++i) d.connect(Endpoint::at(id, oriented ? 1 : -1), Endpoint::out(i));
  }
  auto bad = validate(d);
  if (!bad.empty()) throw ArityError(bad.front());
  return d;
}

inline Diagram gen(const Node& node, int n, int m, int dim = 2) {
  return from_generator(node, n, m, calculus_of(node.kind), dim);
}

inline Diagram identity(int n, Calculus c = Calculus::ZX, int dim = 2) {
  Diagram d;
  d.calculus = c, d.dim = dim, d.n_in = n, d.n_out = n;
  for (int i = 0; i < n; ++i) d.connect(Endpoint::in(i), Endpoint::out(i));
  return d;
}

inline Diagram empty_diagram(Calculus c = Calculus::ZX, int dim = 2) { return identity(0, c, dim); }

inline Diagram swap_wires(Calculus c = Calculus::ZX, int dim = 2) {
  Diagram d;
  d.calculus = c, d.dim = dim, d.n_in = 2, d.n_out = 2;
  d.connect(Endpoint::in(0), Endpoint::out(1));
  d.connect(Endpoint::in(1), Endpoint::out(0));
  return d;
}

// Wire permutation: input i goes to output perm[i].
inline Diagram permutation(const std::vector<int>& perm, Calculus c = Calculus::ZX, int dim = 2) {
  Diagram d;
  d.calculus = c, d.dim = dim, d.n_in = d.n_out = static_cast<int>(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) d.connect(Endpoint::in(static_cast<int>(i)), Endpoint::out(perm[i]));
  return d;
}

inline Diagram cup(Calculus c = Calculus::ZX, int dim = 2) {
  Diagram d;
  d.calculus = c, d.dim = dim, d.n_out = 2;
  d.connect(Endpoint::out(0), Endpoint::out(1));
  return d;
}

inline Diagram cap(Calculus c = Calculus::ZX, int dim = 2) {
  Diagram d;
  d.calculus = c, d.dim = dim, d.n_in = 2;
  d.connect(Endpoint::in(0), Endpoint::in(1));
  return d;
}

namespace detail {

inline void check_compatible(const Diagram& a, const Diagram& b) {
  if (a.calculus != b.calculus || a.dim != b.dim) throw CompositionError("calculus/dimension mismatch");
}

// Copies the nodes of src into dst under fresh ids and returns the renaming.
inline std::map<std::string, std::string> import_nodes(Diagram& dst, const Diagram& src) {
  std::map<std::string, std::string> ren;
  for (const auto& [id, n] : src.nodes) ren[id] = dst.add(n);
  return ren;
}

inline Endpoint rename(const Endpoint& e, const std::map<std::string, std::string>& ren) {
  if (e.is_boundary()) return e;
  Endpoint r = e;
  r.node = ren.at(e.node);
  return r;
}

}  // namespace detail

inline Diagram compose_par(const Diagram& a, const Diagram& b) {
  detail::check_compatible(a, b);
  Diagram r = a;
  auto ren = detail::import_nodes(r, b);
  for (const auto& [x, y] : b.edges) {
    auto shift = [&](Endpoint e) {
      if (e.type == Endpoint::Type::In) e.index += a.n_in;
      if (e.type == Endpoint::Type::Out) e.index += a.n_out;
      return detail::rename(e, ren);
    };
    r.connect(shift(x), shift(y));
  }
  r.n_in += b.n_in, r.n_out += b.n_out, r.loops += b.loops;
  return r;
}

// Semantics: [[compose_seq(a, b)]] = [[b]] * [[a]].
inline Diagram compose_seq(const Diagram& a, const Diagram& b) {
  detail::check_compatible(a, b);
  if (a.n_out != b.n_in) throw CompositionError("arity mismatch in sequential composition");
  Diagram r;
  r.calculus = a.calculus, r.dim = a.dim, r.n_in = a.n_in, r.n_out = b.n_out;
  r.loops = a.loops + b.loops;
  auto ren_a = detail::import_nodes(r, a);
  auto ren_b = detail::import_nodes(r, b);

  // Every edge end is either final (kept) or a junction slot glued to exactly one other slot.
  struct Seg {
    Endpoint e[2];
    bool junction[2];
    int jidx[2];
  };
  std::vector<Seg> segs;
  int k = a.n_out;
  std::vector<std::pair<int, int>> slot_a(k, {-1, -1}), slot_b(k, {-1, -1});
  for (const auto& [x, y] : a.edges) {
    Seg s{};
    const Endpoint* ends[2] = {&x, &y};
    for (int t = 0; t < 2; ++t) {
      const Endpoint& e = *ends[t];
      s.junction[t] = e.type == Endpoint::Type::Out;
      s.jidx[t] = e.index;
      s.e[t] = s.junction[t] ? e : detail::rename(e, ren_a);
      if (s.junction[t]) slot_a[e.index] = {static_cast<int>(segs.size()), t};
    }
    segs.push_back(s);
  }
  for (const auto& [x, y] : b.edges) {
    Seg s{};
    const Endpoint* ends[2] = {&x, &y};
    for (int t = 0; t < 2; ++t) {
      const Endpoint& e = *ends[t];
      s.junction[t] = e.type == Endpoint::Type::In;
      s.jidx[t] = e.index;
      s.e[t] = s.junction[t] ? e : detail::rename(e, ren_b);
      if (s.junction[t]) slot_b[e.index] = {static_cast<int>(segs.size()), t};
    }
    segs.push_back(s);
  }
  int na = static_cast<int>(a.edges.size());
  for (int i = 0; i < k; ++i)
    if (slot_a[i].first < 0 || slot_b[i].first < 0) throw CompositionError("dangling boundary in composition");
  std::vector<char> used(segs.size(), 0);
  // Follow a chain starting at segment s entered from side t; returns the far final endpoint.
  auto walk = [&](int s, int t) -> Endpoint {
    for (;;) {
      used[s] = 1;
      int o = 1 - t;
      if (!segs[s].junction[o]) return segs[s].e[o];
      int j = segs[s].jidx[o];
      auto nxt = s < na ? slot_b[j] : slot_a[j];
      s = nxt.first, t = nxt.second;
    }
  };
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    if (used[s]) continue;
    for (int t = 0; t < 2; ++t) {
      if (segs[s].junction[t] || used[s]) continue;
      Endpoint far = walk(s, t);
      r.connect(segs[s].e[t], far);
    }
  }
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    if (used[s]) continue;
    ++r.loops;
    int cur = s, t = 0;
    while (!used[cur]) {
      used[cur] = 1;
      int o = 1 - t;
      int j = segs[cur].jidx[o];
      auto nxt = cur < na ? slot_b[j] : slot_a[j];
      cur = nxt.first, t = nxt.second;
    }
  }
  return r;
}

inline Diagram seq(std::initializer_list<Diagram> ds) {
  auto it = ds.begin();
  Diagram r = *it++;
  for (; it != ds.end(); ++it) r = compose_seq(r, *it);
  return r;
}

inline Diagram par(std::initializer_list<Diagram> ds) {
  auto it = ds.begin();
  Diagram r = *it++;
  for (; it != ds.end(); ++it) r = compose_par(r, *it);
  return r;
}

// Places a 1->1 or k->k gadget on wires [at, at+k) of an n-wire identity.
inline Diagram on_wires(const Diagram& g, int at, int n) {
  Diagram r = identity(at, g.calculus, g.dim);
  r = compose_par(r, g);
  return compose_par(r, identity(n - at - g.n_in, g.calculus, g.dim));
}

inline std::size_t degree(const Diagram& d, const std::string& id) {
  std::size_t deg = 0;
  for (const auto& [a, b] : d.edges) deg += (!a.is_boundary() && a.node == id) + (!b.is_boundary() && b.node == id);
  return deg;
}

// Replaces nodes by gadget diagrams. For each node, gadget(node, n, m) returns a diagram whose
// inputs stand for the node's first n legs and outputs for the remaining m, or nullopt to keep
// the node. Legs of port-sensitive nodes are taken in port order; unnumbered spider legs are all
// inputs, in edge order; oriented qutrit X legs split by port.
using GadgetFn = std::function<std::optional<Diagram>(const Node&, int, int)>;

inline Diagram splice(const Diagram& d, const GadgetFn& gadget, Calculus target) {
  Diagram r;
  r.calculus = target, r.dim = d.dim, r.n_in = d.n_in, r.n_out = d.n_out, r.loops = d.loops;

  // legs[id] lists (edge index, side) per leg, ordered as gadget boundaries.
  std::map<std::string, std::vector<std::pair<int, int>>, IdLess> legs;
  std::map<std::string, int, IdLess> n_in_legs;
  for (const auto& [id, n] : d.nodes) {
    std::vector<std::pair<int, int>> ins, outs;
    int pc = port_count(n.kind);
    std::vector<std::pair<int, int>> by_port(pc, {-1, -1});
    for (int i = 0; i < static_cast<int>(d.edges.size()); ++i) {
      const Endpoint* e[2] = {&d.edges[i].first, &d.edges[i].second};
      for (int t = 0; t < 2; ++t) {
        if (e[t]->is_boundary() || e[t]->node != id) continue;
        if (pc > 0) by_port.at(e[t]->port) = {i, t};
        else if (qutrit_x_oriented(d, n) && e[t]->port != 0) outs.push_back({i, t});
        else ins.push_back({i, t});
      }
    }
    if (pc == 2) ins = {by_port[0]}, outs = {by_port[1]};
    if (pc == 4) ins = {by_port[0], by_port[1]}, outs = {by_port[2], by_port[3]};
    n_in_legs[id] = static_cast<int>(ins.size());
    ins.insert(ins.end(), outs.begin(), outs.end());
    legs[id] = ins;
  }

  struct Seg {
    Endpoint e[2];
    int slot[2] = {-1, -1};
  };
  std::vector<Seg> segs;
  // slot -> (segment, side) for its two appearances.
  std::vector<std::array<std::pair<int, int>, 2>> where;
  std::map<std::pair<int, int>, int> slot_of_edge_end;
  std::map<std::string, std::map<std::string, std::string>> ren;

  for (const auto& [id, n] : d.nodes) {
    int k = static_cast<int>(legs[id].size()), ni = n_in_legs[id];
    auto g = gadget(n, ni, k - ni);
    if (!g) {
      std::string nid = r.add(n);
      for (int j = 0; j < k; ++j) {
        auto [ei, side] = legs[id][j];
        const Endpoint& orig = side ? d.edges[ei].second : d.edges[ei].first;
        Seg s;
        s.e[0] = Endpoint::at(nid, orig.port);
        s.slot[1] = static_cast<int>(where.size());
        where.push_back({{{static_cast<int>(segs.size()), 1}, {-1, -1}}});
        slot_of_edge_end[{ei, side}] = s.slot[1];
        segs.push_back(s);
      }
      continue;
    }
    if (g->n_in != ni || g->n_out != k - ni) throw ArityError("gadget arity does not match node legs");
    r.loops += g->loops;
    auto rn = detail::import_nodes(r, *g);
    int base = static_cast<int>(where.size());
    for (int j = 0; j < k; ++j) {
      where.push_back({{{-1, -1}, {-1, -1}}});
      slot_of_edge_end[legs[id][j]] = base + j;
    }
    for (const auto& [x, y] : g->edges) {
      Seg s;
      const Endpoint* e[2] = {&x, &y};
      for (int t = 0; t < 2; ++t) {
        if (e[t]->type == Endpoint::Type::In) s.slot[t] = base + e[t]->index;
        else if (e[t]->type == Endpoint::Type::Out) s.slot[t] = base + ni + e[t]->index;
        else s.e[t] = detail::rename(*e[t], rn);
        if (s.slot[t] >= 0) where[s.slot[t]][0] = {static_cast<int>(segs.size()), t};
      }
      segs.push_back(s);
    }
  }
  for (int i = 0; i < static_cast<int>(d.edges.size()); ++i) {
    Seg s;
    const Endpoint* e[2] = {&d.edges[i].first, &d.edges[i].second};
    for (int t = 0; t < 2; ++t) {
      if (e[t]->is_boundary()) {
        s.e[t] = *e[t];
        continue;
      }
      s.slot[t] = slot_of_edge_end.at({i, t});
      where[s.slot[t]][1] = {static_cast<int>(segs.size()), t};
    }
    segs.push_back(s);
  }

  std::vector<char> used(segs.size(), 0);
  auto other = [&](int slot, std::pair<int, int> from) { return where[slot][0] == from ? where[slot][1] : where[slot][0]; };
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    for (int t = 0; t < 2; ++t) {
      if (used[s] || segs[s].slot[t] >= 0) continue;
      int cur = s, side = t;
      for (;;) {
        used[cur] = 1;
        int o = 1 - side;
        if (segs[cur].slot[o] < 0) {
          r.connect(segs[s].e[t], segs[cur].e[o]);
          break;
        }
        auto nxt = other(segs[cur].slot[o], {cur, o});
        cur = nxt.first, side = nxt.second;
      }
    }
  }
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    if (used[s]) continue;
    ++r.loops;
    int cur = s, side = 0;
    while (!used[cur]) {
      used[cur] = 1;
      int o = 1 - side;
      auto nxt = other(segs[cur].slot[o], {cur, o});
      cur = nxt.first, side = nxt.second;
    }
  }
  return r;
}

}  // namespace zxw
