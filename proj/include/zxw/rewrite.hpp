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

// Graph-level rule application and a small simplification pipeline.
//
// Matching is done by dedicated matchers for the rules the pipeline uses:
// spider fusion (S1), identity removal (S2, S3), self-loop removal (plain
// loops, and Hadamard loops as in lemma3), the Hopf law, and Hadamard
// cancellation (H2). Other catalog rules have no matcher and yield no matches.

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zxw/rules.hpp"

namespace zxw {

struct EmbeddingInvalid : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Pass { Fusion, Identity, SelfLoop, Hopf, Hadamard };

inline const std::vector<Pass>& default_passes() {
  static const std::vector<Pass> p = {Pass::Fusion, Pass::Identity, Pass::SelfLoop, Pass::Hopf, Pass::Hadamard};
  return p;
}

inline const char* pass_name(Pass p) {
  switch (p) {
    case Pass::Fusion: return "fusion";
    case Pass::Identity: return "identity";
    case Pass::SelfLoop: return "self-loop";
    case Pass::Hopf: return "hopf";
    case Pass::Hadamard: return "hadamard";
  }
  return "?";
}

inline Pass parse_pass(const std::string& s) {
  for (Pass p : default_passes())
    if (s == pass_name(p)) return p;
  throw std::invalid_argument("unknown pass: " + s);
}

struct MatchEmbedding {
  std::string rule;
  Pass pass = Pass::Fusion;
  // Pattern node id -> host node id. Pattern ids are "a", "b" (and "h" for a Hadamard in a loop).
  std::vector<std::pair<std::string, std::string>> nodes;
  // Host edges the pattern covers, by value; they pin the embedding to the host it came from.
  std::vector<Edge> edges;
  // Pattern boundary -> host endpoint (identity removal only).
  std::vector<std::pair<std::string, Endpoint>> boundary;
  // Snapshot of matched host nodes.
  std::vector<Node> snapshot;

  std::string host(const std::string& pattern) const {
    for (const auto& [p, h] : nodes)
      if (p == pattern) return h;
    throw EmbeddingInvalid("pattern node " + pattern + " is not mapped");
  }
};

namespace detail {

inline bool touches(const Endpoint& e, const std::string& id) { return !e.is_boundary() && e.node == id; }

inline bool qubit_spider(const Diagram& d, const Node& n) { return d.dim == 2 && is_spider(n.kind); }

inline int h_order(const Diagram& d) { return d.dim == 2 ? 2 : 4; }

inline Endpoint other_end(const Edge& e, const std::string& id) { return touches(e.first, id) ? e.second : e.first; }

inline Endpoint end_at(const Edge& e, const std::string& id) { return touches(e.first, id) ? e.first : e.second; }

inline MatchEmbedding make_match(const Diagram& d, Pass pass, std::vector<std::pair<std::string, std::string>> nodes,
                                 std::vector<Edge> edges) {
  MatchEmbedding m;
  m.pass = pass;
  m.nodes = std::move(nodes);
  m.edges = std::move(edges);
  for (const auto& [p, h] : m.nodes) m.snapshot.push_back(d.nodes.at(h));
  return m;
}

// Fusion of two spiders of one colour joined by an edge. Qutrit X spiders fuse only output-to-input.
inline std::vector<MatchEmbedding> fusion_matches(const Diagram& d) {
  std::vector<MatchEmbedding> out;
  if (d.calculus != Calculus::ZX) return out;
  for (const auto& e : d.edges) {
    if (e.first.is_boundary() || e.second.is_boundary() || e.first.node == e.second.node) continue;
    const Node& x = d.nodes.at(e.first.node);
    const Node& y = d.nodes.at(e.second.node);
    if (!is_spider(x.kind) || x.kind != y.kind) continue;
    if (qutrit_x_oriented(d, x) && e.first.port == e.second.port) continue;
    std::string a = e.first.node, b = e.second.node;
    if (IdLess{}(b, a)) std::swap(a, b);
    bool dup = false;
    for (const auto& m : out) dup |= m.nodes[0].second == a && m.nodes[1].second == b;
    if (!dup) out.push_back(make_match(d, Pass::Fusion, {{"a", a}, {"b", b}}, {e}));
  }
  return out;
}

// A phase-free spider with exactly two legs.
inline std::vector<MatchEmbedding> identity_matches(const Diagram& d, std::optional<Kind> only = std::nullopt) {
  std::vector<MatchEmbedding> out;
  if (d.calculus != Calculus::ZX) return out;
  for (const auto& [id, n] : d.nodes) {
    if (!is_spider(n.kind) || (only && n.kind != *only)) continue;
    bool zero = std::all_of(n.phases.begin(), n.phases.end(), [](const Phase& p) { return p.is_zero(); });
    if (!zero || degree(d, id) != 2) continue;
    std::vector<Edge> es;
    for (const auto& e : d.edges)
      if (touches(e.first, id) || touches(e.second, id)) es.push_back(e);
    if (qutrit_x_oriented(d, n)) {
      std::vector<int> ports;
      for (const auto& e : es) {
        if (touches(e.first, id)) ports.push_back(e.first.port);
        if (touches(e.second, id)) ports.push_back(e.second.port);
      }
      std::sort(ports.begin(), ports.end());
      if (ports != std::vector<int>{0, 1}) continue;
    }
    MatchEmbedding m = make_match(d, Pass::Identity, {{"a", id}}, es);
    if (es.size() == 2) {
      m.boundary = {{"in", other_end(es[0], id)}, {"out", other_end(es[1], id)}};
    }
    out.push_back(std::move(m));
  }
  return out;
}

// A plain self-loop on a spider, or (qubit) a Hadamard whose two ports both go to the same spider.
inline std::vector<MatchEmbedding> self_loop_matches(const Diagram& d) {
  std::vector<MatchEmbedding> out;
  if (d.calculus != Calculus::ZX) return out;
  for (const auto& e : d.edges) {
    if (e.first.is_boundary() || e.second.is_boundary() || e.first.node != e.second.node) continue;
    const Node& n = d.nodes.at(e.first.node);
    if (!is_spider(n.kind)) continue;
    if (qutrit_x_oriented(d, n) && e.first.port == e.second.port) continue;
    out.push_back(make_match(d, Pass::SelfLoop, {{"a", e.first.node}}, {e}));
  }
  if (d.dim == 2)
    for (const auto& [hid, h] : d.nodes) {
      if (h.kind != Kind::Hadamard || h.power % 2 == 0) continue;
      std::vector<Edge> es;
      for (const auto& e : d.edges)
        if (touches(e.first, hid) || touches(e.second, hid)) es.push_back(e);
      if (es.size() != 2) continue;
      Endpoint p = other_end(es[0], hid), q = other_end(es[1], hid);
      if (p.is_boundary() || q.is_boundary() || p.node != q.node || p.node == hid) continue;
      if (!qubit_spider(d, d.nodes.at(p.node))) continue;
      out.push_back(make_match(d, Pass::SelfLoop, {{"a", p.node}, {"h", hid}}, es));
    }
  std::sort(out.begin(), out.end(), [](const MatchEmbedding& x, const MatchEmbedding& y) {
    return IdLess{}(x.nodes[0].second, y.nodes[0].second);
  });
  return out;
}

// A qubit Z spider and X spider joined by two or more parallel edges.
inline std::vector<MatchEmbedding> hopf_matches(const Diagram& d) {
  std::vector<MatchEmbedding> out;
  if (d.calculus != Calculus::ZX || d.dim != 2) return out;
  for (const auto& [zid, z] : d.nodes) {
    if (z.kind != Kind::ZSpider) continue;
    std::map<std::string, std::vector<Edge>, IdLess> to_x;
    for (const auto& e : d.edges) {
      if (!(touches(e.first, zid) || touches(e.second, zid))) continue;
      Endpoint o = other_end(e, zid);
      if (o.is_boundary() || d.nodes.at(o.node).kind != Kind::XSpider) continue;
      to_x[o.node].push_back(e);
    }
    for (const auto& [xid, es] : to_x)
      if (es.size() >= 2) out.push_back(make_match(d, Pass::Hopf, {{"a", zid}, {"b", xid}}, {es[0], es[1]}));
  }
  return out;
}

// A Hadamard whose power is trivial, or two Hadamards joined by a wire.
inline std::vector<MatchEmbedding> hadamard_matches(const Diagram& d) {
  std::vector<MatchEmbedding> out;
  if (d.calculus != Calculus::ZX) return out;
  int ord = h_order(d);
  for (const auto& [id, n] : d.nodes) {
    if (n.kind != Kind::Hadamard) continue;
    std::vector<Edge> es;
    for (const auto& e : d.edges)
      if (touches(e.first, id) || touches(e.second, id)) es.push_back(e);
    if (((n.power % ord) + ord) % ord == 0) {
      MatchEmbedding m = make_match(d, Pass::Hadamard, {{"a", id}}, es);
      out.push_back(std::move(m));
      continue;
    }
    for (const auto& e : es) {
      Endpoint o = other_end(e, id);
      if (o.is_boundary() || o.node == id || d.nodes.at(o.node).kind != Kind::Hadamard) continue;
      if (!IdLess{}(id, o.node)) continue;
      out.push_back(make_match(d, Pass::Hadamard, {{"a", id}, {"b", o.node}}, {e}));
      break;
    }
  }
  return out;
}

inline std::vector<MatchEmbedding> pass_matches(const Diagram& d, Pass p) {
  switch (p) {
    case Pass::Fusion: return fusion_matches(d);
    case Pass::Identity: return identity_matches(d);
    case Pass::SelfLoop: return self_loop_matches(d);
    case Pass::Hopf: return hopf_matches(d);
    case Pass::Hadamard: return hadamard_matches(d);
  }
  return {};
}

inline void erase_edge(Diagram& d, const Edge& e) {
  auto it = std::find(d.edges.begin(), d.edges.end(), e);
  if (it == d.edges.end()) throw EmbeddingInvalid("matched edge no longer present");
  d.edges.erase(it);
}

inline void validate_embedding(const Diagram& d, const MatchEmbedding& m) {
  for (std::size_t i = 0; i < m.nodes.size(); ++i) {
    auto it = d.nodes.find(m.nodes[i].second);
    if (it == d.nodes.end() || !(it->second == m.snapshot.at(i)))
      throw EmbeddingInvalid("host node " + m.nodes[i].second + " changed since matching");
  }
  std::vector<Edge> pool = d.edges;
  for (const auto& e : m.edges) {
    auto it = std::find(pool.begin(), pool.end(), e);
    if (it == pool.end()) throw EmbeddingInvalid("matched edge no longer present");
    pool.erase(it);
  }
}

inline Endpoint renamed(Endpoint e, const std::string& from, const std::string& to) {
  if (touches(e, from)) e.node = to;
  return e;
}

// Removes a two-legged node and joins what it was attached to.
inline void remove_as_wire(Diagram& d, const std::string& id) {
  std::vector<Edge> es;
  for (const auto& e : d.edges)
    if (touches(e.first, id) || touches(e.second, id)) es.push_back(e);
  for (const auto& e : es) erase_edge(d, e);
  d.nodes.erase(id);
  if (es.size() == 1) {
    ++d.loops;
    return;
  }
  d.connect(other_end(es[0], id), other_end(es[1], id));
}

}  // namespace detail

// Which pass implements a catalog rule, if any.
inline std::optional<Pass> pass_for_rule(const RewriteRule& rule) {
  if (rule.calculus != Calculus::ZX) return std::nullopt;
  const std::string& n = rule.name;
  if (n == "S1") return Pass::Fusion;
  if (n == "S2" || n == "S3") return Pass::Identity;
  if (n == "lemma3") return Pass::SelfLoop;
  if (n == "hopf" && rule.dim == 2) return Pass::Hopf;
  if (n == "H2") return Pass::Hadamard;
  return std::nullopt;
}

inline std::vector<MatchEmbedding> find_matches(const Diagram& d, const RewriteRule& rule) {
  if (rule.dim != d.dim || rule.calculus != d.calculus) return {};
  auto p = pass_for_rule(rule);
  if (!p) return {};
  std::vector<MatchEmbedding> ms;
  if (*p == Pass::Identity) ms = detail::identity_matches(d, rule.name == "S2" ? Kind::ZSpider : Kind::XSpider);
  else ms = detail::pass_matches(d, *p);
  if (rule.name == "lemma3")
    ms.erase(std::remove_if(ms.begin(), ms.end(), [](const MatchEmbedding& m) { return m.nodes.size() != 2; }), ms.end());
  for (auto& m : ms) m.rule = rule.name;
  return ms;
}

inline Diagram apply_match(const Diagram& host, const MatchEmbedding& m) {
  detail::validate_embedding(host, m);
  Diagram d = host;
  switch (m.pass) {
    case Pass::Fusion: {
      std::string a = m.host("a"), b = m.host("b");
      detail::erase_edge(d, m.edges[0]);
      Node& na = d.nodes.at(a);
      const Node& nb = d.nodes.at(b);
      for (std::size_t i = 0; i < na.phases.size(); ++i) na.phases[i] = na.phases[i] + nb.phases[i];
      for (auto& e : d.edges) e = {detail::renamed(e.first, b, a), detail::renamed(e.second, b, a)};
      d.nodes.erase(b);
      break;
    }
    case Pass::Identity: detail::remove_as_wire(d, m.host("a")); break;
    case Pass::SelfLoop: {
      if (m.nodes.size() == 1) {
        detail::erase_edge(d, m.edges[0]);
        break;
      }
      for (const auto& e : m.edges) detail::erase_edge(d, e);
      d.nodes.erase(m.host("h"));
      Node& s = d.nodes.at(m.host("a"));
      s.phases[0] = s.phases[0] + build::pi();
      break;
    }
    case Pass::Hopf:
      for (const auto& e : m.edges) detail::erase_edge(d, e);
      break;
    case Pass::Hadamard: {
      std::string a = m.host("a");
      if (m.nodes.size() == 1) {
        detail::remove_as_wire(d, a);
        break;
      }
      std::string b = m.host("b");
      const Edge& join = m.edges[0];
      detail::erase_edge(d, join);
      // The merged box keeps a's free port and b's free port, as input and output.
      int a_free = 1 - detail::end_at(join, a).port, b_free = 1 - detail::end_at(join, b).port;
      Node merged = d.nodes.at(a);
      merged.power = ((merged.power + d.nodes.at(b).power) % detail::h_order(d) + detail::h_order(d)) % detail::h_order(d);
      for (auto& e : d.edges)
        for (Endpoint* p : {&e.first, &e.second}) {
          if (detail::touches(*p, a) && p->port == a_free) p->port = 0;
          else if (detail::touches(*p, b) && p->port == b_free) *p = Endpoint::at(a, 1);
        }
      d.nodes.at(a) = merged;
      d.nodes.erase(b);
      if (merged.power == 0) detail::remove_as_wire(d, a);
      break;
    }
  }
  return d;
}

inline Diagram apply_at(const Diagram& d, const RewriteRule& rule, const MatchEmbedding& m) {
  if (m.rule != rule.name) throw EmbeddingInvalid("embedding was made for rule " + m.rule);
  return apply_match(d, m);
}

// Lexicographic termination measure.
inline std::tuple<std::size_t, std::size_t, std::size_t> rewrite_measure(const Diagram& d) {
  std::size_t h = 0;
  for (const auto& [id, n] : d.nodes) h += n.kind == Kind::Hadamard;
  return {d.nodes.size(), h, d.edges.size()};
}

struct SimplifyResult {
  Diagram diagram;
  std::size_t steps = 0;
  std::size_t bound = 0;
  std::vector<std::string> trace;  // pass name per step
};

inline SimplifyResult simplify_traced(const Diagram& d, const std::vector<Pass>& passes = default_passes()) {
  auto [n0, h0, e0] = rewrite_measure(d);
  std::size_t m0 = n0 + h0 + e0 + 1;
  SimplifyResult r{d, 0, m0 * m0, {}};
  for (;;) {
    bool applied = false;
    for (Pass p : passes) {
      auto ms = detail::pass_matches(r.diagram, p);
      if (ms.empty()) continue;
      auto before = rewrite_measure(r.diagram);
      r.diagram = apply_match(r.diagram, ms.front());
      if (!(rewrite_measure(r.diagram) < before)) throw std::logic_error(std::string("pass did not decrease the measure: ") + pass_name(p));
      r.trace.push_back(pass_name(p));
      if (++r.steps > r.bound) throw std::logic_error("simplify exceeded its step bound");
      applied = true;
      break;
    }
    if (!applied) return r;
  }
}

inline Diagram simplify(const Diagram& d, const std::vector<Pass>& passes = default_passes()) {
  return simplify_traced(d, passes).diagram;
}

}  // namespace zxw
