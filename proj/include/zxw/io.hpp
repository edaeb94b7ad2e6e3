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

// JSON diagram files.
//
//   {"version": 1, "calculus": "zx", "dimension": 2,
//    "nodes": [{"id": "n0", "kind": "Z", "phases": [{"pi_num": 1, "pi_den": 4}]}, ...],
//    "edges": [["in:0", "n0"], ["n0", "n1:0"], ...],
//    "inputs": ["in:0"], "outputs": ["out:0"]}
//
// Endpoints are "in:i", "out:j", "node" or "node:port". Each entry of "inputs"/"outputs" is either the boundary
// name itself (the wire is then listed in "edges") or the node endpoint the boundary attaches to.
// A qutrit GS-LC diagram uses {"version": 1, "gslc": {"n": 3, "edges": [[0, 1, 2]], "ops": [0, 0, 5]}}.

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "zxw/diagram.hpp"
#include "zxw/qutrit.hpp"

namespace zxw::io {

using Json = nlohmann::ordered_json;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Json phase_to_json(const Phase& p) {
  if (p.exact) return Json{{"pi_num", p.k}, {"pi_den", p.m}};
  return p.rad;
}

inline Phase phase_from_json(const Json& j) {
  if (j.is_number()) return Phase::radians(j.get<double>());
  if (j.is_object() && j.contains("pi_num") && j.contains("pi_den") && j["pi_num"].is_number_integer() &&
      j["pi_den"].is_number_integer())
    return Phase::turn(j["pi_num"].get<std::int64_t>(), j["pi_den"].get<std::int64_t>());
  throw FormatError("bad phase " + j.dump());
}

inline Kind kind_from_name(const std::string& s) {
  for (Kind k : {Kind::ZSpider, Kind::XSpider, Kind::Hadamard, Kind::Triangle, Kind::LambdaBox, Kind::ZWWhite,
                 Kind::ZWBlack, Kind::ZWCrossing, Kind::ZWPi})
    if (s == kind_name(k)) return k;
  throw FormatError("unknown node kind " + s);
}

inline int parse_int(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw FormatError("bad " + what + " " + s);
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw FormatError("bad " + what + " " + s);
  }
}

inline Endpoint endpoint_from_string(const std::string& s) {
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  if (head.empty()) throw FormatError("bad endpoint \"" + s + "\"");
  if (colon == std::string::npos) return Endpoint::at(head);
  int v = parse_int(s.substr(colon + 1), "endpoint index in");
  if (head == "in") return Endpoint::in(v);
  if (head == "out") return Endpoint::out(v);
  return Endpoint::at(head, v);
}

inline Endpoint endpoint_from_json(const Json& j) {
  if (!j.is_string()) throw FormatError("endpoint must be a string: " + j.dump());
  return endpoint_from_string(j.get<std::string>());
}

inline Json ring_to_json(const RingElement& r) {
  Json a = Json::array();
  for (const auto& c : r.c) a.push_back(Json::array({c.numerator(), c.exponent()}));
  return a;
}

inline RingElement ring_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw FormatError("r_exact needs four [num, exp] pairs");
  RingElement r;
  for (int i = 0; i < 4; ++i) {
    const Json& p = j[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_unsigned())
      throw FormatError("bad dyadic " + p.dump());
    r.c[i] = Dyadic(p[0].get<std::int64_t>(), p[1].get<unsigned>());
  }
  return r;
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j[key];
}

}  // namespace detail

inline Json to_json(const Diagram& d) {
  Json j;
  j["version"] = 1;
  j["calculus"] = d.calculus == Calculus::ZX ? "zx" : "zw";
  j["dimension"] = d.dim;
  Json nodes = Json::array();
  for (const auto& [id, n] : d.nodes) {
    Json e{{"id", id}, {"kind", kind_name(n.kind)}};
    switch (n.kind) {
      case Kind::ZSpider:
      case Kind::XSpider: {
        Json ph = Json::array();
        for (const auto& p : n.phases) ph.push_back(detail::phase_to_json(p));
        e["phases"] = ph;
        break;
      }
      case Kind::Hadamard:
      case Kind::Triangle: e["power"] = n.power; break;
      case Kind::LambdaBox: e["lambda"] = n.lambda; break;
      case Kind::ZWWhite:
        e["r"] = Json::array({n.r.real(), n.r.imag()});
        if (n.exact_r) e["r_exact"] = detail::ring_to_json(*n.exact_r);
        break;
      default: break;
    }
    nodes.push_back(e);
  }
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& [a, b] : d.edges) edges.push_back(Json::array({a.str(), b.str()}));
  j["edges"] = edges;
  Json ins = Json::array(), outs = Json::array();
  for (int i = 0; i < d.n_in; ++i) ins.push_back(Endpoint::in(i).str());
  for (int i = 0; i < d.n_out; ++i) outs.push_back(Endpoint::out(i).str());
  j["inputs"] = ins;
  j["outputs"] = outs;
  if (d.loops) j["loops"] = d.loops;
  return j;
}

inline Diagram from_json(const Json& j) {
  using detail::field;
  if (!j.is_object()) throw FormatError("diagram file must be a JSON object");
  if (field(j, "version") != 1) throw FormatError("unsupported version " + j["version"].dump());
  Diagram d;
  std::string calc = field(j, "calculus").is_string() ? j["calculus"].get<std::string>() : "";
  if (calc == "zx") d.calculus = Calculus::ZX;
  else if (calc == "zw") d.calculus = Calculus::ZW;
  else throw FormatError("calculus must be \"zx\" or \"zw\"");
  if (!field(j, "dimension").is_number_integer()) throw FormatError("dimension must be an integer");
  d.dim = j["dimension"].get<int>();
  if (d.dim != 2 && d.dim != 3) throw FormatError("dimension must be 2 or 3");

  if (!field(j, "nodes").is_array()) throw FormatError("nodes must be a list");
  for (const auto& e : j["nodes"]) {
    if (!field(e, "id").is_string()) throw FormatError("node id must be a string");
    std::string id = e["id"].get<std::string>();
    if (id.empty() || id.find(':') != std::string::npos || id == "in" || id == "out")
      throw FormatError("bad node id \"" + id + "\"");
    if (d.nodes.count(id)) throw FormatError("duplicate node id " + id);
    if (!field(e, "kind").is_string()) throw FormatError("node kind must be a string");
    Node n;
    n.kind = detail::kind_from_name(e["kind"].get<std::string>());
    try {
      switch (n.kind) {
        case Kind::ZSpider:
        case Kind::XSpider:
          if (!field(e, "phases").is_array()) throw FormatError("phases must be a list");
          for (const auto& p : e["phases"]) n.phases.push_back(detail::phase_from_json(p));
          break;
        case Kind::Hadamard:
        case Kind::Triangle:
          if (e.contains("power")) n.power = e["power"].get<int>();
          break;
        case Kind::LambdaBox: n.lambda = field(e, "lambda").get<double>(); break;
        case Kind::ZWWhite: {
          const Json& r = field(e, "r");
          if (!r.is_array() || r.size() != 2) throw FormatError("r must be [re, im]");
          n.r = Complex(r[0].get<double>(), r[1].get<double>());
          if (e.contains("r_exact")) n.exact_r = detail::ring_from_json(e["r_exact"]);
          break;
        }
        default: break;
      }
    } catch (const nlohmann::json::exception& ex) {
      throw FormatError("bad parameter on node " + id + ": " + ex.what());
    }
    d.nodes.emplace(id, n);
  }

  if (!field(j, "edges").is_array()) throw FormatError("edges must be a list");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw FormatError("edge must be a pair of endpoints: " + e.dump());
    d.connect(detail::endpoint_from_json(e[0]), detail::endpoint_from_json(e[1]));
  }

  auto boundary = [&](const char* key, Endpoint::Type type) {
    if (!field(j, key).is_array()) throw FormatError(std::string(key) + " must be a list");
    int count = 0;
    for (const auto& e : j[key]) {
      Endpoint ep = detail::endpoint_from_json(e);
      Endpoint self = type == Endpoint::Type::In ? Endpoint::in(count) : Endpoint::out(count);
      if (ep.is_boundary() && ep.type == type) {
        if (ep.index != count) throw FormatError(std::string(key) + " must be listed in order");
      } else {
        d.connect(self, ep);
      }
      ++count;
    }
    return count;
  };
  d.n_in = boundary("inputs", Endpoint::Type::In);
  d.n_out = boundary("outputs", Endpoint::Type::Out);
  if (j.contains("loops")) {
    if (!j["loops"].is_number_integer() || j["loops"].get<int>() < 0) throw FormatError("loops must be >= 0");
    d.loops = j["loops"].get<int>();
  }
  auto bad = validate(d);
  if (!bad.empty()) throw FormatError(bad.front());
  return d;
}

inline std::string print(const Diagram& d) { return to_json(d).dump(2) + "\n"; }

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

inline Diagram parse(const std::string& text) { return from_json(parse_text(text)); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

inline Diagram load(const std::string& path) { return parse(read_file(path)); }

// ---- qutrit GS-LC files ----

inline bool is_gslc(const Json& j) { return j.is_object() && j.contains("gslc"); }

inline Json gslc_to_json(const qutrit::GSLCDiagram& g) {
  Json edges = Json::array();
  for (int u = 0; u < g.graph.n; ++u)
    for (int v = u + 1; v < g.graph.n; ++v)
      if (int w = g.graph.weight(u, v)) edges.push_back(Json::array({u, v, w}));
  return Json{{"version", 1}, {"gslc", {{"n", g.graph.n}, {"edges", edges}, {"ops", g.ops}}}};
}

inline qutrit::GSLCDiagram gslc_from_json(const Json& j) {
  using detail::field;
  if (field(j, "version") != 1) throw FormatError("unsupported version");
  const Json& g = field(j, "gslc");
  try {
    int n = field(g, "n").get<int>();
    if (n < 0) throw FormatError("n must be >= 0");
    qutrit::GSLCDiagram d;
    d.graph = qutrit::WeightedGraph(n);
    for (const auto& e : field(g, "edges")) {
      if (!e.is_array() || e.size() != 3) throw FormatError("gslc edge must be [u, v, weight]");
      int u = e[0].get<int>(), v = e[1].get<int>(), w = e[2].get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n || u == v || w < 0 || w > 2) throw FormatError("bad gslc edge " + e.dump());
      d.graph.set_edge(u, v, w);
    }
    d.ops = field(g, "ops").get<std::vector<int>>();
    if (static_cast<int>(d.ops.size()) != n) throw FormatError("ops must have one entry per vertex");
    for (int op : d.ops)
      if (op < 0 || op >= 216) throw FormatError("op index out of range");
    return d;
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("bad gslc file: ") + ex.what());
  }
}

}  // namespace zxw::io
