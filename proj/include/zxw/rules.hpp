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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zxw/build.hpp"
#include "zxw/euler.hpp"
#include "zxw/semantics.hpp"
#include "zxw/translate.hpp"

namespace zxw {

enum class RuleSet { QubitTraditional, ZxFullExtended, CliffordT, Zw, Qutrit, TwoQubitCT, DerivedLemma };

inline const std::vector<RuleSet>& all_rule_sets() {
  static const std::vector<RuleSet> v = {RuleSet::QubitTraditional, RuleSet::ZxFullExtended, RuleSet::CliffordT,
                                         RuleSet::Zw,          RuleSet::Qutrit,       RuleSet::TwoQubitCT,
                                         RuleSet::DerivedLemma};
  return v;
}

inline const char* rule_set_name(RuleSet s) {
  switch (s) {
    case RuleSet::QubitTraditional: return "qubit-traditional";
    case RuleSet::ZxFullExtended: return "zx-full-extended";
    case RuleSet::CliffordT: return "clifford-t";
    case RuleSet::Zw: return "zw";
    case RuleSet::Qutrit: return "qutrit";
    case RuleSet::TwoQubitCT: return "two-qubit-ct";
    case RuleSet::DerivedLemma: return "derived-lemma";
  }
  return "?";
}

inline RuleSet parse_rule_set(const std::string& s) {
  for (RuleSet r : all_rule_sets())
    if (s == rule_set_name(r)) return r;
  throw std::invalid_argument("unknown rule set: " + s);
}

enum class ParamDomain { Angle, AnglePi4, NonnegReal, NonnegDyadic, Complex, Z3Pair };

struct ParamSpec {
  std::string name;
  ParamDomain domain;
};

struct ParamValue {
  ParamDomain domain = ParamDomain::Angle;
  Phase phase;   // Angle, AnglePi4
  double real = 0;  // NonnegReal, NonnegDyadic
  Complex z;     // Complex
  int a = 0, b = 0;  // Z3Pair

  std::string str() const {
    char buf[96];
    switch (domain) {
      case ParamDomain::Angle:
      case ParamDomain::AnglePi4:
        if (phase.exact) std::snprintf(buf, sizeof buf, "%lld*pi/%lld", static_cast<long long>(phase.k), static_cast<long long>(phase.m));
        else std::snprintf(buf, sizeof buf, "%.12g", phase.value());
        return buf;
      case ParamDomain::NonnegReal:
      case ParamDomain::NonnegDyadic: std::snprintf(buf, sizeof buf, "%.12g", real); return buf;
      case ParamDomain::Complex: return format_complex(z);
      case ParamDomain::Z3Pair: std::snprintf(buf, sizeof buf, "(%d,%d)", a, b); return buf;
    }
    return "?";
  }
};

using Params = std::vector<ParamValue>;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct RewriteRule {
  std::string name;
  RuleSet rule_set = RuleSet::QubitTraditional;
  int dim = 2;
  Calculus calculus = Calculus::ZX;
  std::vector<ParamSpec> params;
  std::function<std::pair<Diagram, Diagram>(const Params&)> build;
  bool scalar_exact = false;
  std::function<bool(const Params&)> side_condition;  // empty: no condition
};

struct SoundnessFailure {
  std::string params;
  std::string lhs_digest, rhs_digest;
  double deviation = 0;
};

struct SoundnessReport {
  std::string rule;
  int samples = 0;
  std::vector<SoundnessFailure> failures;
  std::vector<Complex> scalars;

  bool pass() const { return failures.empty(); }
};

inline std::string matrix_digest(const Matrix& m) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(m.rows), mix(m.cols);
  for (const auto& v : m.a) {
    mix(static_cast<std::uint64_t>(std::llround(v.real() * 1e9)));
    mix(static_cast<std::uint64_t>(std::llround(v.imag() * 1e9)));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace detail {

inline std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

inline ParamValue sample_param(ParamDomain dom, int sample, std::mt19937_64& rng) {
  ParamValue v;
  v.domain = dom;
  std::uniform_real_distribution<double> unit(0, 1);
  switch (dom) {
    case ParamDomain::Angle: {
      if (sample < 4) v.phase = Phase::turn(sample, 2);
      else if (sample < 16) v.phase = Phase::turn(std::uniform_int_distribution<int>(0, 3)(rng), 2);
      else v.phase = Phase::radians(2 * kPi * unit(rng));
      break;
    }
    case ParamDomain::AnglePi4:
      v.phase = Phase::turn(sample < 8 ? sample : std::uniform_int_distribution<int>(0, 7)(rng), 4);
      break;
    case ParamDomain::NonnegReal:
      v.real = sample == 0 ? 0.0 : sample == 1 ? 1.0 : 4 * unit(rng);
      break;
    case ParamDomain::NonnegDyadic: {
      if (sample < 2) {
        v.real = sample;
        break;
      }
      int e = std::uniform_int_distribution<int>(0, 6)(rng);
      std::int64_t num = std::uniform_int_distribution<std::int64_t>(0, std::int64_t{4} << e)(rng);
      v.real = std::ldexp(static_cast<double>(num), -e);
      break;
    }
    case ParamDomain::Complex: {
      if (sample == 0) v.z = 0;
      else if (sample == 1) v.z = 1;
      else if (sample == 2) v.z = -1;
      else {
        std::normal_distribution<double> g(0, 1.5);
        v.z = {g(rng), g(rng)};
      }
      break;
    }
    case ParamDomain::Z3Pair: {
      if (sample < 9) v.a = sample / 3, v.b = sample % 3;
      else v.a = std::uniform_int_distribution<int>(0, 2)(rng), v.b = std::uniform_int_distribution<int>(0, 2)(rng);
      break;
    }
  }
  return v;
}

}  // namespace detail

inline Params sample_params(const RewriteRule& rule, int sample, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    Params p;
    // After the first attempt the deterministic boundary slots are replaced by random draws.
    int slot = attempt == 0 ? sample : 1000 + attempt;
    for (const auto& spec : rule.params) p.push_back(detail::sample_param(spec.domain, slot, rng));
    if (!rule.side_condition || rule.side_condition(p)) return p;
  }
  throw DomainError("parameter domain of " + rule.name + " is empty under its side conditions");
}

inline std::string params_str(const RewriteRule& rule, const Params& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += rule.params[i].name + "=" + p[i].str();
  }
  return s;
}

inline SoundnessReport verify_rule(const RewriteRule& rule, int samples = 100, std::uint64_t seed = 7,
                                   double tol = kDefaultTol) {
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  SoundnessReport rep;
  rep.rule = rule.name;
  std::mt19937_64 rng(seed ^ detail::name_hash(rule.name));
  int distinct = rule.params.empty() ? 1 : samples;
  for (int s = 0; s < samples; ++s) {
    ++rep.samples;
    if (s >= distinct) continue;
    Params p = sample_params(rule, s, rng);
    auto [lhs, rhs] = rule.build(p);
    Matrix L = interpret(lhs), R = interpret(rhs);
    if (L.rows != R.rows || L.cols != R.cols) throw ShapeError("rule " + rule.name + " has mismatched arities");
    double scale = std::max(1.0, norm_inf(L));
    if (rule.scalar_exact) {
      double dev = max_distance(L, R);
      rep.scalars.push_back(1.0);
      if (dev > tol * scale) rep.failures.push_back({params_str(rule, p), matrix_digest(L), matrix_digest(R), dev});
      continue;
    }
    auto c = scalar_equiv(L, R, tol);
    if (c) {
      rep.scalars.push_back(*c);
      continue;
    }
    // Report how far the best pivot scalar is from working.
    std::size_t piv = 0;
    for (std::size_t i = 0; i < R.a.size(); ++i)
      if (std::abs(R.a[i]) > std::abs(R.a[piv])) piv = i;
    Complex guess = std::abs(R.a[piv]) > 0 ? L.a[piv] / R.a[piv] : Complex(0);
    rep.scalars.push_back(guess);
    rep.failures.push_back({params_str(rule, p), matrix_digest(L), matrix_digest(R), max_distance(L, guess * R)});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Catalogs

namespace detail {

using Pair = std::pair<Diagram, Diagram>;

inline RewriteRule make_rule(std::string name, RuleSet set, std::vector<ParamSpec> params,
                             std::function<Pair(const Params&)> fn, bool exact) {
  RewriteRule r;
  r.name = std::move(name);
  r.rule_set = set;
  r.params = std::move(params);
  r.build = std::move(fn);
  r.scalar_exact = exact;
  r.dim = set == RuleSet::Qutrit ? 3 : 2;
  r.calculus = set == RuleSet::Zw ? Calculus::ZW : Calculus::ZX;
  return r;
}

// The ten rules shared by the traditional, Clifford+T and two-qubit sets.
inline std::vector<RewriteRule> traditional_rules(RuleSet set, ParamDomain ang) {
  using namespace build;
  std::vector<RewriteRule> v;
  v.push_back(make_rule("S1", set, {{"alpha", ang}, {"beta", ang}}, [](const Params& p) {
    return Pair{seq({Z(p[0].phase, 2, 2), par({I(), Z(p[1].phase, 1, 2)})}), Z(p[0].phase + p[1].phase, 2, 3)};
  }, true));
  v.push_back(make_rule("S2", set, {}, [](const Params&) { return Pair{Z0(), I()}; }, true));
  v.push_back(make_rule("S3", set, {}, [](const Params&) { return Pair{X0(), I()}; }, true));
  v.push_back(make_rule("H2", set, {}, [](const Params&) { return Pair{seq({H(), H()}), I()}; }, true));
  v.push_back(make_rule("H3", set, {}, [](const Params&) { return Pair{transpose(H()), H()}; }, true));
  v.push_back(make_rule("H", set, {{"alpha", ang}}, [](const Params& p) {
    return Pair{seq({H(), Z(p[0].phase, 1, 2), par({H(), H()})}), X(p[0].phase, 1, 2)};
  }, true));
  v.push_back(make_rule("B1", set, {}, [](const Params&) {
    return Pair{seq({X0(0, 1), Z0(1, 2)}), par({X0(0, 1), X0(0, 1)})};
  }, false));
  v.push_back(make_rule("B2", set, {}, [](const Params&) {
    return Pair{seq({X0(2, 1), Z0(1, 2)}), seq({par({Z0(1, 2), Z0(1, 2)}), par({I(), Sw(), I()}), par({X0(2, 1), X0(2, 1)})})};
  }, false));
  v.push_back(make_rule("EU", set, {}, [](const Params&) {
    return Pair{H(), seq({Z(quarter(1)), X(quarter(1)), Z(quarter(1))})};
  }, false));
  v.push_back(make_rule("K2", set, {{"alpha", ang}}, [](const Params& p) {
    return Pair{seq({Z(p[0].phase), X(pi())}), seq({X(pi()), Z(-p[0].phase)})};
  }, false));
  return v;
}

// AD': two weighted states added by the merge gadget equal one weighted state.
inline Pair addition_pair(double l1, double l2, Phase alpha, Phase beta, double lambda, Phase gamma) {
  using namespace build;
  return {seq({par({weighted_state(l1, beta), weighted_state(l2, alpha)}), plus_merge()}), weighted_state(lambda, gamma)};
}

inline std::vector<RewriteRule> extended_rules(RuleSet set) {
  using namespace build;
  bool ct = set == RuleSet::CliffordT;
  ParamDomain ang = ct ? ParamDomain::AnglePi4 : ParamDomain::Angle;
  ParamDomain lam = ct ? ParamDomain::NonnegDyadic : ParamDomain::NonnegReal;
  std::vector<RewriteRule> v;
  v.push_back(make_rule("TR1", set, {}, [](const Params&) { return Pair{seq({X(pi()), T(), X(pi())}), transpose(T())}; }, true));
  v.push_back(make_rule("TR2", set, {}, [](const Params&) { return Pair{seq({X0(0, 1), T()}), X0(0, 1)}; }, true));
  v.push_back(make_rule("TR3", set, {}, [](const Params&) { return Pair{seq({X(pi(), 0, 1), T()}), Z0(0, 1)}; }, false));
  if (!ct)
    v.push_back(make_rule("IV2", set, {}, [](const Params&) {
      return Pair{seq({Z0(0, 1), L(1 / std::sqrt(2.0)), X(pi(), 1, 0)}), Empty()};
    }, true));
  else {
    v.push_back(make_rule("IV′", set, {}, [](const Params&) { return Pair{par({sqrt2(), sqrt2()}), Z0(0, 0)}; }, true));
    v.push_back(make_rule("TR5′", set, {}, [](const Params&) {
      return Pair{seq({Z0(1, 2), par({I(), T(-1)}), X0(2, 1)}), seq({T(), Z(pi())})};
    }, false));
  }
  v.push_back(make_rule("TR6", set, {}, [](const Params&) { return Pair{seq({T(), Z(pi()), T()}), Z(pi())}; }, true));
  v.push_back(make_rule("TR8", set, {}, [](const Params&) { return Pair{seq({Z0(1, 2), par({T(), T()}), Z0(2, 1)}), T()}; }, true));
  v.push_back(make_rule("TR9", set, {}, [](const Params&) {
    Diagram t = transpose(T());
    return Pair{seq({Z0(1, 2), par({t, t}), Z0(2, 1)}), t};
  }, true));
  v.push_back(make_rule("TR12", set, {}, [](const Params&) {
    return Pair{spider_self_loop(Z0(1, 3), seq({T(), T()})), I()};
  }, true));
  v.push_back(make_rule("TR13′", set, {{"lambda", lam}, {"alpha", ang}}, [](const Params& p) {
    Diagram g = seq({L(p[0].real), Z(p[1].phase)});
    return Pair{seq({g, plus_copy()}), seq({plus_copy(), par({g, g})})};
  }, true));
  RewriteRule ad = make_rule("AD′", set, {{"lambda1", lam}, {"lambda2", lam}, {"alpha", ang}, {"beta", ang}},
                             [ct](const Params& p) {
    double l1 = p[0].real, l2 = p[1].real;
    Phase a = p[2].phase, b = p[3].phase;
    if (ct) {
      // alpha = beta (mod pi): the sum stays on the line through e^{i beta}.
      bool same = (a - b).is_zero();
      double s = same ? l1 + l2 : l1 - l2;
      return addition_pair(l1, l2, a, b, std::abs(s), s >= 0 ? b : b + pi());
    }
    Complex s = std::polar(l1, b.value()) + std::polar(l2, a.value());
    double g = std::arg(s);
    return addition_pair(l1, l2, a, b, std::abs(s), Phase::radians(g < 0 ? g + 2 * kPi : g));
  }, true);
  if (ct)
    ad.side_condition = [](const Params& p) {
      Phase d = p[2].phase - p[3].phase;
      return d.is_zero() || d == pi();
    };
  v.push_back(ad);
  v.push_back(make_rule("L3", set, {}, [](const Params&) { return Pair{L(1), I()}; }, true));
  v.push_back(make_rule("L4", set, {{"lambda1", lam}, {"lambda2", lam}}, [](const Params& p) {
    return Pair{seq({L(p[0].real), L(p[1].real)}), L(p[0].real * p[1].real)};
  }, true));
  return v;
}

inline std::vector<RewriteRule> zw_rules() {
  using namespace build;
  const RuleSet set = RuleSet::Zw;
  const ParamDomain C = ParamDomain::Complex;
  std::vector<RewriteRule> v;
  auto add = [&](std::string name, std::vector<ParamSpec> ps, std::function<Pair(const Params&)> fn) {
    v.push_back(make_rule(std::move(name), set, std::move(ps), std::move(fn), true));
  };
  add("rei", {}, [](const Params&) { return Pair{seq({Pi(), Pi()}), Iw()}; });
  add("nat", {}, [](const Params&) { return Pair{seq({par({Bk(0, 1), Iw()}), Cr()}), par({Wh(Complex(-1)), Bk(0, 1)})}; });
  add("sym", {}, [](const Params&) { return Pair{seq({Bk(1, 2), Sww()}), Bk(1, 2)}; });
  add("hopf", {}, [](const Params&) { return Pair{seq({Wh(Complex(1), 1, 2), Bk(2, 1)}), seq({Wh(Complex(0), 1, 0), Bk(0, 1)})}; });
  add("inv", {}, [](const Params&) { return Pair{seq({Cr(), Cr()}), Iw(2)}; });
  add("ant", {}, [](const Params&) {
    return Pair{seq({par({Pi(), Iw()}), Cr()}), seq({par({Iw(), Wh(Complex(-1))}), Cr(), par({Iw(), Pi()})})};
  });
  add("un", {}, [](const Params&) { return Pair{seq({Bk(1, 2), par({Iw(), seq({Pi(), Bk(1, 0)})})}), Pi()}; });
  add("asso", {}, [](const Params&) { Diagram w = seq({Pi(), Bk(1, 2)});
    return Pair{seq({Bk(1, 2), par({w, Iw()})}), seq({Bk(1, 2), par({Iw(), w})})}; });
  add("ph", {{"r", C}, {"s", C}}, [](const Params& p) {
    return Pair{seq({Wh(p[0].z), Wh(p[1].z, 1, 2)}), Wh(p[0].z * p[1].z, 1, 2)};
  });
  add("loop", {{"r", C}}, [](const Params& p) {
    return Pair{seq({Wh(p[0].z, 1, 3), par({Iw(), Capw()})}), Wh(p[0].z)};
  });
  add("rng₁", {}, [](const Params&) { return Pair{Wh(Complex(1)), Iw()}; });
  add("rng₋₁", {}, [](const Params&) {
    return Pair{seq({par({Iw(), Cupw()}), par({Cr(), Iw()}), par({Iw(), Capw()})}), Wh(Complex(-1))};
  });
  add("rng×", {{"r", C}, {"s", C}}, [](const Params& p) { return Pair{seq({Wh(p[0].z), Wh(p[1].z)}), Wh(p[0].z * p[1].z)}; });
  add("rng^{r,s}₊", {{"r", C}, {"s", C}}, [](const Params& p) {
    return Pair{seq({Bk(1, 2), par({Wh(p[0].z), Wh(p[1].z)}), Bk(2, 1)}), seq({Pi(), Wh(p[0].z + p[1].z), Pi()})};
  });
  add("natʳ_c", {{"r", C}}, [](const Params& p) {
    return Pair{seq({Pi(), Bk(1, 2), par({Wh(p[0].z), Wh(p[0].z)})}), seq({Wh(p[0].z), Pi(), Bk(1, 2)})};
  });
  add("natʳ_εc", {{"r", C}}, [](const Params& p) {
    return Pair{seq({Bk(0, 1), Pi(), Wh(p[0].z)}), seq({Bk(0, 1), Pi()})};
  });
  add("phʳ", {{"r", C}}, [](const Params& p) {
    return Pair{seq({par({Wh(p[0].z), Iw()}), Cr()}), seq({Cr(), par({Iw(), Wh(p[0].z)})})};
  });
  return v;
}

inline std::vector<RewriteRule> qutrit_rules() {
  using namespace build;
  const RuleSet set = RuleSet::Qutrit;
  const ParamDomain P = ParamDomain::Z3Pair;
  std::vector<RewriteRule> v;
  auto m3 = [](int x) { return ((x % 3) + 3) % 3; };
  v.push_back(make_rule("S1", set, {{"p", P}, {"q", P}}, [m3](const Params& p) {
    return Pair{seq({Z3(p[0].a, p[0].b, 2, 2), par({I3(), Z3(p[1].a, p[1].b, 1, 2)})}),
                Z3(m3(p[0].a + p[1].a), m3(p[0].b + p[1].b), 2, 3)};
  }, true));
  v.push_back(make_rule("S2", set, {}, [](const Params&) { return Pair{Z3(0, 0), I3()}; }, true));
  v.push_back(make_rule("S3", set, {}, [](const Params&) { return Pair{X3(0, 0), I3()}; }, true));
  v.push_back(make_rule("B1", set, {}, [](const Params&) {
    return Pair{seq({X3(0, 0, 0, 1), Z3(0, 0, 1, 2)}), par({X3(0, 0, 0, 1), X3(0, 0, 0, 1)})};
  }, false));
  v.push_back(make_rule("B2", set, {}, [](const Params&) {
    return Pair{seq({X3(0, 0, 2, 1), Z3(0, 0, 1, 2)}),
                seq({par({Z3(0, 0, 1, 2), Z3(0, 0, 1, 2)}), par({I3(), Sw3(), I3()}), par({X3(0, 0, 2, 1), X3(0, 0, 2, 1)})})};
  }, false));
  v.push_back(make_rule("K1", set, {}, [](const Params&) {
    return Pair{seq({X3(1, 2), Z3(0, 0, 1, 2)}), seq({Z3(0, 0, 1, 2), par({X3(1, 2), X3(1, 2)})})};
  }, false));
  v.push_back(make_rule("K2", set, {{"p", P}}, [m3](const Params& p) {
    int a = p[0].a, b = p[0].b;
    return Pair{seq({Z3(a, b), X3(1, 2)}), seq({X3(1, 2), Z3(m3(b - a), m3(-a))})};
  }, false));
  v.push_back(make_rule("H1", set, {{"p", P}}, [](const Params& p) {
    return Pair{seq({H3(3), Z3(p[0].a, p[0].b, 1, 2), par({H3(), H3()})}), X3(p[0].a, p[0].b, 1, 2)};
  }, true));
  v.push_back(make_rule("EU", set, {}, [](const Params&) { return Pair{H3(), seq({Z3(2, 2), X3(2, 2), Z3(2, 2)})}; }, false));
  v.push_back(make_rule("H2", set, {}, [](const Params&) { return Pair{seq({H3(), H3(), H3(), H3()}), I3()}; }, true));
  v.push_back(make_rule("H2′", set, {}, [](const Params&) { return Pair{seq({H3(), H3()}), seq({H3(3), H3(3)})}; }, true));
  v.push_back(make_rule("P1", set, {}, [](const Params&) { return Pair{seq({Z3(1, 1, 0, 1), X3(1, 1)}), X3(0, 0, 0, 1)}; }, false));
  return v;
}

}  // namespace detail

// LHS: a red 1->1 spider with n green leaves at alpha + 2 pi j / n.
// RHS: the same red spider joined by n wires to one green spider at n alpha + (n-1) pi.
inline std::pair<Diagram, Diagram> supplementarity_pair(int n, Phase alpha) {
  using namespace build;
  if (n < 1) throw std::invalid_argument("n must be positive");
  Diagram leaves = I();
  for (int j = 0; j < n; ++j) leaves = par({leaves, Z(alpha + Phase::turn(2 * j, n), 1, 0)});
  Diagram lhs = seq({X0(1, n + 1), leaves});
  Phase theta = Phase::zero();
  for (int j = 0; j < n; ++j) theta = theta + alpha;
  theta = theta + Phase::turn(n - 1, 1);
  Diagram rhs = seq({X0(1, n + 1), par({I(), Z(theta, n, 0)})});
  return {lhs, rhs};
}

namespace detail {

inline std::vector<RewriteRule> derived_rules() {
  using namespace build;
  const RuleSet set = RuleSet::DerivedLemma;
  const ParamDomain A = ParamDomain::Angle, R = ParamDomain::NonnegReal;
  std::vector<RewriteRule> v;
  auto add = [&](std::string name, std::vector<ParamSpec> ps, std::function<Pair(const Params&)> fn, bool exact) {
    v.push_back(make_rule(std::move(name), set, std::move(ps), std::move(fn), exact));
  };
  Diagram disconnect = seq({X0(1, 0), X0(0, 1)});
  add("hopf", {}, [](const Params&) { return Pair{seq({Z0(1, 2), X0(2, 1)}), seq({Z0(1, 0), X0(0, 1)})}; }, false);
  add("6b", {{"alpha", A}}, [](const Params& p) {
    return Pair{seq({X(pi(), 0, 1), Z(p[0].phase, 1, 2)}), par({X(pi(), 0, 1), X(pi(), 0, 1)})};
  }, false);
  add("com", {{"alpha", A}}, [](const Params& p) {
    return Pair{seq({par({Z(p[0].phase), I()}), cnot()}), seq({cnot(), par({Z(p[0].phase), I()})})};
  }, true);
  add("inv", {}, [](const Params&) { return Pair{par({sqrt2(), sqrt2()}), Z0(0, 0)}; }, true);
  add("S4", {}, [](const Params&) { return Pair{Z0(2, 0), Cap()}; }, true);
  add("lemma1", {{"alpha", A}}, [](const Params& p) {
    return Pair{seq({X(p[0].phase), Z(pi())}), seq({Z(pi()), X(-p[0].phase)})};
  }, false);
  add("lemma2", {}, [](const Params&) { return Pair{seq({Z(pi(), 0, 1), X0(1, 2)}), par({Z(pi(), 0, 1), Z(pi(), 0, 1)})}; }, false);
  add("lemma3", {{"alpha", A}}, [](const Params& p) {
    return Pair{spider_self_loop(Z(p[0].phase, 1, 3), H()), Z(p[0].phase + pi())};
  }, false);
  add("lemma4", {}, [](const Params&) {
    return Pair{seq({Z(quarter(1)), X(quarter(1)), Z(quarter(1))}), seq({X(quarter(1)), Z(quarter(1)), X(quarter(1))})};
  }, false);
  add("lemma5", {{"alpha", A}, {"beta", A}}, [](const Params& p) {
    Diagram d = par({Z(p[0].phase), Z(p[1].phase)});
    return Pair{seq({d, cz()}), seq({cz(), d})};
  }, true);
  add("lemma6", {{"alpha", A}}, [](const Params& p) {
    return Pair{seq({Z(p[0].phase, 1, 2), par({X(pi()), X(pi())})}), seq({X(pi()), Z(-p[0].phase, 1, 2)})};
  }, false);
  add("lemma7", {}, [](const Params&) { return Pair{cnot(), seq({par({I(), H()}), cz(), par({I(), H()})})}; }, true);
  add("cnot-swap", {}, [](const Params&) { return Pair{seq({cnot(), cnot_rev(), cnot()}), Sw()}; }, true);
  add("3-crossing", {}, [](const Params&) {
    return Pair{seq({par({Sw(), I()}), par({I(), Sw()}), par({Sw(), I()})}), seq({par({I(), Sw()}), par({Sw(), I()}), par({I(), Sw()})})};
  }, true);
  add("TR4", {}, [](const Params&) { return Pair{seq({Z(pi(), 0, 1), T()}), X(pi(), 0, 1)}; }, false);
  add("TR5", {}, [disconnect](const Params&) {
    return Pair{seq({Z0(1, 2), par({I(), seq({T(), H()})}), Z0(2, 1)}), disconnect};
  }, false);
  add("TR7", {}, [](const Params&) { return Pair{seq({Z0(1, 2), par({I(), T()}), X0(2, 1)}), T()}; }, false);
  add("TR10", {}, [disconnect](const Params&) {
    return Pair{seq({Z0(1, 2), par({T(), T(-1)}), X0(2, 1)}), disconnect};
  }, false);
  add("TR10′", {}, [](const Params&) { return Pair{seq({T(), Z(pi()), T(), Z(pi())}), I()}; }, true);
  add("TR11", {}, [](const Params&) { return Pair{spider_self_loop(Z0(1, 3), seq({T(), Z(pi()), T()})), Z(pi())}; }, true);
  add("L1", {{"lambda", R}}, [](const Params& p) {
    return Pair{seq({Z0(1, 2), par({L(p[0].real), I()})}), seq({L(p[0].real), Z0(1, 2)})};
  }, true);
  add("L2", {{"lambda", R}}, [](const Params& p) { return Pair{seq({L(p[0].real), X0(1, 0)}), X0(1, 0)}; }, true);
  add("L5", {{"lambda", R}, {"alpha", A}}, [](const Params& p) {
    return Pair{seq({L(p[0].real), Z(p[1].phase)}), seq({Z(p[1].phase), L(p[0].real)})};
  }, true);
  add("half-box", {}, [](const Params&) { return Pair{decompose_lambda(0.5, TranslationMode::CliffordT), L(0.5)}; }, true);
  add("supplementarity-as-spider", {{"alpha", A}}, [](const Params& p) {
    return supplementarity_pair(2, p[0].phase);
  }, true);
  return v;
}

}  // namespace detail

inline std::vector<RewriteRule> catalog(RuleSet set) {
  using namespace build;
  std::vector<RewriteRule> v;
  switch (set) {
    case RuleSet::QubitTraditional: return detail::traditional_rules(set, ParamDomain::Angle);
    case RuleSet::ZxFullExtended: return detail::extended_rules(set);
    case RuleSet::CliffordT: {
      v = detail::traditional_rules(set, ParamDomain::AnglePi4);
      auto e = detail::extended_rules(set);
      v.insert(v.end(), e.begin(), e.end());
      return v;
    }
    case RuleSet::Zw: return detail::zw_rules();
    case RuleSet::Qutrit: return detail::qutrit_rules();
    case RuleSet::TwoQubitCT: {
      for (auto& r : detail::traditional_rules(set, ParamDomain::AnglePi4))
        if (r.name != "H2" && r.name != "H3") v.push_back(r);
      v.push_back(detail::make_rule("P", set, {{"alpha", ParamDomain::Angle}, {"beta", ParamDomain::Angle}, {"gamma", ParamDomain::Angle}},
                                    [](const Params& p) {
        AngleTriple t = zxz_to_xzx({p[0].phase.value(), p[1].phase.value(), p[2].phase.value()});
        return detail::Pair{seq({Z(p[0].phase), X(p[1].phase), Z(p[2].phase)}),
                            seq({X(Phase::radians(t.alpha)), Z(Phase::radians(t.beta)), X(Phase::radians(t.gamma))})};
      }, false));
      return v;
    }
    case RuleSet::DerivedLemma: return detail::derived_rules();
  }
  throw std::invalid_argument("unknown rule set");
}

inline std::optional<RewriteRule> find_rule(RuleSet set, const std::string& name) {
  for (auto& r : catalog(set))
    if (r.name == name) return r;
  return std::nullopt;
}

// Negative control: B2 with a pi/4 phase slipped onto the red spider of the left-hand side.
inline RewriteRule mutated_b2() {
  using namespace build;
  RewriteRule r = *find_rule(RuleSet::QubitTraditional, "B2");
  r.name = "B2-with-corrupted-phase";
  r.build = [](const Params&) {
    return detail::Pair{seq({X(eighth(1), 2, 1), Z0(1, 2)}),
                        seq({par({Z0(1, 2), Z0(1, 2)}), par({I(), Sw(), I()}), par({X0(2, 1), X0(2, 1)})})};
  };
  return r;
}

}  // namespace zxw
