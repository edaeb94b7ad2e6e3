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

// Acceptance checks. One PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "zxw/euler.hpp"
#include "zxw/gallery.hpp"
#include "zxw/qutrit.hpp"
#include "zxw/random.hpp"
#include "zxw/rewrite.hpp"
#include "zxw/rules.hpp"
#include "zxw/translate.hpp"

using namespace zxw;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome rule_sweep() {
  auto t0 = Clock::now();
  const RuleSet sets[] = {RuleSet::QubitTraditional, RuleSet::ZxFullExtended, RuleSet::CliffordT,
                          RuleSet::Zw,               RuleSet::Qutrit,         RuleSet::TwoQubitCT};
  int rules = 0, failed = 0;
  bool sizes = catalog(RuleSet::QubitTraditional).size() == 10 && catalog(RuleSet::ZxFullExtended).size() == 12 &&
               catalog(RuleSet::Qutrit).size() == 12;
  for (RuleSet s : sets)
    for (const auto& r : catalog(s)) {
      ++rules;
      if (!verify_rule(r, 100, 2026, 1e-9).pass()) ++failed;
    }
  bool negative = !verify_rule(mutated_b2(), 100, 2026, 1e-9).pass();
  double dt = seconds_since(t0);
  return {failed == 0 && sizes && negative && dt < 60,
          std::to_string(rules) + " rules, " + std::to_string(failed) + " failed, mutated B2 " +
              (negative ? "caught" : "missed") + fmt(", %.1fs", dt)};
}

Outcome qutrit_c1() {
  auto t0 = Clock::now();
  auto all = qutrit::enumerate_c1();
  int counts[3] = {0, 0, 0};
  for (const auto& [f, m] : all) ++counts[static_cast<int>(f.form) - 1];
  int clashes = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (scalar_equiv(all[i].second, all[j].second, 1e-9)) ++clashes;
  double dt = seconds_since(t0);
  bool ok = all.size() == 216 && counts[0] == 81 && counts[1] == 108 && counts[2] == 27 && clashes == 0 && dt < 10;
  return {ok, std::to_string(all.size()) + " classes = " + std::to_string(counts[0]) + "+" + std::to_string(counts[1]) +
                  "+" + std::to_string(counts[2]) + ", " + std::to_string(clashes) + " equivalent pairs" +
                  fmt(", %.2fs", dt)};
}

Matrix rz(double a) { return diag({1, std::polar(1.0, a)}); }
Matrix rx(double a) {
  Complex e = std::polar(1.0, a);
  return 0.5 * Matrix(2, 2, {1.0 + e, 1.0 - e, 1.0 - e, 1.0 + e});
}

Outcome euler() {
  std::mt19937_64 rng(1000);
  std::uniform_real_distribution<double> u(0, 2 * kPi);
  int bad = 0;
  for (int t = 0; t < 1000; ++t) {
    AngleTriple in{u(rng), u(rng), u(rng)}, out = zxz_to_xzx(in);
    Matrix l = rz(in.gamma) * rx(in.beta) * rz(in.alpha), r = rx(out.gamma) * rz(out.beta) * rx(out.alpha);
    if (!scalar_equiv(l, r, 1e-9)) ++bad;
  }
  std::normal_distribution<double> g(0, 1);
  int special_bad = 0, special = 0;
  for (int t = 0; t < 250; ++t) {
    Complex l1(g(rng), g(rng)), l2(g(rng), g(rng));
    Complex partner[4] = {l1, 1.0 / l1, -1.0 / l1, -l1};
    for (int c = 0; c < 4; ++c) {
      GeneralTriple o;
      try {
        o = color_swap_general({l1, l2, partner[c]});
      } catch (const DegenerateDecomposition&) {
        continue;
      }
      ++special;
      double s = std::max({1.0, std::abs(o.l1), std::abs(o.l3)});
      double dev = c == 0 ? std::abs(o.l1 - o.l3) / s
                 : c == 1 ? std::abs(o.l1 + o.l3) / s
                 : c == 2 ? std::abs(o.l1 * o.l3 + 1.0) / (s * s)
                          : std::abs(o.l1 * o.l3 - 1.0) / (s * s);
      if (dev > 1e-9) ++special_bad;
    }
  }
  return {bad == 0 && special_bad == 0 && special > 900,
          std::to_string(bad) + "/1000 Euler mismatches, " + std::to_string(special_bad) + "/" +
              std::to_string(special) + " special-case violations"};
}

Outcome translation() {
  using namespace build;
  std::vector<Diagram> gens = {Z(eighth(3)), Z(Phase::radians(0.7), 2, 1), Z(pi(), 0, 2), X(quarter(1)),
                               X(Phase::radians(1.9), 1, 2), X0(3, 1), H(), T(), T(-1), L(0.375), L(2.6), L(0)};
  int bad = 0;
  auto check = [&](const Diagram& d) {
    Matrix D = interpret(d);
    Diagram w = zx_to_zw(d);
    if (max_distance(interpret(w), D) > 1e-12 * std::max(1.0, norm_inf(D))) ++bad;
    else if (!scalar_equiv(interpret(zw_to_zx(w)), D, 1e-9)) ++bad;
  };
  for (const auto& g : gens) check(g);
  std::mt19937_64 rng(404);
  RandomDiagramOptions opt;
  opt.max_nodes = 6;
  for (int t = 0; t < 100; ++t) check(random_zx_diagram(rng, opt));
  return {bad == 0, std::to_string(gens.size()) + " generators + 100 random diagrams, " + std::to_string(bad) + " failures"};
}

Outcome clifford_t_ring() {
  std::mt19937_64 rng(5);
  RandomDiagramOptions opt;
  opt.pi4_phases = true;
  int bad = 0;
  for (int t = 0; t < 200; ++t) {
    Diagram d = random_zx_diagram(rng, opt);
    try {
      Matrix f = interpret(d);
      if (max_distance(to_complex(interpret_exact(d)), f) > 1e-12 * std::max(1.0, norm_inf(f))) ++bad;
    } catch (const NotExact&) {
      ++bad;
    }
  }
  return {bad == 0, "200 pi/4 diagrams, " + std::to_string(bad) + " outside Z[i, 1/sqrt2] or mismatched"};
}

qutrit::GSLCDiagram random_gslc(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> w(0, 2), op(0, 215);
  qutrit::WeightedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v, w(rng));
  std::vector<int> ops(n);
  for (auto& o : ops) o = op(rng);
  return {g, ops};
}

Outcome qutrit_equality() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<int> coin(0, 1), size(1, 5);
  int positives = 0, negatives = 0, disagreements = 0;
  for (int t = 0; t < 200; ++t) {
    int n = size(rng);
    auto a = random_gslc(rng, n);
    qutrit::GSLCDiagram b;
    if (t % 2 == 0) {
      b = a;
      std::uniform_int_distribution<int> vert(0, n - 1), moves(1, 6);
      for (int k = moves(rng); k > 0; --k) {
        int v = vert(rng);
        b = coin(rng) ? qutrit::apply_local_comp_with_corrections(b, v, 1 + coin(rng))
                      : qutrit::apply_scale_with_corrections(b, v, 1 + coin(rng));
      }
    } else {
      b = random_gslc(rng, n);
    }
    bool oracle = scalar_equiv(qutrit::state_vector(a), qutrit::state_vector(b), 1e-9).has_value();
    bool decided = qutrit::equal_states(a, b);
    (oracle ? positives : negatives)++;
    if (oracle != decided) ++disagreements;
  }
  double dt = seconds_since(t0);
  return {disagreements == 0 && positives >= 50 && negatives >= 50 && dt < 120,
          std::to_string(positives) + " equal / " + std::to_string(negatives) + " unequal pairs, " +
              std::to_string(disagreements) + " disagreements" + fmt(", %.2fs", dt)};
}

Outcome gallery_checks() {
  using namespace gallery;
  int bad = 0;
  if (!scalar_equiv(interpret(toffoli_triangle()), *expected_matrix("toffoli-triangle"), 1e-9)) ++bad;
  if (!check_equiv(uma_two_cnot(), uma_three_cnot())) ++bad;
  int sb = 0;
  for (const auto& l : sb_relation_labels()) {
    auto [lhs, rhs] = sb_relation(l);
    if (check_equiv(lhs, rhs)) ++sb;
  }
  if (sb != 17) ++bad;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0, 2 * kPi);
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 5; ++t)
      if (!verify_supplementarity(n, Phase::radians(u(rng))).pass()) ++bad;
  std::normal_distribution<double> g(0, 1);
  int ghz = 0;
  while (ghz < 100) {
    Complex l1(g(rng), g(rng)), l2(g(rng), g(rng)), l3(g(rng), g(rng));
    GhzCoefficients x;
    try {
      x = ghz_normalize(l1, l2, l3);
    } catch (const DegenerateGhz&) {
      continue;
    }
    ++ghz;
    if (!check_equiv(ghz_loop(l1, l2, l3), ghz_normal(x.x1, x.x2, x.x3))) ++bad;
  }
  return {bad == 0, "Toffoli, UMA, " + std::to_string(sb) + "/17 relations, supplementarity n=1..4, 100 GHZ triples; " +
                        std::to_string(bad) + " failures"};
}

Outcome simplify_checks() {
  std::mt19937_64 rng(808);
  RandomDiagramOptions opt;
  opt.max_nodes = 10;
  opt.self_loops = true;
  int bad = 0;
  for (int t = 0; t < 200; ++t) {
    Diagram d = random_zx_diagram(rng, opt);
    auto r = simplify_traced(d);
    bool fix = true;
    for (Pass p : default_passes()) fix = fix && detail::pass_matches(r.diagram, p).empty();
    if (!scalar_equiv(interpret(r.diagram), interpret(d), 1e-9) || r.diagram.nodes.size() > d.nodes.size() ||
        r.steps > r.bound || !fix)
      ++bad;
  }
  return {bad == 0, "200 random diagrams, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"rule soundness sweep", rule_sweep},
      {"qutrit local Clifford group", qutrit_c1},
      {"Euler colour swap", euler},
      {"ZX/ZW translation", translation},
      {"Clifford+T ring correspondence", clifford_t_ring},
      {"qutrit equality decision", qutrit_equality},
      {"gallery", gallery_checks},
      {"simplify", simplify_checks},
  };
  int failed = 0, k = 0;
  for (const auto& [name, f] : criteria) {
    ++k;
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %d %s: %s\n", o.ok ? "PASS" : "FAIL", k, name, o.detail.c_str());
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
