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

// The zxw command line. Exit codes: 0 success or equal, 1 check failed or unequal, 2 bad input.

#pragma once

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zxw/euler.hpp"
#include "zxw/gallery.hpp"
#include "zxw/io.hpp"
#include "zxw/qutrit.hpp"
#include "zxw/rewrite.hpp"
#include "zxw/rules.hpp"
#include "zxw/translate.hpp"

namespace zxw::cli {

inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kBadInput = 2;

namespace detail {

inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", std::abs(v) < 1e-14 ? 0.0 : v);
  return buf;
}

template <class T, class F>
void print_matrix(std::ostream& out, const BasicMatrix<T>& m, F&& fmt) {
  out << m.rows << "x" << m.cols << "\n";
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) out << (j ? " " : "") << fmt(m(i, j));
    out << "\n";
  }
}

inline void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) out << text;
  else io::write_file(path, text);
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> v;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) v.push_back(item);
  return v;
}

struct Loaded {
  std::optional<Diagram> diagram;
  std::optional<qutrit::GSLCDiagram> gslc;
};

inline Loaded load_any(const std::string& path) {
  io::Json j = io::parse_text(io::read_file(path));
  if (io::is_gslc(j)) return {std::nullopt, io::gslc_from_json(j)};
  return {io::from_json(j), std::nullopt};
}

inline int verify_rules(std::ostream& out, const std::string& set, int samples, std::uint64_t seed, double tol) {
  std::vector<RuleSet> sets;
  if (set == "all") sets = all_rule_sets();
  else sets.push_back(parse_rule_set(set));
  int total = 0, failed = 0;
  for (RuleSet s : sets)
    for (const auto& rule : catalog(s)) {
      auto rep = verify_rule(rule, samples, seed, tol);
      ++total;
      if (rep.pass()) {
        out << "PASS " << rule_set_name(s) << "/" << rule.name << " samples=" << rep.samples << "\n";
      } else {
        ++failed;
        const auto& f = rep.failures.front();
        out << "FAIL " << rule_set_name(s) << "/" << rule.name << " failures=" << rep.failures.size()
            << " first: " << f.params << " deviation=" << num(f.deviation) << "\n";
      }
    }
  out << total << " rules, " << failed << " failed\n";
  return failed ? kFail : kOk;
}

inline int interpret_file(std::ostream& out, const std::string& path, bool exact) {
  Loaded l = load_any(path);
  if (l.gslc) {
    if (exact) throw std::invalid_argument("exact mode is qubit-only");
    print_matrix(out, qutrit::state_vector(*l.gslc), format_complex);
    return kOk;
  }
  if (exact) print_matrix(out, interpret_exact(*l.diagram), [](const RingElement& r) { return r.str(); });
  else print_matrix(out, interpret(*l.diagram), format_complex);
  return kOk;
}

inline int equiv_files(std::ostream& out, const std::string& a, const std::string& b, const std::string& method,
                       double tol) {
  Loaded x = load_any(a), y = load_any(b);
  if (method == "gslc") {
    if (!x.gslc || !y.gslc) throw std::invalid_argument("--method gslc needs two GS-LC files");
    bool eq = qutrit::equal_states(*x.gslc, *y.gslc);
    out << (eq ? "equal" : "not equal") << "\n";
    return eq ? kOk : kFail;
  }
  std::optional<Complex> c;
  if (x.gslc || y.gslc) {
    if (!x.gslc || !y.gslc) throw std::invalid_argument("cannot compare a GS-LC file with a diagram file");
    if (x.gslc->size() != y.gslc->size()) throw std::invalid_argument("GS-LC sizes differ");
    c = scalar_equiv(qutrit::state_vector(*x.gslc), qutrit::state_vector(*y.gslc), tol);
  } else {
    c = gallery::check_equiv(*x.diagram, *y.diagram, tol);
  }
  if (c) out << "equal up to scalar " << format_complex(*c) << "\n";
  else out << "not equal\n";
  return c ? kOk : kFail;
}

inline int qutrit_c1(std::ostream& out, bool enumerate) {
  int counts[3] = {0, 0, 0};
  const auto all = qutrit::enumerate_c1();
  for (std::size_t i = 0; i < all.size(); ++i) {
    ++counts[static_cast<int>(all[i].first.form) - 1];
    if (enumerate) out << i << " " << all[i].first.str() << "\n";
  }
  for (int f = 0; f < 3; ++f) out << "form" << f + 1 << ": " << counts[f] << "\n";
  out << "total: " << all.size() << "\n";
  return kOk;
}

inline int gallery_cmd(std::ostream& out, const std::string& name, const std::vector<double>& params, bool check,
                       bool list, const std::string& path) {
  if (list) {
    for (const auto& e : gallery::entries()) out << e.name << (e.pair ? " [pair] " : " ") << e.description << "\n";
    return kOk;
  }
  if (name.empty()) throw std::invalid_argument("gallery needs a NAME or --list");
  auto item = gallery::build(name, params);
  if (!check) {
    if (item.is_pair()) {
      io::Json j{{"lhs", io::to_json(item.diagram)}, {"rhs", io::to_json(*item.rhs)}};
      emit(out, path, j.dump(2) + "\n");
    } else {
      emit(out, path, io::print(item.diagram));
    }
    return kOk;
  }
  if (item.is_pair()) {
    auto c = gallery::check_equiv(item.diagram, *item.rhs);
    if (c) out << name << ": equivalent, scalar " << format_complex(*c) << "\n";
    else out << name << ": NOT equivalent\n";
    return c ? kOk : kFail;
  }
  if (auto m = gallery::expected_matrix(name, params)) {
    auto c = scalar_equiv(interpret(item.diagram), *m);
    if (c) out << name << ": matches expected matrix, scalar " << format_complex(*c) << "\n";
    else out << name << ": does NOT match expected matrix\n";
    return c ? kOk : kFail;
  }
  auto bad = validate(item.diagram);
  out << name << (bad.empty() ? ": valid diagram" : ": invalid diagram") << "\n";
  return bad.empty() ? kOk : kFail;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"zxw: ZX and ZW diagram tools"};
  app.name("zxw");
  app.require_subcommand(1);
  std::function<int()> action;

  auto* vr = app.add_subcommand("verify-rules", "check every rule of a catalog on sampled parameters");
  std::string set = "all";
  int samples = 100;
  std::uint64_t seed = 7;
  double tol = kDefaultTol;
  vr->add_option("--set", set, "rule set name or \"all\"");
  vr->add_option("--samples", samples, "samples per rule")->check(CLI::PositiveNumber);
  vr->add_option("--seed", seed, "random seed");
  vr->add_option("--tol", tol, "tolerance")->check(CLI::PositiveNumber);
  vr->callback([&] { action = [&] { return detail::verify_rules(out, set, samples, seed, tol); }; });

  auto* in = app.add_subcommand("interpret", "print the matrix of a diagram");
  std::string file, file2, outpath;
  bool exact = false;
  in->add_option("FILE", file)->required();
  in->add_flag("--exact", exact, "print exact ring coefficients");
  in->callback([&] { action = [&] { return detail::interpret_file(out, file, exact); }; });

  auto* si = app.add_subcommand("simplify", "run the simplifier");
  std::string passes;
  si->add_option("FILE", file)->required();
  si->add_option("--passes", passes, "comma separated pass list");
  si->add_option("-o", outpath, "output file");
  si->callback([&] {
    action = [&] {
      std::vector<Pass> ps;
      if (passes.empty()) ps = default_passes();
      for (const auto& p : detail::split_commas(passes)) ps.push_back(parse_pass(p));
      detail::emit(out, outpath, io::print(simplify(io::load(file), ps)));
      return kOk;
    };
  });

  auto* tr = app.add_subcommand("translate", "translate between ZX and ZW");
  std::string to, mode = "full";
  tr->add_option("FILE", file)->required();
  tr->add_option("--to", to, "target calculus")->required()->check(CLI::IsMember({"zw", "zx"}));
  tr->add_option("--mode", mode, "full or clifford-t")->check(CLI::IsMember({"full", "clifford-t"}));
  tr->add_option("-o", outpath, "output file");
  tr->callback([&] {
    action = [&] {
      TranslationMode m = mode == "full" ? TranslationMode::Full : TranslationMode::CliffordT;
      Diagram d = io::load(file);
      Diagram r = to == "zw" ? zx_to_zw(d, m) : zw_to_zx(d, m);
      detail::emit(out, outpath, io::print(r));
      return kOk;
    };
  });

  auto* eu = app.add_subcommand("euler", "rewrite Z(gamma) X(beta) Z(alpha) as X Z X angles");
  AngleTriple angles;
  eu->add_option("--alpha", angles.alpha)->required();
  eu->add_option("--beta", angles.beta)->required();
  eu->add_option("--gamma", angles.gamma)->required();
  eu->callback([&] {
    action = [&] {
      AngleTriple r = zxz_to_xzx(angles);
      out << "(" << detail::num(r.alpha) << ", " << detail::num(r.beta) << ", " << detail::num(r.gamma) << ")\n";
      return kOk;
    };
  });

  auto* qc = app.add_subcommand("qutrit-c1", "the qutrit local Clifford group");
  bool enumerate = false;
  qc->add_flag("--enumerate", enumerate, "print all normal forms");
  qc->callback([&] { action = [&] { return detail::qutrit_c1(out, enumerate); }; });

  auto* eq = app.add_subcommand("equiv", "decide equality of two diagrams");
  std::string method = "semantic";
  eq->add_option("FILE1", file)->required();
  eq->add_option("FILE2", file2)->required();
  eq->add_option("--method", method)->check(CLI::IsMember({"semantic", "gslc"}));
  eq->add_option("--tol", tol)->check(CLI::PositiveNumber);
  eq->callback([&] { action = [&] { return detail::equiv_files(out, file, file2, method, tol); }; });

  auto* ga = app.add_subcommand("gallery", "build or check a gallery entry");
  std::string name;
  std::vector<double> params;
  bool check = false, list = false;
  ga->add_option("NAME", name);
  ga->add_option("--param", params, "numeric parameters in order")->allow_extra_args(false);
  ga->add_flag("--check", check, "check the entry semantically");
  ga->add_flag("--list", list, "list entries");
  ga->add_option("-o", outpath, "output file");
  ga->callback([&] { action = [&] { return detail::gallery_cmd(out, name, params, check, list, outpath); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "zxw: " << e.what() << "\n";
    return kBadInput;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    err << "zxw: " << e.what() << "\n";
    return kBadInput;
  }
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args);
}

}  // namespace zxw::cli
