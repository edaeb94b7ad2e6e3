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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>

#include "zxw/cli.hpp"
#include "zxw/random.hpp"

using namespace zxw;

namespace {

const std::string kData = ZXW_DATA_DIR;

struct Result {
  int code;
  std::string out;
};

// Runs the installed binary through the shell; standard error is discarded.
Result shell(const std::string& args) {
  std::string cmd = std::string(ZXW_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, {}};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Result inproc(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str()};
}

std::string data(const std::string& f) { return kData + "/" + f; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "zxw_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, VerifyRulesQubitTraditional) {
  auto r = shell("verify-rules --set qubit-traditional --samples 50 --seed 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("10 rules, 0 failed"), std::string::npos) << r.out;
}

TEST(Cli, VerifyRulesIsDeterministic) {
  std::vector<std::string> args = {"verify-rules", "--set", "qutrit", "--samples", "20", "--seed", "3"};
  auto a = inproc(args), b = inproc(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(inproc({"verify-rules", "--set", "no-such-set"}).code, 2);
}

TEST(Cli, EquivUmaVersions) {
  auto r = shell("equiv " + data("uma_v1.zx.json") + " " + data("uma_v2.zx.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(shell("equiv " + data("s_gate.zx.json") + " " + data("s_gate_fused.zx.json")).code, 0);
  EXPECT_EQ(shell("equiv " + data("s_gate.zx.json") + " " + data("triangle.zx.json")).code, 1);
  EXPECT_EQ(shell("equiv " + data("uma_v1.zx.json") + " " + data("s_gate.zx.json")).code, 2);
}

TEST(Cli, MalformedInputExitsTwo) {
  EXPECT_EQ(shell("interpret " + data("bad.json")).code, 2);
  EXPECT_EQ(shell("interpret " + data("truncated.json")).code, 2);
  EXPECT_EQ(shell("interpret " + data("does_not_exist.json")).code, 2);
  EXPECT_EQ(shell("interpret " + data("s_gate.zx.json") + " --frobnicate").code, 2);
  EXPECT_EQ(shell("").code, 2);
  EXPECT_EQ(shell("gallery no-such-entry").code, 2);
  EXPECT_EQ(shell("translate " + data("s_gate.zx.json") + " --to qasm").code, 2);
}

TEST(Cli, InterpretPrintsRowMajor) {
  auto r = shell("interpret " + data("s_gate.zx.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2x2\n1+0i 0+0i\n0+0i 0+1i\n");
  auto t = shell("interpret " + data("triangle.zx.json"));
  EXPECT_EQ(t.out, "2x2\n1+0i 1+0i\n0+0i 1+0i\n");
}

TEST(Cli, InterpretExact) {
  auto r = shell("interpret --exact " + data("s_gate.zx.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 3);
  EXPECT_NE(r.out.find("(0,0,1,0)"), std::string::npos) << r.out;
  // Non pi/4 phases have no exact form.
  auto path = scratch("float_phase.zx.json");
  Diagram d = build::Z(Phase::radians(0.3));
  io::write_file(path.string(), io::print(d));
  EXPECT_EQ(shell("interpret --exact " + path.string()).code, 2);
  EXPECT_EQ(shell("interpret " + path.string()).code, 0);
}

TEST(Cli, Euler) {
  auto r = shell("euler --alpha 0.3 --beta 1.1 --gamma 2");
  EXPECT_EQ(r.code, 0);
  AngleTriple t = zxz_to_xzx({0.3, 1.1, 2.0});
  char expect[200];
  std::snprintf(expect, sizeof expect, "(%.12g, %.12g, %.12g)\n", t.alpha, t.beta, t.gamma);
  EXPECT_EQ(r.out, expect);
  EXPECT_EQ(shell("euler --alpha 0.3").code, 2);
}

TEST(Cli, QutritC1Enumerate) {
  auto r = shell("qutrit-c1 --enumerate");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 216 + 4);
  EXPECT_NE(r.out.find("form1: 81\nform2: 108\nform3: 27\ntotal: 216\n"), std::string::npos);
}

TEST(Cli, SimplifyWritesFile) {
  auto path = scratch("simplified.zx.json");
  EXPECT_EQ(shell("simplify " + data("s_gate.zx.json") + " -o " + path.string()).code, 0);
  Diagram d = io::load(path.string());
  EXPECT_EQ(d.nodes.size(), 1u);
  EXPECT_EQ(shell("equiv " + path.string() + " " + data("s_gate_fused.zx.json")).code, 0);
  EXPECT_EQ(shell("simplify " + data("s_gate.zx.json") + " --passes hadamard").out,
            io::print(io::load(data("s_gate.zx.json"))));
  EXPECT_EQ(shell("simplify " + data("s_gate.zx.json") + " --passes magic").code, 2);
}

TEST(Cli, TranslateRoundTrip) {
  auto zw = scratch("triangle.zw.json"), back = scratch("triangle.back.zx.json");
  EXPECT_EQ(shell("translate " + data("triangle.zx.json") + " --to zw -o " + zw.string()).code, 0);
  EXPECT_EQ(io::load(zw.string()).calculus, Calculus::ZW);
  EXPECT_EQ(shell("translate " + zw.string() + " --to zx -o " + back.string()).code, 0);
  EXPECT_EQ(shell("equiv " + back.string() + " " + data("triangle.zx.json")).code, 0);
  EXPECT_EQ(shell("translate " + data("triangle.zx.json") + " --to zw --mode clifford-t").code, 0);
  EXPECT_EQ(shell("translate " + zw.string() + " --to zw").code, 2);
}

TEST(Cli, GalleryCheckEveryEntry) {
  for (const auto& e : gallery::entries()) {
    auto r = inproc({"gallery", e.name, "--check"});
    EXPECT_EQ(r.code, 0) << e.name << ": " << r.out;
  }
  EXPECT_EQ(shell("gallery supplementarity --param 4 --param 0.7 --check").code, 0);
  EXPECT_EQ(shell("gallery supplementarity --param 9 --check").code, 2);
  EXPECT_EQ(count_lines(shell("gallery --list").out), static_cast<int>(gallery::entries().size()));
}

TEST(Cli, GalleryPairPrintsBothSides) {
  auto r = shell("gallery sb-relation-12");
  ASSERT_EQ(r.code, 0);
  auto j = io::parse_text(r.out);
  Diagram l = io::from_json(j["lhs"]), rhs = io::from_json(j["rhs"]);
  EXPECT_TRUE(gallery::check_equiv(l, rhs).has_value());
}

TEST(Cli, GslcEquality) {
  qutrit::GSLCDiagram a = io::gslc_from_json(io::parse_text(io::read_file(data("path_a.gslc.json"))));
  auto moved = qutrit::apply_local_comp_with_corrections(a, 1, 1);
  auto path = scratch("path_lc.gslc.json");
  io::write_file(path.string(), io::gslc_to_json(moved).dump() + "\n");
  EXPECT_EQ(shell("equiv --method gslc " + data("path_a.gslc.json") + " " + path.string()).code, 0);
  EXPECT_EQ(shell("equiv --method gslc " + data("path_a.gslc.json") + " " + data("path_b.gslc.json")).code, 1);
  EXPECT_EQ(shell("equiv " + data("path_a.gslc.json") + " " + path.string()).code, 0);
  EXPECT_EQ(shell("equiv " + data("path_a.gslc.json") + " " + data("path_b.gslc.json")).code, 1);
  EXPECT_EQ(shell("equiv --method gslc " + data("s_gate.zx.json") + " " + data("path_a.gslc.json")).code, 2);
  EXPECT_EQ(shell("interpret " + data("path_a.gslc.json")).out.substr(0, 5), "27x1\n");
}

TEST(Format, RoundTripGalleryDiagrams) {
  for (const auto& e : gallery::entries()) {
    auto item = gallery::build(e.name);
    EXPECT_EQ(io::parse(io::print(item.diagram)), item.diagram) << e.name;
    if (item.rhs) EXPECT_EQ(io::parse(io::print(*item.rhs)), *item.rhs) << e.name;
  }
}

TEST(Format, RoundTripRandomAndTranslated) {
  std::mt19937_64 rng(12);
  RandomDiagramOptions opt;
  opt.self_loops = true;
  for (int t = 0; t < 50; ++t) {
    Diagram d = random_zx_diagram(rng, opt);
    EXPECT_EQ(io::parse(io::print(d)), d) << t;
    Diagram zw = zx_to_zw(d);
    EXPECT_EQ(io::parse(io::print(zw)), zw) << t;
  }
  Diagram q = seq({build::Z3(1, 2), build::X3(0, 1), build::H3(3)});
  EXPECT_EQ(io::parse(io::print(q)), q);
}

TEST(Format, EndpointListsAttachBoundaries) {
  Diagram d = io::load(data("s_gate.zx.json"));
  EXPECT_EQ(d.n_in, 1);
  EXPECT_EQ(d.n_out, 1);
  EXPECT_LE(max_distance(interpret(d), interpret(build::Z(build::quarter(1)))), 1e-12);
  EXPECT_THROW(io::parse(R"({"version": 2})"), io::FormatError);
  EXPECT_THROW(io::parse(R"({"version": 1, "calculus": "zx", "dimension": 2, "nodes": [{"id": "a:1", "kind": "Z",
      "phases": [0]}], "edges": [], "inputs": [], "outputs": []})"),
               io::FormatError);
  EXPECT_THROW(io::parse(R"({"version": 1, "calculus": "zx", "dimension": 2, "nodes": [{"id": "a", "kind": "Q"}],
      "edges": [], "inputs": [], "outputs": []})"),
               io::FormatError);
}
