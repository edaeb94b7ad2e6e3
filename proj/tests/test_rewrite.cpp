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

#include <random>

#include "zxw/random.hpp"
#include "zxw/rewrite.hpp"

using namespace zxw;
using namespace zxw::build;

namespace {

RewriteRule rule(RuleSet s, const char* name) { return *find_rule(s, name); }

bool same_up_to_scalar(const Diagram& a, const Diagram& b) {
  return scalar_equiv(interpret(a), interpret(b), 1e-9).has_value();
}

}  // namespace

TEST(FindMatches, AdjacentZSpiders) {
  Diagram d = seq({Z(quarter(1)), Z(eighth(1))});
  auto ms = find_matches(d, rule(RuleSet::QubitTraditional, "S1"));
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].rule, "S1");
  Diagram r = apply_at(d, rule(RuleSet::QubitTraditional, "S1"), ms[0]);
  ASSERT_EQ(r.nodes.size(), 1u);
  EXPECT_EQ(r.nodes.begin()->second.phases[0], eighth(3));
  EXPECT_EQ(interpret_exact(r), interpret_exact(d));
}

TEST(FindMatches, HopfDoubleEdge) {
  Diagram d = seq({Z0(1, 2), X0(2, 1)});
  RewriteRule hopf = rule(RuleSet::DerivedLemma, "hopf");
  auto ms = find_matches(d, hopf);
  ASSERT_EQ(ms.size(), 1u);
  Diagram r = apply_at(d, hopf, ms[0]);
  EXPECT_EQ(r.edges.size(), d.edges.size() - 2);
  EXPECT_TRUE(same_up_to_scalar(r, d));
}

TEST(FindMatches, EmptyDiagramHasNone) {
  for (RuleSet s : all_rule_sets())
    for (const auto& r : catalog(s)) EXPECT_TRUE(find_matches(Empty(), r).empty()) << r.name;
}

TEST(FindMatches, RulesWithoutMatcherYieldNothing) {
  Diagram d = seq({Z(quarter(1)), X(pi()), Z(quarter(1))});
  EXPECT_TRUE(find_matches(d, rule(RuleSet::QubitTraditional, "K2")).empty());
  EXPECT_TRUE(find_matches(d, rule(RuleSet::QubitTraditional, "EU")).empty());
}

TEST(FindMatches, DimensionMismatchYieldsNothing) {
  Diagram d = seq({Z3(1, 0), Z3(0, 1)});
  EXPECT_TRUE(find_matches(d, rule(RuleSet::QubitTraditional, "S1")).empty());
  EXPECT_EQ(find_matches(d, rule(RuleSet::Qutrit, "S1")).size(), 1u);
}

TEST(FindMatches, SortedByHostIds) {
  Diagram d = seq({Z(pi()), Z(pi()), Z(pi()), Z(pi())});
  auto ms = find_matches(d, rule(RuleSet::QubitTraditional, "S1"));
  ASSERT_EQ(ms.size(), 3u);
  for (std::size_t i = 1; i < ms.size(); ++i) EXPECT_TRUE(IdLess{}(ms[i - 1].nodes[0].second, ms[i].nodes[0].second));
}

TEST(ApplyAt, IdentityRemovalGivesWire) {
  Diagram d = seq({H(), Z0(), H()});
  RewriteRule s2 = rule(RuleSet::QubitTraditional, "S2");
  auto ms = find_matches(d, s2);
  ASSERT_EQ(ms.size(), 1u);
  Diagram r = apply_at(d, s2, ms[0]);
  EXPECT_EQ(r.nodes.size(), 2u);
  EXPECT_EQ(interpret_exact(r), interpret_exact(d));
  EXPECT_TRUE(find_matches(seq({H(), X0(), H()}), s2).empty());
}

TEST(ApplyAt, StaleEmbeddingThrows) {
  Diagram d = seq({Z(pi()), Z(pi()), Z(pi())});
  RewriteRule s1 = rule(RuleSet::QubitTraditional, "S1");
  auto ms = find_matches(d, s1);
  ASSERT_EQ(ms.size(), 2u);
  Diagram r = apply_at(d, s1, ms[0]);
  EXPECT_THROW(apply_at(r, s1, ms[1]), EmbeddingInvalid);
  Diagram changed = d;
  changed.nodes.begin()->second.phases[0] = quarter(1);
  EXPECT_THROW(apply_at(changed, s1, ms[0]), EmbeddingInvalid);
  EXPECT_THROW(apply_at(d, rule(RuleSet::QubitTraditional, "S2"), ms[0]), EmbeddingInvalid);
}

TEST(ApplyAt, HadamardLoopAddsPi) {
  RewriteRule l3 = rule(RuleSet::DerivedLemma, "lemma3");
  Diagram d = spider_self_loop(Z(quarter(1), 1, 3), H());
  auto ms = find_matches(d, l3);
  ASSERT_EQ(ms.size(), 1u);
  Diagram r = apply_at(d, l3, ms[0]);
  ASSERT_EQ(r.nodes.size(), 1u);
  EXPECT_EQ(r.nodes.begin()->second.phases[0], quarter(3));
  EXPECT_TRUE(same_up_to_scalar(r, d));
}

TEST(ApplyAt, QutritFusionIsExact) {
  RewriteRule s1 = rule(RuleSet::Qutrit, "S1");
  Diagram d = seq({Z3(1, 2, 1, 2), Z3(2, 2, 2, 1)});
  Diagram r = d;
  for (auto ms = find_matches(r, s1); !ms.empty(); ms = find_matches(r, s1)) r = apply_at(r, s1, ms[0]);
  EXPECT_EQ(r.nodes.size(), 1u);
  EXPECT_LE(max_distance(interpret(r), interpret(d)), 1e-12);
}

TEST(ApplyAt, QutritXFusesOnlyAlongItsOrientation) {
  RewriteRule s1 = rule(RuleSet::Qutrit, "S1");
  Diagram chain = seq({X3(1, 0), X3(0, 2)});
  auto ms = find_matches(chain, s1);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_LE(max_distance(interpret(apply_at(chain, s1, ms[0])), interpret(X3(1, 2))), 1e-12);
  // Two inputs wired together through a cap: H H^T is not the identity for qutrits.
  Diagram bent = seq({par({X3(1, 0), X3(0, 2)}), cap(Calculus::ZX, 3)});
  EXPECT_TRUE(find_matches(bent, s1).empty());
}

TEST(Simplify, ChainOfFiveZSpiders) {
  Diagram d = seq({Z(eighth(1)), Z(eighth(2)), Z(eighth(1)), Z(eighth(3)), Z(eighth(4))});
  Diagram r = simplify(d);
  ASSERT_EQ(r.nodes.size(), 1u);
  EXPECT_EQ(r.nodes.begin()->second.phases[0], eighth(11));
  EXPECT_EQ(interpret_exact(r), interpret_exact(d));
}

TEST(Simplify, HadamardPairCancels) {
  Diagram r = simplify(seq({H(), H()}));
  EXPECT_TRUE(r.nodes.empty());
  EXPECT_EQ(interpret_exact(r), interpret_exact(I()));
}

TEST(Simplify, QutritHadamardFourthPowerCancels) {
  Diagram d = seq({H3(), H3(), H3(), H3()});
  Diagram r = simplify(d);
  EXPECT_TRUE(r.nodes.empty());
  EXPECT_LE(max_distance(interpret(r), interpret(d)), 1e-12);
  Diagram two = simplify(seq({H3(), H3()}));
  EXPECT_EQ(two.nodes.size(), 1u);
  EXPECT_LE(max_distance(interpret(two), interpret(seq({H3(), H3()}))), 1e-12);
}

TEST(Simplify, CnotIsAFixpoint) {
  Diagram d = seq({par({Z0(1, 2), I()}), par({I(), X0(2, 1)})});
  auto r = simplify_traced(d);
  EXPECT_EQ(r.steps, 0u);
  EXPECT_EQ(r.diagram, d);
}

TEST(Simplify, ClosedLoopsAreCounted) {
  Diagram d = trace1(Z0());
  Diagram r = simplify(d);
  EXPECT_TRUE(r.nodes.empty());
  EXPECT_LE(max_distance(interpret(r), interpret(d)), 1e-12);
}

TEST(Simplify, RandomDiagramsPreserveSemantics) {
  std::mt19937_64 rng(808);
  RandomDiagramOptions opt;
  opt.max_nodes = 10;
  opt.self_loops = true;
  for (int t = 0; t < 200; ++t) {
    Diagram d = random_zx_diagram(rng, opt);
    auto r = simplify_traced(d);
    EXPECT_LE(r.diagram.nodes.size(), d.nodes.size());
    EXPECT_LE(r.steps, r.bound);
    EXPECT_TRUE(same_up_to_scalar(r.diagram, d)) << t;
    // Fixpoint: nothing left to apply.
    for (Pass p : default_passes()) EXPECT_TRUE(detail::pass_matches(r.diagram, p).empty());
  }
}

TEST(Simplify, SinglePassSelection) {
  Diagram d = seq({Z(pi()), H(), H(), Z(pi())});
  Diagram only_h = simplify(d, {Pass::Hadamard});
  EXPECT_EQ(only_h.nodes.size(), 2u);
  EXPECT_EQ(simplify(only_h, {Pass::Fusion}).nodes.size(), 1u);
  EXPECT_EQ(parse_pass("hopf"), Pass::Hopf);
  EXPECT_THROW(parse_pass("magic"), std::invalid_argument);
}
