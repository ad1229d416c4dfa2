// Copyright 2026 The chainlab Authors.
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

#include "chainlab/error.h"
#include "chainlab/formula.h"
#include "testkit.h"

namespace chainlab {
namespace {

using testkit::Cycle;

// Direct recursive evaluation, used as the oracle for Evaluate.
bool Naive(const Formula& f, const Structure& y, Assignment a) {
  switch (f.kind()) {
    case Formula::Kind::kEq:
      return a.at(f.vars()[0]) == a.at(f.vars()[1]);
    case Formula::Kind::kRel: {
      Tuple t;
      for (const std::string& v : f.vars()) t.push_back(a.at(v));
      return y.Holds(*y.signature().IndexOf(f.symbol()), t);
    }
    case Formula::Kind::kNot:
      return !Naive(f.children()[0], y, a);
    case Formula::Kind::kAnd:
      for (const Formula& c : f.children()) if (!Naive(c, y, a)) return false;
      return true;
    case Formula::Kind::kOr:
      for (const Formula& c : f.children()) if (Naive(c, y, a)) return true;
      return false;
    case Formula::Kind::kExists:
    case Formula::Kind::kForall: {
      const bool exists = f.kind() == Formula::Kind::kExists;
      for (Element e = 0; e < y.size(); ++e) {
        a[f.bound_var()] = e;
        if (Naive(f.children()[0], y, a) == exists) return exists;
      }
      return !exists;
    }
  }
  return false;
}

TEST(FormulaTest, PrintParseRoundTrip) {
  const std::string text =
      "(forall u (forall v (or (not (rel E u v)) (rel E v u))))";
  const Formula f = ParseFormula(text);
  EXPECT_EQ(f.ToString(), text);
  EXPECT_EQ(ParseFormula("(and)").ToString(), "(and)");
  EXPECT_EQ(ParseFormula("  (=   v0\n v1 ) ").ToString(), "(= v0 v1)");
}

TEST(FormulaTest, RandomRoundTrip) {
  SplitMix64 rng(5);
  const Signature sig({{"U", 1}, {"E", 2}, {"T", 3}});
  for (int i = 0; i < 300; ++i) {
    const Formula f = testkit::RandomFormula(rng, sig, {"a", "b", "c"}, 3, 12);
    EXPECT_EQ(ParseFormula(f.ToString()), f);
    EXPECT_EQ(ParseFormula(f.ToString()).ToString(), f.ToString());
  }
}

TEST(FormulaTest, ParseErrors) {
  for (const char* bad : {"", "(", "(rel)", "(= a)", "(= a b c)", "(not)",
                          "(exists (= a b))", "(foo a)", "(= a b) x",
                          "(not (= a b) (= a b))", "a"}) {
    EXPECT_THROW(ParseFormula(bad), ParseError) << bad;
  }
}

TEST(FormulaTest, Metrics) {
  const Formula f = ParseFormula("(exists v (and (rel E v w) (forall u (= u v))))");
  EXPECT_EQ(f.FreeVariables(), (std::set<std::string>{"w"}));
  EXPECT_EQ(f.QuantifierDepth(), 2);
  EXPECT_EQ(f.NodeCount(), 5u);
}

TEST(EvaluateTest, Examples) {
  const Structure loop(Signature({{"R", 2}}), 3, {{{1, 1}}});
  EXPECT_TRUE(Evaluate(ParseFormula("(exists v (rel R v v))"), loop));
  EXPECT_TRUE(Evaluate(
      ParseFormula("(forall u (forall v (or (not (rel E u v)) (rel E v u))))"),
      Cycle(5)));
  EXPECT_FALSE(Evaluate(ParseFormula("(= v0 v1)"), Cycle(5), {{"v0", 2}, {"v1", 3}}));
}

TEST(EvaluateTest, ConstantsAndEmptyDomain) {
  EXPECT_TRUE(Evaluate(Formula::True(), Cycle(3)));
  EXPECT_FALSE(Evaluate(Formula::False(), Cycle(3)));
  const Structure empty = Structure::Empty(Signature({{"E", 2}}), 0);
  EXPECT_FALSE(Evaluate(ParseFormula("(exists v (= v v))"), empty));
  EXPECT_TRUE(Evaluate(ParseFormula("(forall v (rel E v v))"), empty));
}

TEST(EvaluateTest, ShadowingRestoresOuterBinding) {
  // The inner v ranges over the domain; the outer v stays at 0 afterwards.
  const Formula f = ParseFormula(
      "(exists v (and (= v w) (exists v (rel E w v)) (= v w)))");
  EXPECT_TRUE(Evaluate(f, Cycle(4), {{"w", 0}}));
  const Formula g = ParseFormula("(and (exists v (not (rel E v v))) (= v w))");
  EXPECT_TRUE(Evaluate(g, Cycle(4), {{"v", 1}, {"w", 1}}));
}

TEST(EvaluateTest, Errors) {
  EXPECT_THROW(Evaluate(ParseFormula("(= a b)"), Cycle(3), {{"a", 0}}), DomainError);
  EXPECT_THROW(Evaluate(ParseFormula("(rel Q a a)"), Cycle(3), {{"a", 0}}), DomainError);
  EXPECT_THROW(Evaluate(ParseFormula("(rel E a)"), Cycle(3), {{"a", 0}}), DomainError);
  EXPECT_THROW(Evaluate(ParseFormula("(= a a)"), Cycle(3), {{"a", 3}}), DomainError);
}

TEST(EvaluateTest, AgreesWithDirectRecursion) {
  SplitMix64 rng(77);
  const std::vector<std::string> vars = {"a", "b", "c"};
  for (const Structure& y : testkit::RandomCorpus(40, 60, 1, 5)) {
    for (int i = 0; i < 10; ++i) {
      const Formula f = testkit::RandomFormula(rng, y.signature(), vars, 3, 10);
      const Assignment a = testkit::RandomAssignment(rng, vars, y.size());
      EXPECT_EQ(Evaluate(f, y, a), Naive(f, y, a)) << f.ToString();
    }
  }
}

}  // namespace
}  // namespace chainlab
