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

#include "chainlab/chainability.h"
#include "chainlab/definability.h"
#include "chainlab/error.h"
#include "chainlab/gpw.h"
#include "chainlab/json_io.h"
#include "chainlab/random.h"
#include "testkit.h"

namespace chainlab {
namespace {

TEST(JsonTest, StructureRoundTrip) {
  for (const Structure& y : testkit::RandomCorpus(6, 50, 0, 5)) {
    const std::string text = DumpJson(StructureToJson(y));
    EXPECT_EQ(StructureFromJson(ParseJson(text)), y);
  }
}

TEST(JsonTest, StructureLayout) {
  EXPECT_EQ(DumpJson(StructureToJson(testkit::Path(2))),
            R"({"signature":[{"name":"E","arity":2}],"size":2,"relations":{"E":[[0,1],[1,0]]}})");
}

TEST(JsonTest, MissingRelationIsEmpty) {
  const Structure y = StructureFromJson(
      ParseJson(R"({"signature":[{"name":"E","arity":2}],"size":3})"));
  EXPECT_TRUE(y.tuples(0).empty());
}

TEST(JsonTest, StructureErrors) {
  EXPECT_THROW(ParseJson("{"), ParseError);
  EXPECT_THROW(StructureFromJson(ParseJson(R"({"size":3})")), ParseError);
  EXPECT_THROW(StructureFromJson(ParseJson(R"({"signature":[],"size":"3"})")), ParseError);
  EXPECT_THROW(StructureFromJson(ParseJson(
                   R"({"signature":[{"name":"E","arity":2}],"size":2,"relations":{"E":[[0,2]]}})")),
               DomainError);
  EXPECT_THROW(StructureFromJson(ParseJson(
                   R"({"signature":[{"name":"E","arity":2}],"size":2,"relations":{"E":[[0]]}})")),
               DomainError);
}

TEST(JsonTest, CompanionRoundTrip) {
  SplitMix64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Companion x = testkit::RandomCompanion(rng, rng.NextInt(0, 6));
    const Companion back = CompanionFromJson(ParseJson(DumpJson(CompanionToJson(x))));
    EXPECT_EQ(back.size, x.size);
    EXPECT_EQ(back.order, x.order);
    EXPECT_EQ(back.constants, x.constants);
  }
  EXPECT_THROW(CompanionFromJson(ParseJson(R"({"size":2,"order":"x"})")), ParseError);
}

TEST(JsonTest, Reports) {
  EXPECT_EQ(DumpJson(KernelReportToJson(Kernel(testkit::Cycle(5), 2))),
            R"({"min_size":null,"minimal_sets":[],"search_bound":2})");
  EXPECT_EQ(DumpJson(ProfileReportToJson(Profile(testkit::Cycle(5), 5))),
            R"({"values":[1,2,2,1,1]})");
  EXPECT_EQ(DumpJson(LiteralTypeToJson(LiteralType{{0, 1}, {0, -1}})),
            R"({"blocks":[0,1],"constants":[0,null]})");
  const Companion x = CompanionStructure(3, std::vector<Element>{}, std::vector<Element>{0, 1, 2});
  EXPECT_EQ(DumpJson(DefinitionsToJson(ExtractDefinitions(x, testkit::LinearOrder(3)))),
            R"({"constants":0,"definitions":[{"symbol":"E","arity":2,"types":[{"blocks":[0,1],"constants":[null,null]}],"formula":")" +
                RenderDefinition({"E", 2, {{{0, 1}, {-1, -1}}}},
                                 std::vector<std::string>{"v0", "v1"}, 0)
                    .ToString() +
                R"("}]})");
}

TEST(JsonTest, UnmatchedCarriesWitness) {
  const ChainOrderFamily fam{{}, {{0, 1, 2}}};
  const Json j = ClassificationToJson(ClassifyFamily(fam));
  EXPECT_EQ(j["tag"], "Unmatched");
  EXPECT_EQ(j["witness"], Json::parse("[2,1,0]"));
  EXPECT_EQ(j["evidence"]["family_size"], 1);
}

TEST(GenerateTest, Deterministic) {
  RandomSpec spec;
  spec.seed = 7;
  spec.size = 6;
  spec.symbols = 2;
  spec.min_arity = 1;
  spec.max_arity = 3;
  EXPECT_EQ(Generate(spec), Generate(spec));
  RandomSpec other = spec;
  other.seed = 8;
  EXPECT_NE(Generate(spec), Generate(other));
  const Structure y = Generate(spec);
  EXPECT_EQ(y.signature()[0].name, "S0");
  EXPECT_EQ(y.signature()[1].name, "S1");
}

TEST(GenerateTest, DensityExtremes) {
  RandomSpec spec;
  spec.size = 4;
  spec.density = 0.0;
  EXPECT_TRUE(Generate(spec).tuples(0).empty());
  spec.density = 1.0;
  EXPECT_EQ(Generate(spec).tuples(0).size(), 16u);
}

TEST(GenerateTest, Caps) {
  RandomSpec spec;
  spec.size = 17;
  EXPECT_THROW(Generate(spec), DomainError);
  spec = {};
  spec.max_arity = 5;
  EXPECT_THROW(Generate(spec), DomainError);
  spec = {};
  spec.min_arity = 3;
  spec.max_arity = 2;
  EXPECT_THROW(Generate(spec), DomainError);
  spec = {};
  spec.density = 1.5;
  EXPECT_THROW(Generate(spec), DomainError);
  spec = {};
  spec.size = 16;
  spec.min_arity = spec.max_arity = 4;
  spec.density = 0.0;
  EXPECT_NO_THROW(Generate(spec));  // 16^4 = 2^16
}

TEST(SplitMixTest, Ranges) {
  SplitMix64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double d = rng.NextDouble();
    EXPECT_GE(d, 0.0);
    EXPECT_LT(d, 1.0);
    const int k = rng.NextInt(-2, 3);
    EXPECT_GE(k, -2);
    EXPECT_LE(k, 3);
  }
  // Reference value of SplitMix64 seeded with 0.
  EXPECT_EQ(SplitMix64(0).Next(), 0xe220a8397b1dcdafULL);
}

}  // namespace
}  // namespace chainlab
