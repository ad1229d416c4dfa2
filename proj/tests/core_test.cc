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

#include <numeric>

#include "chainlab/error.h"
#include "chainlab/structure.h"
#include "testkit.h"

namespace chainlab {
namespace {

using testkit::Cycle;
using testkit::LinearOrder;

TEST(SignatureTest, RejectsDuplicateNamesAndBadArity) {
  EXPECT_THROW(Signature({{"E", 2}, {"E", 1}}), DomainError);
  EXPECT_THROW(Signature({{"E", 0}}), DomainError);
  EXPECT_THROW(Signature({{"", 1}}), DomainError);
  EXPECT_NO_THROW(Signature(std::vector<Symbol>{}));
}

TEST(SignatureTest, IndexAndMaxArity) {
  const Signature sig({{"U", 1}, {"T", 3}, {"E", 2}});
  EXPECT_EQ(sig.IndexOf("T"), 1u);
  EXPECT_FALSE(sig.IndexOf("X").has_value());
  EXPECT_EQ(sig.MaxArity(), 3);
  EXPECT_EQ(Signature().MaxArity(), 0);
}

TEST(StructureTest, ValidatesTuples) {
  const Signature sig({{"E", 2}});
  EXPECT_THROW(Structure(sig, 3, {{{0, 3}}}), DomainError);
  EXPECT_THROW(Structure(sig, 3, {{{0}}}), DomainError);
  EXPECT_THROW(Structure(sig, 3, {}), DomainError);
  EXPECT_THROW(Structure(sig, -1, {{}}), DomainError);
}

TEST(StructureTest, SortsDeduplicatesAndAdmitsRepeats) {
  const Structure y(Signature({{"E", 2}}), 3, {{{2, 1}, {1, 1}, {2, 1}}});
  EXPECT_EQ(y.tuples(0), (std::vector<Tuple>{{1, 1}, {2, 1}}));
  EXPECT_TRUE(y.Holds(0, Tuple{1, 1}));
  EXPECT_FALSE(y.Holds(0, Tuple{1, 2}));
}

TEST(StructureTest, EmptyDomainIsLegal) {
  const Structure y = Structure::Empty(Signature({{"E", 2}}), 0);
  EXPECT_EQ(y.size(), 0);
  EXPECT_TRUE(y.tuples(0).empty());
}

TEST(InducedSubstructureTest, CycleToPath) {
  const Structure sub = InducedSubstructure(Cycle(5), std::vector<Element>{0, 1, 2});
  EXPECT_EQ(sub, testkit::Path(3));
}

TEST(InducedSubstructureTest, RelabelsOrderPreservingly) {
  // {1,3,4} of the 5-cycle: only the edge 3-4 survives, as 1-2.
  const Structure sub = InducedSubstructure(Cycle(5), std::vector<Element>{4, 1, 3});
  EXPECT_EQ(sub.tuples(0), (std::vector<Tuple>{{1, 2}, {2, 1}}));
}

TEST(InducedSubstructureTest, FullDomainIsIdentity) {
  const Structure y = Cycle(5);
  EXPECT_EQ(InducedSubstructure(y, std::vector<Element>{0, 1, 2, 3, 4}), y);
}

TEST(InducedSubstructureTest, ChainRestrictsToChain) {
  EXPECT_EQ(InducedSubstructure(LinearOrder(5), std::vector<Element>{1, 3}),
            LinearOrder(2));
}

TEST(InducedSubstructureTest, Errors) {
  EXPECT_THROW(InducedSubstructure(Cycle(5), std::vector<Element>{}),
               DomainError);
  EXPECT_THROW(InducedSubstructure(Cycle(5), std::vector<Element>{0, 5}),
               DomainError);
}

TEST(InducedSubstructureTest, RepeatsCollapse) {
  EXPECT_EQ(InducedSubstructure(Cycle(5), std::vector<Element>{1, 2, 1}),
            InducedSubstructure(Cycle(5), std::vector<Element>{1, 2}));
}

TEST(InducedSubstructureTest, CompositionCoherence) {
  SplitMix64 rng(3);
  for (const Structure& y : testkit::RandomCorpus(11, 60, 1, 6)) {
    std::vector<Element> h = testkit::RandomSubset(rng, y.size());
    if (h.empty()) h = {0};
    std::vector<Element> idx = testkit::RandomSubset(rng, h.size());
    if (idx.empty()) idx = {0};
    std::vector<Element> direct;
    for (Element i : idx) direct.push_back(h[i]);
    EXPECT_EQ(InducedSubstructure(InducedSubstructure(y, h), idx),
              InducedSubstructure(y, direct));
  }
}

TEST(ReductTest, KeepsSignatureOrder) {
  const Structure y(Signature({{"E", 2}, {"U", 1}, {"F", 2}}), 2,
                    {{{0, 1}}, {{1}}, {{1, 0}}});
  const std::vector<std::string> keep = {"F", "E"};
  const Structure r = Reduct(y, keep);
  EXPECT_EQ(r.signature(), Signature({{"E", 2}, {"F", 2}}));
  EXPECT_EQ(r.tuples(0), y.tuples(0));
  EXPECT_EQ(r.tuples(1), y.tuples(2));
}

TEST(ReductTest, AllAndNone) {
  const Structure y(Signature({{"E", 2}, {"U", 1}}), 3, {{{0, 1}}, {{2}}});
  EXPECT_EQ(Reduct(y, std::vector<std::string>{"E", "U"}), y);
  const Structure bare = Reduct(y, std::vector<std::string>{});
  EXPECT_TRUE(bare.signature().empty());
  EXPECT_EQ(bare.size(), 3);
}

TEST(ReductTest, UnknownSymbol) {
  EXPECT_THROW(Reduct(Cycle(3), std::vector<std::string>{"Q"}), DomainError);
}

TEST(ReductTest, CommutesWithRestriction) {
  for (const Structure& y : testkit::RandomCorpus(5, 40, 1, 6)) {
    std::vector<std::string> keep = {y.signature()[0].name};
    std::vector<Element> h;
    for (Element e = 0; e < y.size(); e += 2) h.push_back(e);
    EXPECT_EQ(Reduct(InducedSubstructure(y, h), keep),
              InducedSubstructure(Reduct(y, keep), h));
  }
}

TEST(CompanionTest, Construction) {
  const Companion a = CompanionStructure(5, std::vector<Element>{4},
                                         std::vector<Element>{0, 1, 2, 3});
  EXPECT_EQ(a.order, (Order{4, 0, 1, 2, 3}));
  EXPECT_EQ(a.constants, (std::vector<Element>{4}));

  const Companion b = CompanionStructure(3, std::vector<Element>{},
                                         std::vector<Element>{2, 1, 0});
  EXPECT_EQ(b.order, (Order{2, 1, 0}));
  EXPECT_TRUE(b.constants.empty());

  const Companion c = CompanionStructure(4, std::vector<Element>{1, 0},
                                         std::vector<Element>{3, 2});
  EXPECT_EQ(c.order, (Order{1, 0, 3, 2}));
  EXPECT_EQ(c.constants, (std::vector<Element>{1, 0}));
}

TEST(CompanionTest, ConstructionErrors) {
  EXPECT_THROW(CompanionStructure(3, std::vector<Element>{0},
                                  std::vector<Element>{0, 1, 2}),
               DomainError);
  EXPECT_THROW(CompanionStructure(3, std::vector<Element>{0},
                                  std::vector<Element>{1}),
               DomainError);
  EXPECT_THROW(CompanionStructure(3, std::vector<Element>{0, 0},
                                  std::vector<Element>{1, 2}),
               DomainError);
  EXPECT_THROW(CompanionStructure(3, std::vector<Element>{3},
                                  std::vector<Element>{0, 1, 2}),
               DomainError);
}

TEST(CompanionTest, ConstructedCompanionsPassAxioms) {
  for (int m = 0; m <= 5; ++m) {
    Order order(m);
    std::iota(order.begin(), order.end(), 0);
    do {
      for (int k = 0; k <= m; ++k) {
        const Companion x = CompanionStructure(
            m, std::span<const Element>(order.data(), k),
            std::span<const Element>(order.data() + k, m - k));
        EXPECT_TRUE(ValidateCompanionAxioms(x).all());
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(CompanionTest, ConstantsOutOfIndexOrder) {
  // a_1 = 2 precedes a_0 = 0 in the order.
  const Companion x{3, {2, 0, 1}, {0, 2}};
  const CompanionAxioms ax = ValidateCompanionAxioms(x);
  EXPECT_TRUE(ax.linear_order);
  EXPECT_TRUE(ax.distinct_singletons);
  EXPECT_FALSE(ax.ordered_as_indices);
}

TEST(CompanionTest, ConstantOutsideInitialSegment) {
  const Companion x{3, {0, 1, 2}, {1}};
  const CompanionAxioms ax = ValidateCompanionAxioms(x);
  EXPECT_TRUE(ax.ordered_as_indices);
  EXPECT_FALSE(ax.initial_segment);
}

TEST(CompanionTest, RepeatedConstant) {
  const Companion x{3, {0, 1, 2}, {0, 0}};
  EXPECT_FALSE(ValidateCompanionAxioms(x).distinct_singletons);
}

TEST(CompanionTest, AsStructure) {
  const Companion x = CompanionStructure(3, std::vector<Element>{2},
                                         std::vector<Element>{0, 1});
  const Structure xs = CompanionAsStructure(x);
  EXPECT_EQ(xs.signature(), Signature({{"R", 2}, {"U0", 1}}));
  EXPECT_EQ(xs.tuples(0), (std::vector<Tuple>{{0, 1}, {2, 0}, {2, 1}}));
  EXPECT_EQ(xs.tuples(1), (std::vector<Tuple>{{2}}));
}

}  // namespace
}  // namespace chainlab
