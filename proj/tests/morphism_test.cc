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

#include <map>
#include <numeric>

#include "chainlab/error.h"
#include "chainlab/morphism.h"
#include "testkit.h"

namespace chainlab {
namespace {

using testkit::Cycle;
using testkit::LinearOrder;
using testkit::Path;

PartialMap Map(std::vector<PartialMap::Pair> pairs) {
  return PartialMap(std::move(pairs));
}

TEST(PartialMapTest, RejectsNonInjectiveOrNonFunctional) {
  EXPECT_THROW(Map({{0, 1}, {0, 2}}), DomainError);
  EXPECT_THROW(Map({{0, 1}, {2, 1}}), DomainError);
  EXPECT_NO_THROW(Map({{0, 0}, {1, 1}}));
}

TEST(PartialMapTest, SortsAndApplies) {
  const PartialMap p = Map({{3, 0}, {1, 2}});
  EXPECT_EQ(p.pairs(), (std::vector<PartialMap::Pair>{{1, 2}, {3, 0}}));
  EXPECT_EQ(p(3), 0);
  EXPECT_FALSE(p(2).has_value());
  EXPECT_EQ(p.Domain(), (std::vector<Element>{1, 3}));
  EXPECT_EQ(p.Range(), (std::vector<Element>{0, 2}));
}

TEST(IsPartialAutomorphismTest, ChainExamples) {
  EXPECT_TRUE(IsPartialAutomorphism(LinearOrder(5), Map({{0, 1}, {2, 3}})));
  EXPECT_FALSE(IsPartialAutomorphism(LinearOrder(5), Map({{0, 1}, {2, 0}})));
}

TEST(IsPartialAutomorphismTest, CycleNeighbours) {
  const Structure c5 = Cycle(5);
  const PartialMap p = Map({{0, 0}, {1, 4}});
  // Oracle: check the four tuples over {0,1} by hand.
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
    EXPECT_EQ(c5.Holds(0, Tuple{a, b}), c5.Holds(0, Tuple{*p(a), *p(b)}));
  }
  EXPECT_TRUE(IsPartialAutomorphism(c5, p));
}

TEST(IsPartialAutomorphismTest, EmptyMapAndRangeErrors) {
  EXPECT_TRUE(IsPartialAutomorphism(Cycle(5), PartialMap()));
  EXPECT_THROW(IsPartialAutomorphism(Cycle(5), Map({{0, 5}})), DomainError);
}

TEST(EnumerateTest, PureSet) {
  const Structure y = Structure::Empty(Signature(), 3);
  const auto maps = EnumeratePartialAutomorphisms(y, 1);
  ASSERT_EQ(maps.size(), 10u);
  EXPECT_TRUE(maps.front().empty());
}

TEST(EnumerateTest, ThreeChainCountsBySize) {
  const auto maps = EnumeratePartialAutomorphisms(LinearOrder(3), 3);
  std::map<std::size_t, int> by_size;
  for (const PartialMap& p : maps) ++by_size[p.size()];
  // Increasing injections between k-subsets: C(3,k)^2.
  EXPECT_EQ(maps.size(), 20u);
  EXPECT_EQ(by_size, (std::map<std::size_t, int>{{0, 1}, {1, 9}, {2, 9}, {3, 1}}));
}

TEST(EnumerateTest, UnaryMembershipPreserved) {
  const auto maps = EnumeratePartialAutomorphisms(testkit::UnaryMarked(2, {0}), 1);
  EXPECT_EQ(maps, (std::vector<PartialMap>{Map({}), Map({{0, 0}}), Map({{1, 1}})}));
}

TEST(EnumerateTest, LexicographicAndMatchesBruteForce) {
  for (const Structure& y : testkit::RandomCorpus(21, 40, 1, 4)) {
    const auto maps = EnumeratePartialAutomorphisms(y, y.size());
    EXPECT_TRUE(std::is_sorted(maps.begin(), maps.end()));
    EXPECT_EQ(maps, testkit::BruteForcePartialAutomorphisms(y, y.size()));
  }
}

TEST(EnumerateTest, RespectsMaxDom) {
  for (const PartialMap& p : EnumeratePartialAutomorphisms(Cycle(5), 2)) {
    EXPECT_LE(p.size(), 2u);
  }
}

TEST(EnumerateTest, ChainAndReverseShareMaps) {
  for (int m = 0; m <= 5; ++m) {
    std::vector<Element> flip(m);
    for (int i = 0; i < m; ++i) flip[i] = m - 1 - i;
    EXPECT_EQ(EnumeratePartialAutomorphisms(LinearOrder(m), m),
              EnumeratePartialAutomorphisms(testkit::Relabel(LinearOrder(m), flip), m));
  }
}

TEST(EnumerateTest, RestrictionClosed) {
  for (const Structure& y : testkit::RandomCorpus(8, 30, 1, 4)) {
    for (const PartialMap& p : EnumeratePartialAutomorphisms(y, y.size())) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        auto pairs = p.pairs();
        pairs.erase(pairs.begin() + i);
        EXPECT_TRUE(IsPartialAutomorphism(y, PartialMap(pairs)));
      }
    }
  }
}

TEST(FindIsomorphismTest, PathsWithDifferentCentres) {
  const Structure a = Path(3);
  const Structure b(Signature({{"E", 2}}), 3, {{{1, 0}, {0, 1}, {0, 2}, {2, 0}}});
  const auto iso = FindIsomorphism(a, b);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(iso->size(), 3u);
  EXPECT_EQ((*iso)(1), 0);  // centre to centre
  std::vector<Element> f(3);
  for (const auto& [s, t] : iso->pairs()) f[s] = t;
  EXPECT_EQ(testkit::Relabel(a, f), b);
}

TEST(FindIsomorphismTest, CycleIsNotPath) {
  EXPECT_FALSE(FindIsomorphism(Cycle(5), Path(5)).has_value());
}

TEST(FindIsomorphismTest, SelfAndMismatches) {
  EXPECT_TRUE(FindIsomorphism(Cycle(5), Cycle(5)).has_value());
  EXPECT_FALSE(FindIsomorphism(Cycle(4), Cycle(5)).has_value());
  EXPECT_THROW(FindIsomorphism(Cycle(3), testkit::UnaryMarked(3, {0})),
               DomainError);
}

TEST(FindIsomorphismTest, FirstWitnessInPermutationOrder) {
  // The 3-cycle has all 6 bijections as automorphisms; identity comes first.
  const auto iso = FindIsomorphism(Cycle(3), Cycle(3));
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(*iso, Map({{0, 0}, {1, 1}, {2, 2}}));
}

TEST(CanonicalFormTest, InvariantUnderRelabeling) {
  SplitMix64 rng(17);
  for (const Structure& y : testkit::RandomCorpus(4, 40, 1, 6)) {
    std::vector<Element> perm(y.size());
    std::iota(perm.begin(), perm.end(), 0);
    testkit::Shuffle(rng, perm);
    EXPECT_EQ(ComputeCanonicalForm(y),
              ComputeCanonicalForm(testkit::Relabel(y, perm)));
  }
}

TEST(CanonicalFormTest, CycleAndPathDiffer) {
  EXPECT_NE(ComputeCanonicalForm(Cycle(5)), ComputeCanonicalForm(Path(5)));
}

TEST(CanonicalFormTest, PureSetIndependentOfInput) {
  const Structure a(Signature({{"E", 2}}), 4, {{}});
  EXPECT_EQ(ComputeCanonicalForm(a), ComputeCanonicalForm(Structure::Empty(a.signature(), 4)));
}

TEST(CanonicalFormTest, AgreesWithBruteForceIsomorphism) {
  const auto corpus = testkit::RandomCorpus(99, 80, 3, 4);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const Structure& a = corpus[i];
      const Structure& b = corpus[j];
      if (a.size() != b.size() || !(a.signature() == b.signature())) continue;
      const bool iso = testkit::BruteForceIsomorphic(a, b);
      EXPECT_EQ(ComputeCanonicalForm(a) == ComputeCanonicalForm(b), iso);
      EXPECT_EQ(FindIsomorphism(a, b).has_value(), iso);
    }
  }
}

TEST(CanonicalFormTest, SizeCap) {
  EXPECT_NO_THROW(ComputeCanonicalForm(Cycle(8)));
  EXPECT_THROW(ComputeCanonicalForm(Cycle(9)), UnsupportedSizeError);
}

TEST(CanonicalFormTest, HexRoundTrip) {
  const CanonicalForm f = ComputeCanonicalForm(Cycle(5));
  EXPECT_EQ(CanonicalForm::FromHex(f.Hex()), f);
  EXPECT_THROW(CanonicalForm::FromHex("abc"), ParseError);
  EXPECT_THROW(CanonicalForm::FromHex("zz"), ParseError);
}

}  // namespace
}  // namespace chainlab
