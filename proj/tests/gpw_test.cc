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

#include "chainlab/chainability.h"
#include "chainlab/error.h"
#include "chainlab/gpw.h"
#include "testkit.h"

namespace chainlab {
namespace {

// Oracle: filter every arrangement by full quantification.
std::vector<Order> BruteFamily(const Structure& y, const std::vector<Element>& f) {
  Order rest;
  for (Element e = 0; e < y.size(); ++e) {
    if (std::find(f.begin(), f.end(), e) == f.end()) rest.push_back(e);
  }
  std::vector<Order> out;
  do {
    if (testkit::FullQuantificationChainable(y, {f, rest})) out.push_back(rest);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

TEST(EnumerateChainingOrdersTest, Chain) {
  const Structure y = testkit::LinearOrder(5);
  const ChainOrderFamily fam = EnumerateChainingOrders(y, std::vector<Element>{});
  EXPECT_EQ(fam.orders, (std::vector<Order>{{0, 1, 2, 3, 4}, {4, 3, 2, 1, 0}}));
  EXPECT_EQ(fam.orders, BruteFamily(y, {}));
}

TEST(EnumerateChainingOrdersTest, CyclicOrder) {
  const Structure y = testkit::CyclicOrder(5);
  const ChainOrderFamily fam = EnumerateChainingOrders(y, std::vector<Element>{});
  EXPECT_EQ(fam.orders.size(), 10u);
  EXPECT_EQ(fam.orders, BruteFamily(y, {}));
  EXPECT_EQ(fam.orders, RotationPattern({0, 1, 2, 3, 4}));
}

TEST(EnumerateChainingOrdersTest, MarkedPoint) {
  const Structure y = testkit::UnaryMarked(5, {0});
  const ChainOrderFamily fam = EnumerateChainingOrders(y, std::vector<Element>{0});
  EXPECT_EQ(fam.f_set, (std::vector<Element>{0}));
  EXPECT_EQ(fam.orders.size(), 24u);
}

TEST(EnumerateChainingOrdersTest, SizeCap) {
  EXPECT_THROW(EnumerateChainingOrders(testkit::Cycle(9), std::vector<Element>{}),
               UnsupportedSizeError);
  EXPECT_NO_THROW(EnumerateChainingOrders(testkit::Cycle(9), std::vector<Element>{0}));
}

TEST(ClassifyFamilyTest, Examples) {
  const auto all = ClassifyFamily(
      EnumerateChainingOrders(testkit::UnaryMarked(5, {0}), std::vector<Element>{0}));
  EXPECT_EQ(all.tag, GpwTag::kAllOrders);
  EXPECT_EQ(all.family_size, 24u);

  const auto rot = ClassifyFamily(
      EnumerateChainingOrders(testkit::CyclicOrder(5), std::vector<Element>{}));
  EXPECT_EQ(rot.tag, GpwTag::kRotationFamily);
  EXPECT_EQ(rot.base, (Order{0, 1, 2, 3, 4}));
  EXPECT_EQ(rot.pattern_size, 10u);

  const auto bp = ClassifyFamily(
      EnumerateChainingOrders(testkit::LinearOrder(5), std::vector<Element>{}));
  EXPECT_EQ(bp.tag, GpwTag::kBoundedPerturbation);
  EXPECT_TRUE(bp.k_set.empty());
  EXPECT_TRUE(bp.h_set.empty());
  EXPECT_EQ(bp.middle, (Order{0, 1, 2, 3, 4}));
  EXPECT_TRUE(bp.also_matches.empty());
  // No rotation base reproduces {M, M*}.
  EXPECT_GT(RotationPattern({0, 1, 2, 3, 4}).size(), 2u);
}

TEST(ClassifyFamilyTest, Unmatched) {
  const ChainOrderFamily fam{{}, {{0, 1, 2, 3}, {0, 2, 1, 3}, {3, 1, 2, 0}, {3, 2, 1, 0}}};
  const auto c = ClassifyFamily(fam);
  EXPECT_EQ(c.tag, GpwTag::kUnmatched);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(*c.witness, (Order{0, 2, 1, 3}));
  EXPECT_TRUE(ExpandPattern(c, std::vector<Element>{0, 1, 2, 3}).empty());
}

TEST(ClassifyFamilyTest, MissingReverseIsUnmatched) {
  const auto c = ClassifyFamily({{}, {{0, 1, 2}}});
  EXPECT_EQ(c.tag, GpwTag::kUnmatched);
  EXPECT_EQ(c.witness, (Order{2, 1, 0}));
}

TEST(ClassifyFamilyTest, Errors) {
  EXPECT_THROW(ClassifyFamily({{}, {}}), DomainError);
  EXPECT_THROW(ClassifyFamily({{}, {{0, 1}, {0, 2}}}), DomainError);
}

TEST(PatternTest, Sizes) {
  EXPECT_EQ(RotationPattern({0, 1, 2, 3}).size(), 8u);
  EXPECT_EQ(RotationPattern({0, 1}).size(), 2u);
  EXPECT_EQ(PerturbationPattern(std::vector<Element>{0}, {1, 2}, std::vector<Element>{3}),
            (std::vector<Order>{{0, 1, 2, 3}, {3, 2, 1, 0}}));
  EXPECT_EQ(PerturbationPattern(std::vector<Element>{0, 1}, {2}, std::vector<Element>{3}),
            (std::vector<Order>{{0, 1, 2, 3}, {1, 0, 2, 3}, {3, 2, 0, 1}, {3, 2, 1, 0}}));
}

TEST(ClassifyFamilyTest, KernelFamiliesAreClosedAndReproduced) {
  for (const Structure& y : testkit::RandomCorpus(17, 40, 3, 5)) {
    const KernelReport k = Kernel(y, y.size());
    for (const ChainWitness& w : k.minimal_sets) {
      const ChainOrderFamily fam = EnumerateChainingOrders(y, w.f_set);
      EXPECT_EQ(fam.orders, BruteFamily(y, w.f_set));
      for (const Order& o : fam.orders) {
        const Order back(o.rbegin(), o.rend());
        EXPECT_TRUE(std::binary_search(fam.orders.begin(), fam.orders.end(), back));
      }
      const auto c = ClassifyFamily(fam);
      EXPECT_EQ(c.family_size, fam.orders.size());
      if (c.tag != GpwTag::kUnmatched) {
        EXPECT_EQ(ExpandPattern(c, fam.orders.front()), fam.orders);
      }
      // Classification ignores the order members are listed in.
      ChainOrderFamily shuffled = fam;
      std::reverse(shuffled.orders.begin(), shuffled.orders.end());
      EXPECT_EQ(ClassifyFamily(shuffled).tag, c.tag);
    }
  }
}

TEST(GpwTagTest, Names) {
  EXPECT_EQ(GpwTagName(GpwTag::kAllOrders), "AllOrders");
  EXPECT_EQ(GpwTagName(GpwTag::kRotationFamily), "RotationFamily");
  EXPECT_EQ(GpwTagName(GpwTag::kBoundedPerturbation), "BoundedPerturbation");
  EXPECT_EQ(GpwTagName(GpwTag::kUnmatched), "Unmatched");
}

}  // namespace
}  // namespace chainlab
