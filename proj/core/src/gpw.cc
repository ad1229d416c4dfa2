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

#include "chainlab/gpw.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "chainlab/chainability.h"
#include "chainlab/combinatorics.h"
#include "chainlab/error.h"

namespace chainlab {
namespace {

struct Perturbation {
  std::vector<Element> k_set;
  Order middle;
  std::vector<Element> h_set;

  auto key() const { return std::tie(k_set, middle, h_set); }
};

std::optional<Order> FirstRotationBase(const std::vector<Order>& family) {
  const std::size_t n = family.front().size();
  if (family.size() > 2 * std::max<std::size_t>(n, 1)) return std::nullopt;
  for (const Order& base : family) {
    if (RotationPattern(base) == family) return base;
  }
  return std::nullopt;
}

// Least (|K|+|H|, K, M, H) whose perturbation pattern equals the family.
std::optional<Perturbation> FirstPerturbation(const std::vector<Order>& family,
                                              int n) {
  for (int total = 0; total <= n; ++total) {
    std::optional<Perturbation> best;
    std::set<std::tuple<std::vector<Element>, Order, std::vector<Element>>>
        tried;
    for (const Order& base : family) {
      for (int a = 0; a <= total; ++a) {
        const int b = total - a;
        const std::uint64_t block = Factorial(a) * Factorial(b);
        if (block > family.size() || family.size() > 2 * block) continue;
        Perturbation p;
        p.k_set.assign(base.begin(), base.begin() + a);
        p.middle.assign(base.begin() + a, base.end() - b);
        p.h_set.assign(base.end() - b, base.end());
        std::sort(p.k_set.begin(), p.k_set.end());
        std::sort(p.h_set.begin(), p.h_set.end());
        if (!tried.emplace(p.k_set, p.middle, p.h_set).second) continue;
        if (best && !(p.key() < best->key())) continue;
        if (PerturbationPattern(p.k_set, p.middle, p.h_set) == family) {
          best = std::move(p);
        }
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

Order Reversed(Order o) {
  std::reverse(o.begin(), o.end());
  return o;
}

}  // namespace

std::string GpwTagName(GpwTag tag) {
  switch (tag) {
    case GpwTag::kAllOrders:
      return "AllOrders";
    case GpwTag::kRotationFamily:
      return "RotationFamily";
    case GpwTag::kBoundedPerturbation:
      return "BoundedPerturbation";
    case GpwTag::kUnmatched:
      return "Unmatched";
  }
  return "Unmatched";
}

ChainOrderFamily EnumerateChainingOrders(const Structure& y,
                                         std::span<const Element> f_set) {
  const std::set<Element> f(f_set.begin(), f_set.end());
  const int rest = y.size() - static_cast<int>(f.size());
  if (rest > kMaxFamilyRestSize) {
    throw UnsupportedSizeError("chaining-order enumeration is limited to " +
                               std::to_string(kMaxFamilyRestSize) +
                               " elements outside F, got " +
                               std::to_string(rest));
  }
  ChainOrderFamily family;
  family.f_set.assign(f_set.begin(), f_set.end());
  std::sort(family.f_set.begin(), family.f_set.end());
  ForEachChainOrder(y, f_set, [&](const Order& order) {
    family.orders.push_back(order);
    return true;
  });
  return family;
}

std::vector<Order> RotationPattern(const Order& base) {
  std::set<Order> out;
  const std::size_t n = base.size();
  for (std::size_t c = 0; c <= n; ++c) {
    Order rotation(base.begin() + c, base.end());
    rotation.insert(rotation.end(), base.begin(), base.begin() + c);
    out.insert(rotation);
    out.insert(Reversed(std::move(rotation)));
  }
  return {out.begin(), out.end()};
}

std::vector<Order> PerturbationPattern(std::span<const Element> k_set,
                                       const Order& middle,
                                       std::span<const Element> h_set) {
  std::vector<Element> k(k_set.begin(), k_set.end());
  std::vector<Element> h(h_set.begin(), h_set.end());
  std::sort(k.begin(), k.end());
  std::sort(h.begin(), h.end());
  const Order middle_reversed = Reversed(middle);
  std::set<Order> out;
  do {
    do {
      Order forward = k;
      forward.insert(forward.end(), middle.begin(), middle.end());
      forward.insert(forward.end(), h.begin(), h.end());
      out.insert(std::move(forward));
      Order backward = h;
      backward.insert(backward.end(), middle_reversed.begin(),
                      middle_reversed.end());
      backward.insert(backward.end(), k.begin(), k.end());
      out.insert(std::move(backward));
    } while (std::next_permutation(h.begin(), h.end()));
  } while (std::next_permutation(k.begin(), k.end()));
  return {out.begin(), out.end()};
}

GpwClassification ClassifyFamily(const ChainOrderFamily& input) {
  if (input.orders.empty()) {
    throw DomainError("cannot classify an empty family of orders");
  }
  std::vector<Element> elements = input.orders.front();
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw DomainError("order lists an element twice");
  }
  for (const Order& o : input.orders) {
    Order sorted = o;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != elements) {
      throw DomainError("family members arrange different sets");
    }
  }
  std::vector<Order> family = input.orders;
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  const int n = static_cast<int>(elements.size());

  GpwClassification result;
  result.family_size = family.size();

  const bool all_orders = family.size() == Factorial(n);
  const std::optional<Order> rotation_base = FirstRotationBase(family);
  const std::optional<Perturbation> perturbation =
      FirstPerturbation(family, n);

  std::vector<GpwTag> matches;
  if (all_orders) matches.push_back(GpwTag::kAllOrders);
  if (rotation_base) matches.push_back(GpwTag::kRotationFamily);
  if (perturbation) matches.push_back(GpwTag::kBoundedPerturbation);

  if (matches.empty()) {
    result.tag = GpwTag::kUnmatched;
    const Order& least = family.front();
    const Order reverse = Reversed(least);
    for (const Order& o : family) {
      if (o != least && o != reverse) {
        result.witness = o;
        break;
      }
    }
    if (!result.witness) result.witness = reverse;
    return result;
  }

  result.tag = matches.front();
  result.also_matches.assign(matches.begin() + 1, matches.end());
  switch (result.tag) {
    case GpwTag::kRotationFamily:
      result.base = *rotation_base;
      break;
    case GpwTag::kBoundedPerturbation:
      result.k_set = perturbation->k_set;
      result.middle = perturbation->middle;
      result.h_set = perturbation->h_set;
      result.base = result.k_set;
      result.base.insert(result.base.end(), result.middle.begin(),
                         result.middle.end());
      result.base.insert(result.base.end(), result.h_set.begin(),
                         result.h_set.end());
      break;
    default:
      break;
  }
  result.pattern_size = ExpandPattern(result, elements).size();
  return result;
}

std::vector<Order> ExpandPattern(const GpwClassification& c,
                                 std::span<const Element> elements) {
  switch (c.tag) {
    case GpwTag::kAllOrders: {
      Order perm(elements.begin(), elements.end());
      std::sort(perm.begin(), perm.end());
      std::vector<Order> out;
      do {
        out.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return out;
    }
    case GpwTag::kRotationFamily:
      return RotationPattern(c.base);
    case GpwTag::kBoundedPerturbation:
      return PerturbationPattern(c.k_set, c.middle, c.h_set);
    case GpwTag::kUnmatched:
      return {};
  }
  return {};
}

}  // namespace chainlab
