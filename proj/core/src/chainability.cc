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

#include "chainlab/chainability.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "chainlab/combinatorics.h"
#include "chainlab/error.h"

namespace chainlab {
namespace {

std::vector<Element> NormalizeFSet(const Structure& y,
                                   std::span<const Element> f_set) {
  std::vector<Element> f(f_set.begin(), f_set.end());
  std::sort(f.begin(), f.end());
  for (Element e : f) {
    if (e < 0 || e >= y.size()) {
      throw DomainError("element " + std::to_string(e) + " outside domain");
    }
  }
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
    throw DomainError("F lists an element twice");
  }
  return f;
}

// Checks id_F ∪ (chain[d_i] -> chain[e_i]) on every tuple whose elements
// outside F are exactly {chain[d_i]}. Tuples with fewer outside elements are
// covered by the restriction of the map to them.
class BoundedMapChecker {
 public:
  BoundedMapChecker(const Structure& y, std::span<const Element> f)
      : y_(y),
        f_(f.begin(), f.end()),
        image_(static_cast<std::size_t>(y.size()), -1) {
    for (Element a : f_) image_[a] = a;
  }

  bool Preserves(std::span<const Element> chain, std::span<const int> d,
                 std::span<const int> e) {
    support_ = f_;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const Element s = chain[d[i]];
      image_[s] = chain[e[i]];
      support_.push_back(s);
    }
    const std::size_t k = d.size();
    const int width = static_cast<int>(support_.size());
    bool ok = true;
    for (std::size_t r = 0; r < y_.signature().size() && ok; ++r) {
      const int arity = y_.signature()[r].arity;
      if (arity < static_cast<int>(k)) continue;
      source_.assign(arity, 0);
      target_.assign(arity, 0);
      ok = ForEachTuple(width, arity, [&](std::span<const int> index) {
        // Every non-F slot of support_ (indices >= |F|) must appear.
        unsigned mask = 0;
        for (int i = 0; i < arity; ++i) {
          source_[i] = support_[index[i]];
          target_[i] = image_[source_[i]];
          const int slot = index[i] - static_cast<int>(f_.size());
          if (slot >= 0) mask |= 1u << slot;
        }
        if (mask != (1u << k) - 1) return true;
        return y_.Holds(r, source_) == y_.Holds(r, target_);
      });
    }
    for (std::size_t i = 0; i < d.size(); ++i) image_[chain[d[i]]] = -1;
    return ok;
  }

 private:
  const Structure& y_;
  std::vector<Element> f_;
  std::vector<Element> image_;
  std::vector<Element> support_;
  Tuple source_, target_;
};

// Checks every increasing map between k-subsets (k <= max arity) of the
// positions [0, last] of `chain` that involves position `last`, or all of
// them when last_only is false.
bool ChainPrefixPreserves(BoundedMapChecker& checker,
                          std::span<const Element> chain, int max_arity,
                          bool last_only) {
  const int n = static_cast<int>(chain.size());
  const int last = n - 1;
  for (int k = 1; k <= std::min(max_arity, n); ++k) {
    bool ok = ForEachSubset(n, k, [&](std::span<const int> d) {
      return ForEachSubset(n, k, [&](std::span<const int> e) {
        if (last_only && d.back() != last && e.back() != last) return true;
        if (std::equal(d.begin(), d.end(), e.begin())) return true;
        return checker.Preserves(chain, d, e);
      });
    });
    if (!ok) return false;
  }
  return true;
}

void Backtrack(const Structure& y, BoundedMapChecker& checker,
               const std::vector<Element>& rest, std::vector<bool>& used,
               Order& prefix, bool& stop,
               const std::function<bool(const Order&)>& visit) {
  if (prefix.size() == rest.size()) {
    if (!visit(prefix)) stop = true;
    return;
  }
  const int max_arity = y.signature().MaxArity();
  for (std::size_t i = 0; i < rest.size() && !stop; ++i) {
    if (used[i]) continue;
    used[i] = true;
    prefix.push_back(rest[i]);
    // Increasing maps within a prefix never change once later elements are
    // appended, so a failing prefix has no chaining completion.
    if (ChainPrefixPreserves(checker, prefix, max_arity, true)) {
      Backtrack(y, checker, rest, used, prefix, stop, visit);
    }
    prefix.pop_back();
    used[i] = false;
  }
}

}  // namespace

bool IsChainableWith(const Structure& y, const ChainWitness& w) {
  const std::vector<Element> f = NormalizeFSet(y, w.f_set);
  std::vector<bool> seen(static_cast<std::size_t>(y.size()), false);
  for (Element a : f) seen[a] = true;
  for (Element e : w.rest_order) {
    if (e < 0 || e >= y.size()) {
      throw DomainError("element " + std::to_string(e) + " outside domain");
    }
    if (seen[e]) {
      throw DomainError("element " + std::to_string(e) +
                        " appears twice in the witness");
    }
    seen[e] = true;
  }
  if (f.size() + w.rest_order.size() != static_cast<std::size_t>(y.size())) {
    throw DomainError("witness does not cover the domain");
  }
  if (y.signature().empty()) return true;
  BoundedMapChecker checker(y, f);
  return ChainPrefixPreserves(checker, w.rest_order, y.signature().MaxArity(),
                              false);
}

void ForEachChainOrder(const Structure& y, std::span<const Element> f_set,
                       const std::function<bool(const Order&)>& visit) {
  const std::vector<Element> f = NormalizeFSet(y, f_set);
  std::vector<Element> rest;
  for (Element e = 0; e < y.size(); ++e) {
    if (!std::binary_search(f.begin(), f.end(), e)) rest.push_back(e);
  }
  BoundedMapChecker checker(y, f);
  std::vector<bool> used(rest.size(), false);
  Order prefix;
  bool stop = false;
  Backtrack(y, checker, rest, used, prefix, stop, visit);
}

std::optional<Order> FindChainOrder(const Structure& y,
                                    std::span<const Element> f_set) {
  std::optional<Order> found;
  ForEachChainOrder(y, f_set, [&](const Order& order) {
    found = order;
    return false;
  });
  return found;
}

KernelReport Kernel(const Structure& y, int max_f) {
  KernelReport report;
  report.search_bound = std::clamp(max_f, 0, y.size());
  for (int s = 0; s <= report.search_bound; ++s) {
    ForEachSubset(y.size(), s, [&](std::span<const int> subset) {
      if (auto order = FindChainOrder(y, subset)) {
        report.minimal_sets.push_back(
            {std::vector<Element>(subset.begin(), subset.end()),
             std::move(*order)});
      }
      return true;
    });
    if (!report.minimal_sets.empty()) {
      report.min_size = s;
      break;
    }
  }
  return report;
}

std::vector<CanonicalForm> AgeForms(const Structure& y, int n) {
  if (n < 1 || n > y.size()) {
    throw DomainError("age level " + std::to_string(n) +
                      " outside 1.." + std::to_string(y.size()));
  }
  if (n > kMaxCanonicalSize) {
    throw UnsupportedSizeError("age level " + std::to_string(n) +
                               " exceeds the exhaustive bound " +
                               std::to_string(kMaxCanonicalSize));
  }
  std::set<CanonicalForm> forms;
  ForEachSubset(y.size(), n, [&](std::span<const int> subset) {
    forms.insert(ComputeCanonicalForm(InducedSubstructure(y, subset)));
    return true;
  });
  return {forms.begin(), forms.end()};
}

ProfileReport Profile(const Structure& y, int up_to) {
  if (up_to > kMaxCanonicalSize) {
    throw UnsupportedSizeError("profile bound " + std::to_string(up_to) +
                               " exceeds the exhaustive bound " +
                               std::to_string(kMaxCanonicalSize));
  }
  if (up_to < 0 || up_to > y.size()) {
    throw DomainError("profile bound " + std::to_string(up_to) +
                      " outside 0.." + std::to_string(y.size()));
  }
  ProfileReport report;
  for (int n = 1; n <= up_to; ++n) {
    report.age_forms.push_back(AgeForms(y, n));
    report.values.push_back(report.age_forms.back().size());
  }
  return report;
}

bool CheckProfileBound(const Structure& y, int kernel_size, int up_to) {
  const ProfileReport report = Profile(y, up_to);
  if (kernel_size >= 63) return true;
  const std::size_t bound = std::size_t{1} << std::max(kernel_size, 0);
  return std::all_of(report.values.begin(), report.values.end(),
                     [&](std::size_t v) { return v <= bound; });
}

bool CheckTraceIsomorphism(const Structure& y, const ChainWitness& w, int n) {
  if (!IsChainableWith(y, w)) {
    throw DomainError("trace property requires a chaining witness");
  }
  if (n < 1) throw DomainError("subset size must be positive");
  std::vector<bool> in_f(static_cast<std::size_t>(y.size()), false);
  for (Element a : w.f_set) in_f[a] = true;

  const bool use_forms = n <= kMaxCanonicalSize;
  std::map<std::vector<Element>, Structure> first_of_trace;
  std::map<std::vector<Element>, CanonicalForm> form_of_trace;
  return ForEachSubset(y.size(), n, [&](std::span<const int> subset) {
    std::vector<Element> trace;
    for (Element e : subset) {
      if (in_f[e]) trace.push_back(e);
    }
    Structure sub = InducedSubstructure(y, subset);
    if (use_forms) {
      CanonicalForm form = ComputeCanonicalForm(sub);
      auto [it, inserted] = form_of_trace.emplace(trace, form);
      return inserted || it->second == form;
    }
    auto [it, inserted] = first_of_trace.emplace(trace, sub);
    return inserted || FindIsomorphism(it->second, sub).has_value();
  });
}

bool AgeSubset(const Structure& z, const Structure& y, int n) {
  if (!(z.signature() == y.signature())) {
    throw DomainError("age comparison requires identical signatures");
  }
  if (n < 1 || n > std::min(z.size(), y.size())) {
    throw DomainError("age level " + std::to_string(n) +
                      " exceeds a structure size");
  }
  const std::vector<CanonicalForm> small = AgeForms(z, n);
  const std::vector<CanonicalForm> large = AgeForms(y, n);
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

}  // namespace chainlab
