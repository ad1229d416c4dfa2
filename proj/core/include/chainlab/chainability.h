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

// Chainability of a finite structure over a set F, chaining-order search,
// kernels, ages and profiles.
//
// Y is (F,<)-chainable when, for every partial automorphism p of the chain
// <Y\F, <>, the map id_F ∪ p is a partial automorphism of Y. Partial
// automorphisms of a chain are exactly the increasing partial injections.
// A relation tuple touches at most max-arity elements outside F, so it is
// enough to test increasing injections whose domain has at most max-arity
// elements; the checks below rely on that bound.

#ifndef CHAINLAB_CHAINABILITY_H_
#define CHAINLAB_CHAINABILITY_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "chainlab/morphism.h"
#include "chainlab/structure.h"

namespace chainlab {

struct ChainWitness {
  std::vector<Element> f_set;  // sorted
  Order rest_order;

  friend bool operator==(const ChainWitness&, const ChainWitness&) = default;
};

// Throws DomainError unless f_set and rest_order partition the domain.
bool IsChainableWith(const Structure& y, const ChainWitness& w);

// First chaining order over f_set found by prefix backtracking in
// lexicographic element order, or nullopt.
std::optional<Order> FindChainOrder(const Structure& y,
                                    std::span<const Element> f_set);

// Visits every chaining order over f_set in lexicographic order. The visitor
// returns false to stop.
void ForEachChainOrder(const Structure& y, std::span<const Element> f_set,
                       const std::function<bool(const Order&)>& visit);

struct KernelReport {
  // Absent when no F within search_bound admits a chaining order.
  std::optional<int> min_size;
  // All sets of size min_size that admit a chaining order, sorted, each with
  // its first-found order.
  std::vector<ChainWitness> minimal_sets;
  int search_bound = 0;
};

// Exhaustive search over |F| = 0, 1, ..., max_f (clamped to the domain
// size), stopping at the first size that admits a witness.
KernelReport Kernel(const Structure& y, int max_f);

struct ProfileReport {
  // values[n-1] = number of isomorphism types of n-element substructures.
  std::vector<std::size_t> values;
  // age_forms[n-1] = sorted canonical forms of those types.
  std::vector<std::vector<CanonicalForm>> age_forms;
};

// Sorted, deduplicated canonical forms of all n-element induced
// substructures. Throws UnsupportedSizeError for n > kMaxCanonicalSize and
// DomainError for n > size or n < 1.
std::vector<CanonicalForm> AgeForms(const Structure& y, int n);

ProfileReport Profile(const Structure& y, int up_to);

// profile values up to `up_to` are all at most 2^kernel_size.
bool CheckProfileBound(const Structure& y, int kernel_size, int up_to);

// For all n-element K, H with K∩F = H∩F, the induced substructures are
// isomorphic. Throws DomainError when w is not a chaining witness.
bool CheckTraceIsomorphism(const Structure& y, const ChainWitness& w, int n);

// Every n-element type of z is a type of y. Throws DomainError on signature
// mismatch or when n exceeds either size.
bool AgeSubset(const Structure& z, const Structure& y, int n);

}  // namespace chainlab

#endif  // CHAINLAB_CHAINABILITY_H_
