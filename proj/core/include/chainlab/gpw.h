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

// The family of all linear orders on Y\F that chain Y over F, and its
// classification against three shapes:
//
//   AllOrders            every order of Y\F chains Y;
//   RotationFamily       the rotations F'+I of one base order I+F' together
//                        with their reverses;
//   BoundedPerturbation  for a base K+M+H, every (order of K)+M+(order of H)
//                        together with every (order of H)+M*+(order of K).
//
// At finite scale the shapes overlap and need not exhaust all families, so
// the classifier reports the first match in that order and returns
// Unmatched when none applies.

#ifndef CHAINLAB_GPW_H_
#define CHAINLAB_GPW_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chainlab/structure.h"

namespace chainlab {

struct ChainOrderFamily {
  std::vector<Element> f_set;
  // Sorted lexicographically.
  std::vector<Order> orders;
};

inline constexpr int kMaxFamilyRestSize = 8;

// Every arrangement of the complement of f_set that chains y, in
// lexicographic order. Throws UnsupportedSizeError when more than 8
// elements lie outside f_set.
ChainOrderFamily EnumerateChainingOrders(const Structure& y,
                                         std::span<const Element> f_set);

enum class GpwTag { kAllOrders, kRotationFamily, kBoundedPerturbation, kUnmatched };

std::string GpwTagName(GpwTag tag);

struct GpwClassification {
  GpwTag tag = GpwTag::kUnmatched;
  // RotationFamily and BoundedPerturbation: the reported base order. For
  // BoundedPerturbation it is sorted(K) + middle + sorted(H).
  Order base;
  std::vector<Element> k_set;  // sorted
  Order middle;
  std::vector<Element> h_set;  // sorted
  std::size_t family_size = 0;
  // Size of the re-expanded pattern (equals family_size for a match).
  std::size_t pattern_size = 0;
  // Later shapes that also reproduce the family.
  std::vector<GpwTag> also_matches;
  // Unmatched only: a family member outside {o, o*} for the least member o,
  // or the missing reverse of o.
  std::optional<Order> witness;
};

// Throws DomainError for an empty family or members that are not
// arrangements of one common set.
GpwClassification ClassifyFamily(const ChainOrderFamily& family);

// Orders described by a classification, sorted. `elements` is the set the
// orders arrange (needed for AllOrders). Unmatched expands to nothing.
std::vector<Order> ExpandPattern(const GpwClassification& c,
                                 std::span<const Element> elements);

// All rotations of base and their reverses, sorted.
std::vector<Order> RotationPattern(const Order& base);
// All (perm of K) + middle + (perm of H) and (perm of H) + middle* +
// (perm of K), sorted.
std::vector<Order> PerturbationPattern(std::span<const Element> k_set,
                                       const Order& middle,
                                       std::span<const Element> h_set);

}  // namespace chainlab

#endif  // CHAINLAB_GPW_H_
