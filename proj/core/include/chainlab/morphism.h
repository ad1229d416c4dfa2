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

// Partial maps, partial automorphisms (local automorphisms), isomorphism
// search and brute-force canonical forms for small structures.

#ifndef CHAINLAB_MORPHISM_H_
#define CHAINLAB_MORPHISM_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chainlab/structure.h"

namespace chainlab {

// A finite injective partial function on domain elements. Pairs are kept
// sorted by source.
class PartialMap {
 public:
  using Pair = std::pair<Element, Element>;

  PartialMap() = default;
  // Throws DomainError if the pairs are not functional and injective.
  explicit PartialMap(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  std::optional<Element> operator()(Element x) const;
  std::vector<Element> Domain() const;
  std::vector<Element> Range() const;  // sorted

  friend bool operator==(const PartialMap&, const PartialMap&) = default;
  friend auto operator<=>(const PartialMap&, const PartialMap&) = default;

 private:
  std::vector<Pair> pairs_;
};

// True iff p is an isomorphism between the substructures of y induced on
// its domain and its range. Throws DomainError on out-of-range elements.
bool IsPartialAutomorphism(const Structure& y, const PartialMap& p);

// Visits every partial automorphism with |dom| <= max_dom exactly once,
// in lexicographic order of the sorted pair lists, the empty map first.
// The visitor returns false to stop.
void ForEachPartialAutomorphism(
    const Structure& y, int max_dom,
    const std::function<bool(const PartialMap&)>& visit);

std::vector<PartialMap> EnumeratePartialAutomorphisms(const Structure& y,
                                                      int max_dom);

// First isomorphism a -> b in lexicographic permutation order, as a total
// map on a's domain; nullopt when none exists. Throws DomainError when the
// signatures differ.
std::optional<PartialMap> FindIsomorphism(const Structure& a,
                                          const Structure& b);

inline constexpr int kMaxCanonicalSize = 8;

// Encoding of an isomorphism class: the minimum over all relabelings of the
// relation bitmaps, prefixed by the size and arities. Equal forms for
// structures of the same signature means isomorphic.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::vector<std::uint8_t> bytes)
      : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::string Hex() const;
  // Throws ParseError on malformed hex.
  static CanonicalForm FromHex(std::string_view hex);

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&,
                          const CanonicalForm&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

// Brute force over all size! relabelings. Throws UnsupportedSizeError above
// kMaxCanonicalSize elements.
CanonicalForm ComputeCanonicalForm(const Structure& y);

}  // namespace chainlab

#endif  // CHAINLAB_MORPHISM_H_
