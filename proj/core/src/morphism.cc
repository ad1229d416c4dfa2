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

#include "chainlab/morphism.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "chainlab/combinatorics.h"
#include "chainlab/error.h"

namespace chainlab {
namespace {

void CheckInDomain(const Structure& y, Element e) {
  if (e < 0 || e >= y.size()) {
    throw DomainError("element " + std::to_string(e) + " outside domain of size " +
                      std::to_string(y.size()));
  }
}

// Checks x̄ ∈ R <=> f(x̄) ∈ R for tuples over `dom` that mention `required`
// (or all tuples when required < 0). `image` maps dom elements, -1 elsewhere.
bool PreservesTuples(const Structure& y, std::span<const Element> dom,
                     std::span<const Element> image, Element required) {
  const int k = static_cast<int>(dom.size());
  Tuple source, target;
  for (std::size_t r = 0; r < y.signature().size(); ++r) {
    const int arity = y.signature()[r].arity;
    source.assign(arity, 0);
    target.assign(arity, 0);
    bool ok = ForEachTuple(k, arity, [&](std::span<const int> index) {
      bool mentions = required < 0;
      for (int i = 0; i < arity; ++i) {
        source[i] = dom[index[i]];
        target[i] = image[source[i]];
        if (source[i] == required) mentions = true;
      }
      if (!mentions) return true;
      return y.Holds(r, source) == y.Holds(r, target);
    });
    if (!ok) return false;
  }
  return true;
}

void EnumerateFrom(const Structure& y, int max_dom, std::vector<Element>& dom,
                   std::vector<Element>& image, std::vector<bool>& used,
                   std::vector<PartialMap::Pair>& pairs, bool& stop,
                   const std::function<bool(const PartialMap&)>& visit) {
  if (static_cast<int>(pairs.size()) >= max_dom) return;
  const Element first = pairs.empty() ? 0 : pairs.back().first + 1;
  for (Element s = first; s < y.size() && !stop; ++s) {
    for (Element t = 0; t < y.size() && !stop; ++t) {
      if (used[t]) continue;
      dom.push_back(s);
      image[s] = t;
      used[t] = true;
      pairs.emplace_back(s, t);
      // Restrictions of partial automorphisms are partial automorphisms, so
      // a failing map has no passing extension.
      if (PreservesTuples(y, dom, image, s)) {
        if (!visit(PartialMap(pairs))) {
          stop = true;
        } else {
          EnumerateFrom(y, max_dom, dom, image, used, pairs, stop, visit);
        }
      }
      pairs.pop_back();
      used[t] = false;
      image[s] = -1;
      dom.pop_back();
    }
  }
}

std::vector<std::uint8_t> Header(const Structure& y) {
  std::vector<std::uint8_t> header;
  header.push_back(static_cast<std::uint8_t>(y.size()));
  header.push_back(static_cast<std::uint8_t>(y.signature().size()));
  for (const Symbol& s : y.signature().symbols()) {
    header.push_back(static_cast<std::uint8_t>(s.arity));
  }
  return header;
}

// Membership bits of the relabeled structure where new element i is old
// element relabel[i], all relations concatenated in lexicographic tuple
// order. Stops and returns false as soon as the prefix exceeds `best`.
bool RelabeledBits(const Structure& y, std::span<const Element> relabel,
                   const std::vector<std::uint8_t>* best,
                   std::vector<std::uint8_t>& bits) {
  bits.clear();
  bool tied = best != nullptr;
  Tuple old_tuple;
  for (std::size_t r = 0; r < y.signature().size(); ++r) {
    const int arity = y.signature()[r].arity;
    old_tuple.assign(arity, 0);
    bool ok = ForEachTuple(y.size(), arity, [&](std::span<const int> t) {
      for (int i = 0; i < arity; ++i) old_tuple[i] = relabel[t[i]];
      const std::uint8_t bit = y.Holds(r, old_tuple) ? 1 : 0;
      if (tied) {
        const std::uint8_t other = (*best)[bits.size()];
        if (bit > other) return false;
        if (bit < other) tied = false;
      }
      bits.push_back(bit);
      return true;
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<std::uint8_t> Pack(const std::vector<std::uint8_t>& header,
                               const std::vector<std::uint8_t>& bits) {
  std::vector<std::uint8_t> out = header;
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    std::uint8_t byte = 0;
    for (std::size_t j = 0; j < 8; ++j) {
      byte = static_cast<std::uint8_t>(byte << 1);
      if (i + j < bits.size()) byte |= bits[i + j];
    }
    out.push_back(byte);
  }
  return out;
}

}  // namespace

PartialMap::PartialMap(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (pairs_[i].first == pairs_[i - 1].first) {
      throw DomainError("partial map is not functional at " +
                        std::to_string(pairs_[i].first));
    }
  }
  std::vector<Element> targets = Range();
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
    throw DomainError("partial map is not injective");
  }
}

std::optional<Element> PartialMap::operator()(Element x) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{x, 0},
                             [](const Pair& a, const Pair& b) {
                               return a.first < b.first;
                             });
  if (it == pairs_.end() || it->first != x) return std::nullopt;
  return it->second;
}

std::vector<Element> PartialMap::Domain() const {
  std::vector<Element> out;
  out.reserve(pairs_.size());
  for (const Pair& p : pairs_) out.push_back(p.first);
  return out;
}

std::vector<Element> PartialMap::Range() const {
  std::vector<Element> out;
  out.reserve(pairs_.size());
  for (const Pair& p : pairs_) out.push_back(p.second);
  std::sort(out.begin(), out.end());
  return out;
}

bool IsPartialAutomorphism(const Structure& y, const PartialMap& p) {
  std::vector<Element> image(static_cast<std::size_t>(y.size()), -1);
  std::vector<Element> dom;
  for (const auto& [s, t] : p.pairs()) {
    CheckInDomain(y, s);
    CheckInDomain(y, t);
    image[s] = t;
    dom.push_back(s);
  }
  return PreservesTuples(y, dom, image, -1);
}

void ForEachPartialAutomorphism(
    const Structure& y, int max_dom,
    const std::function<bool(const PartialMap&)>& visit) {
  if (!visit(PartialMap())) return;
  std::vector<Element> dom;
  std::vector<Element> image(static_cast<std::size_t>(y.size()), -1);
  std::vector<bool> used(static_cast<std::size_t>(y.size()), false);
  std::vector<PartialMap::Pair> pairs;
  bool stop = false;
  EnumerateFrom(y, max_dom, dom, image, used, pairs, stop, visit);
}

std::vector<PartialMap> EnumeratePartialAutomorphisms(const Structure& y,
                                                      int max_dom) {
  std::vector<PartialMap> out;
  ForEachPartialAutomorphism(y, max_dom, [&](const PartialMap& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::optional<PartialMap> FindIsomorphism(const Structure& a,
                                          const Structure& b) {
  if (!(a.signature() == b.signature())) {
    throw DomainError("isomorphism requires identical signatures");
  }
  if (a.size() != b.size()) return std::nullopt;
  for (std::size_t r = 0; r < a.signature().size(); ++r) {
    if (a.tuples(r).size() != b.tuples(r).size()) return std::nullopt;
  }
  std::vector<Element> perm(static_cast<std::size_t>(a.size()));
  std::iota(perm.begin(), perm.end(), 0);
  Tuple image;
  do {
    bool ok = true;
    for (std::size_t r = 0; r < a.signature().size() && ok; ++r) {
      for (const Tuple& t : a.tuples(r)) {
        image.resize(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) image[i] = perm[t[i]];
        if (!b.Holds(r, image)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::vector<PartialMap::Pair> pairs;
      for (Element i = 0; i < a.size(); ++i) pairs.emplace_back(i, perm[i]);
      return PartialMap(std::move(pairs));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::string CanonicalForm::Hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

CanonicalForm CanonicalForm::FromHex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw ParseError("hex string of odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ParseError(std::string("invalid hex digit '") + c + "'");
  };
  std::vector<std::uint8_t> bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    bytes.push_back(
        static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return CanonicalForm(std::move(bytes));
}

CanonicalForm ComputeCanonicalForm(const Structure& y) {
  if (y.size() > kMaxCanonicalSize) {
    throw UnsupportedSizeError(
        "canonical forms are exhaustive only up to " +
        std::to_string(kMaxCanonicalSize) + " elements, got " +
        std::to_string(y.size()));
  }
  const std::vector<std::uint8_t> header = Header(y);
  std::vector<Element> relabel(static_cast<std::size_t>(y.size()));
  std::iota(relabel.begin(), relabel.end(), 0);

  std::vector<std::uint8_t> best;
  RelabeledBits(y, relabel, nullptr, best);

  // Memoized per thread on the unrelabeled encoding; structures that repeat
  // verbatim (common when sweeping substructures) skip the permutation scan.
  thread_local std::unordered_map<std::string, CanonicalForm> cache;
  std::string key(header.begin(), header.end());
  key.append(best.begin(), best.end());
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::vector<std::uint8_t> candidate;
  while (std::next_permutation(relabel.begin(), relabel.end())) {
    if (RelabeledBits(y, relabel, &best, candidate) && candidate < best) {
      best.swap(candidate);
    }
  }
  CanonicalForm form(Pack(header, best));
  if (cache.size() >= (std::size_t{1} << 18)) cache.clear();
  cache.emplace(std::move(key), form);
  return form;
}

}  // namespace chainlab
