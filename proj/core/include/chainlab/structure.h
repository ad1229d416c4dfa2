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

// Finite relational structures over the domain {0, ..., m-1}, their induced
// substructures and reducts, and the companion "linear order with singleton
// unary predicates" used to chain them.

#ifndef CHAINLAB_STRUCTURE_H_
#define CHAINLAB_STRUCTURE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chainlab {

using Element = int;
using Tuple = std::vector<Element>;
// A linear arrangement of domain elements, listed from least to greatest.
using Order = std::vector<Element>;

struct Symbol {
  std::string name;
  int arity = 1;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

// An ordered list of relation symbols. Order is significant: two signatures
// with the same symbols in a different order are different signatures.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }

  std::optional<std::size_t> IndexOf(std::string_view name) const;
  // Largest arity, or 0 for the empty signature.
  int MaxArity() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Symbol> symbols_;
};

// A finite relational structure. Relations admit tuples with repeated
// entries. Tuples are kept sorted and deduplicated so that equality is
// syntactic. Immutable after construction.
class Structure {
 public:
  Structure() = default;
  // relations[i] holds the tuples of signature symbol i. Throws DomainError
  // on arity or range violations.
  Structure(Signature signature, int size,
            std::vector<std::vector<Tuple>> relations);

  // The structure with every relation empty.
  static Structure Empty(Signature signature, int size);

  const Signature& signature() const { return signature_; }
  int size() const { return size_; }
  const std::vector<Tuple>& tuples(std::size_t relation) const {
    return relations_[relation];
  }
  const std::vector<std::vector<Tuple>>& relations() const {
    return relations_;
  }

  // Membership test. Entries must lie in the domain.
  bool Holds(std::size_t relation, std::span<const Element> tuple) const;

  friend bool operator==(const Structure& a, const Structure& b) {
    return a.size_ == b.size_ && a.signature_ == b.signature_ &&
           a.relations_ == b.relations_;
  }

 private:
  void BuildIndex();

  Signature signature_;
  int size_ = 0;
  std::vector<std::vector<Tuple>> relations_;
  // Dense membership bitmaps indexed by the base-m value of a tuple; empty
  // when m^arity is too large, in which case Holds falls back to search.
  std::vector<std::vector<bool>> dense_;
};

// Restriction to the elements of `subset`, relabeled order-preservingly onto
// {0, ..., |subset|-1}. Throws DomainError for an empty subset or
// out-of-range elements. Duplicates in `subset` are ignored.
Structure InducedSubstructure(const Structure& y,
                              std::span<const Element> subset);

// Keeps only the named symbols, preserving signature order. Throws
// DomainError for unknown names.
Structure Reduct(const Structure& y, std::span<const std::string> keep);

// The companion linear order: `order` lists the domain in increasing order
// and the constants a_0, ..., a_{k-1} are expected to occupy its first k
// positions. Values may be built by hand to represent invalid companions;
// CompanionStructure is the validating constructor.
struct Companion {
  int size = 0;
  Order order;
  std::vector<Element> constants;

  int constant_count() const { return static_cast<int>(constants.size()); }
  // position[x] = index of x in `order`. Requires `order` to be a
  // permutation of the domain.
  std::vector<int> Positions() const;

  friend bool operator==(const Companion&, const Companion&) = default;
};

// Builds the companion whose order is f_enum followed by rest_order, with
// constants f_enum. Throws DomainError when f_enum and rest_order overlap,
// repeat, leave the domain, or fail to cover it.
Companion CompanionStructure(int size, std::span<const Element> f_enum,
                             std::span<const Element> rest_order);

struct CompanionAxioms {
  bool linear_order = false;
  bool distinct_singletons = false;
  bool ordered_as_indices = false;
  bool initial_segment = false;

  bool all() const {
    return linear_order && distinct_singletons && ordered_as_indices &&
           initial_segment;
  }
  friend bool operator==(const CompanionAxioms&,
                         const CompanionAxioms&) = default;
};

// Checks the four companion axioms on a possibly hand-built value.
CompanionAxioms ValidateCompanionAxioms(const Companion& x);

// Reserved names of the companion language.
inline constexpr std::string_view kOrderSymbol = "R";
std::string ConstantSymbol(int index);  // "U<index>"

// Signature <R/2, U0/1, ..., U{k-1}/1>.
Signature CompanionSignature(int constant_count);

// The companion rendered as a structure of the companion language: R is the
// strict order given by `order`, U_j = {constants[j]}.
Structure CompanionAsStructure(const Companion& x);

}  // namespace chainlab

#endif  // CHAINLAB_STRUCTURE_H_
