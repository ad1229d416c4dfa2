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

// Quantifier-free definitions of a structure's relations over a companion
// linear order, and the two syntactic translations built on them.
//
// Tuples of arity r are partitioned by literal type. A relation is simply
// definable over the companion exactly when each class lies entirely inside
// or entirely outside it; the definition is then the disjunction of the
// classes inside. A structure is chained by the companion's order over its
// constants iff every relation is simply definable this way.

#ifndef CHAINLAB_DEFINABILITY_H_
#define CHAINLAB_DEFINABILITY_H_

#include <map>
#include <string>
#include <vector>

#include "chainlab/error.h"
#include "chainlab/formula.h"
#include "chainlab/literal_type.h"
#include "chainlab/structure.h"

namespace chainlab {

struct SymbolDefinition {
  std::string symbol;
  int arity = 1;
  // Disjuncts, sorted. Each is realizable in the companion it came from.
  std::vector<LiteralType> types;

  friend bool operator==(const SymbolDefinition&,
                         const SymbolDefinition&) = default;
};

struct QfDefinitionSet {
  int constant_count = 0;
  std::vector<SymbolDefinition> definitions;

  const SymbolDefinition* Find(const std::string& symbol) const;

  friend bool operator==(const QfDefinitionSet&,
                         const QfDefinitionSet&) = default;
};

// Raised by ExtractDefinitions when some literal-type class meets both a
// relation and its complement.
class NotSimplyDefinableError : public DomainError {
 public:
  NotSimplyDefinableError(std::string symbol, LiteralType type, Tuple member,
                          Tuple non_member);

  const std::string& symbol() const { return symbol_; }
  const LiteralType& type() const { return type_; }
  const Tuple& member() const { return member_; }
  const Tuple& non_member() const { return non_member_; }

 private:
  std::string symbol_;
  LiteralType type_;
  Tuple member_;
  Tuple non_member_;
};

// Extracts the DNF definition of every relation of y over x. Symbols are
// scanned in signature order and tuples lexicographically; the first class
// found impure is reported with its first member and first non-member.
// Throws DomainError if x and y have different domain sizes or x violates
// the companion axioms.
QfDefinitionSet ExtractDefinitions(const Companion& x, const Structure& y);

// The structure on x's domain whose relation for each symbol of sig is the
// set of tuples whose literal type is one of its disjuncts. Throws
// DomainError for a symbol without a definition or with the wrong arity.
Structure ApplyDefinitions(const Companion& x, const QfDefinitionSet& defs,
                           const Signature& sig);

// Companion-language disjunction of a definition instantiated at `vars`.
Formula RenderDefinition(const SymbolDefinition& def,
                         std::span<const std::string> vars,
                         int constant_count);

// Replaces each object-language atom S(w...) by the definition of S
// instantiated at w...; equalities, connectives and quantifiers are kept.
// Throws DomainError for atoms without a definition.
Formula StarTranslate(const Formula& f, const QfDefinitionSet& defs);

// Renames relation symbols through symbol_map (symbols absent from the map
// are kept). Throws DomainError when a symbol or its representative is not
// in sig, or their arities differ.
Formula QuotientTranslate(const Formula& f, const Signature& sig,
                          const std::map<std::string, std::string>& symbol_map);

}  // namespace chainlab

#endif  // CHAINLAB_DEFINABILITY_H_
