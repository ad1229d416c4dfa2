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

#include "chainlab/definability.h"

#include <algorithm>
#include <optional>

#include "chainlab/combinatorics.h"

namespace chainlab {
namespace {

std::string TupleText(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

void RequireValidCompanion(const Companion& x) {
  if (!ValidateCompanionAxioms(x).all()) {
    throw DomainError("companion violates the companion axioms");
  }
}

}  // namespace

const SymbolDefinition* QfDefinitionSet::Find(const std::string& symbol) const {
  for (const SymbolDefinition& d : definitions) {
    if (d.symbol == symbol) return &d;
  }
  return nullptr;
}

NotSimplyDefinableError::NotSimplyDefinableError(std::string symbol,
                                                 LiteralType type,
                                                 Tuple member,
                                                 Tuple non_member)
    : DomainError("relation '" + symbol +
                  "' is not simply definable over the companion: " +
                  TupleText(member) + " and " + TupleText(non_member) +
                  " share a literal type"),
      symbol_(std::move(symbol)),
      type_(std::move(type)),
      member_(std::move(member)),
      non_member_(std::move(non_member)) {}

QfDefinitionSet ExtractDefinitions(const Companion& x, const Structure& y) {
  RequireValidCompanion(x);
  if (x.size != y.size()) {
    throw DomainError("companion and structure have different domains");
  }
  QfDefinitionSet defs;
  defs.constant_count = x.constant_count();
  for (std::size_t r = 0; r < y.signature().size(); ++r) {
    const Symbol& symbol = y.signature()[r];
    struct ClassWitnesses {
      std::optional<Tuple> member;
      std::optional<Tuple> non_member;
    };
    std::map<LiteralType, ClassWitnesses> classes;
    ForEachTuple(y.size(), symbol.arity, [&](std::span<const int> t) {
      ClassWitnesses& c = classes[ComputeLiteralType(x, t)];
      auto& slot = y.Holds(r, t) ? c.member : c.non_member;
      if (!slot) slot = Tuple(t.begin(), t.end());
      if (c.member && c.non_member) {
        throw NotSimplyDefinableError(symbol.name, ComputeLiteralType(x, t),
                                      *c.member, *c.non_member);
      }
      return true;
    });
    SymbolDefinition def{symbol.name, symbol.arity, {}};
    for (const auto& [type, witnesses] : classes) {
      if (witnesses.member) def.types.push_back(type);
    }
    defs.definitions.push_back(std::move(def));
  }
  return defs;
}

Structure ApplyDefinitions(const Companion& x, const QfDefinitionSet& defs,
                           const Signature& sig) {
  RequireValidCompanion(x);
  std::vector<std::vector<Tuple>> relations(sig.size());
  for (std::size_t r = 0; r < sig.size(); ++r) {
    const SymbolDefinition* def = defs.Find(sig[r].name);
    if (def == nullptr) {
      throw DomainError("no definition for symbol '" + sig[r].name + "'");
    }
    if (def->arity != sig[r].arity) {
      throw DomainError("definition of '" + sig[r].name + "' has arity " +
                        std::to_string(def->arity));
    }
    ForEachTuple(x.size, sig[r].arity, [&](std::span<const int> t) {
      if (std::binary_search(def->types.begin(), def->types.end(),
                             ComputeLiteralType(x, t))) {
        relations[r].emplace_back(t.begin(), t.end());
      }
      return true;
    });
  }
  return Structure(sig, x.size, std::move(relations));
}

Formula RenderDefinition(const SymbolDefinition& def,
                         std::span<const std::string> vars,
                         int constant_count) {
  std::vector<Formula> disjuncts;
  disjuncts.reserve(def.types.size());
  for (const LiteralType& t : def.types) {
    disjuncts.push_back(RenderLiteralType(t, vars, constant_count));
  }
  return Formula::Or(std::move(disjuncts));
}

Formula StarTranslate(const Formula& f, const QfDefinitionSet& defs) {
  switch (f.kind()) {
    case Formula::Kind::kEq:
      return f;
    case Formula::Kind::kRel: {
      const SymbolDefinition* def = defs.Find(f.symbol());
      if (def == nullptr) {
        throw DomainError("no definition for symbol '" + f.symbol() + "'");
      }
      if (def->arity != static_cast<int>(f.vars().size())) {
        throw DomainError("symbol '" + f.symbol() + "' used with arity " +
                          std::to_string(f.vars().size()));
      }
      return RenderDefinition(*def, f.vars(), defs.constant_count);
    }
    case Formula::Kind::kNot:
      return Formula::Not(StarTranslate(f.children().front(), defs));
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      std::vector<Formula> operands;
      for (const Formula& c : f.children()) {
        operands.push_back(StarTranslate(c, defs));
      }
      return f.kind() == Formula::Kind::kAnd ? Formula::And(std::move(operands))
                                             : Formula::Or(std::move(operands));
    }
    case Formula::Kind::kExists:
      return Formula::Exists(f.bound_var(),
                             StarTranslate(f.children().front(), defs));
    case Formula::Kind::kForall:
      return Formula::Forall(f.bound_var(),
                             StarTranslate(f.children().front(), defs));
  }
  return f;
}

Formula QuotientTranslate(
    const Formula& f, const Signature& sig,
    const std::map<std::string, std::string>& symbol_map) {
  for (const auto& [from, to] : symbol_map) {
    auto a = sig.IndexOf(from);
    auto b = sig.IndexOf(to);
    if (!a || !b) {
      throw DomainError("symbol map mentions '" + (a ? to : from) +
                        "', which is not in the signature");
    }
    if (sig[*a].arity != sig[*b].arity) {
      throw DomainError("symbol '" + from + "' and representative '" + to +
                        "' differ in arity");
    }
  }
  switch (f.kind()) {
    case Formula::Kind::kEq:
      return f;
    case Formula::Kind::kRel: {
      auto it = symbol_map.find(f.symbol());
      return it == symbol_map.end() ? f : Formula::Rel(it->second, f.vars());
    }
    case Formula::Kind::kNot:
      return Formula::Not(
          QuotientTranslate(f.children().front(), sig, symbol_map));
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      std::vector<Formula> operands;
      for (const Formula& c : f.children()) {
        operands.push_back(QuotientTranslate(c, sig, symbol_map));
      }
      return f.kind() == Formula::Kind::kAnd ? Formula::And(std::move(operands))
                                             : Formula::Or(std::move(operands));
    }
    case Formula::Kind::kExists:
      return Formula::Exists(
          f.bound_var(),
          QuotientTranslate(f.children().front(), sig, symbol_map));
    case Formula::Kind::kForall:
      return Formula::Forall(
          f.bound_var(),
          QuotientTranslate(f.children().front(), sig, symbol_map));
  }
  return f;
}

}  // namespace chainlab
