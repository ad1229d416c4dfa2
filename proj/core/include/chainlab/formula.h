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

// First-order formulas over relational signatures and their evaluation on
// finite structures.
//
// Text syntax (prefix, parenthesized):
//   (= v0 v1)  (rel E v0 v1)  (not f)  (and f ...)  (or f ...)
//   (exists v f)  (forall v f)
// `and` and `or` take any number of operands; (and) is true and (or) is
// false. Printing and parsing round-trip byte for byte on printed text.

#ifndef CHAINLAB_FORMULA_H_
#define CHAINLAB_FORMULA_H_

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chainlab/structure.h"

namespace chainlab {

// Immutable formula tree with shared subterms.
class Formula {
 public:
  enum class Kind { kEq, kRel, kNot, kAnd, kOr, kExists, kForall };

  static Formula Eq(std::string left, std::string right);
  static Formula Rel(std::string symbol, std::vector<std::string> vars);
  static Formula Not(Formula f);
  static Formula And(std::vector<Formula> operands);
  static Formula Or(std::vector<Formula> operands);
  static Formula Exists(std::string var, Formula body);
  static Formula Forall(std::string var, Formula body);

  static Formula True() { return And({}); }
  static Formula False() { return Or({}); }
  // (or (not a) b)
  static Formula Implies(Formula a, Formula b);
  // Nested quantifier over vars[0], vars[1], ... (outermost first).
  static Formula ExistsAll(const std::vector<std::string>& vars, Formula body);
  static Formula ForallAll(const std::vector<std::string>& vars, Formula body);

  Kind kind() const { return node_->kind; }
  // Relation symbol for kRel.
  const std::string& symbol() const { return node_->symbol; }
  // Atom arguments for kEq and kRel; the bound variable (single entry) for
  // quantifiers.
  const std::vector<std::string>& vars() const { return node_->vars; }
  const std::string& bound_var() const { return node_->vars.front(); }
  // Operands for connectives; the body (single entry) for quantifiers.
  const std::vector<Formula>& children() const { return node_->children; }

  std::set<std::string> FreeVariables() const;
  int QuantifierDepth() const;
  std::size_t NodeCount() const;

  std::string ToString() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string symbol;
    std::vector<std::string> vars;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Throws ParseError on malformed input.
Formula ParseFormula(std::string_view text);

using Assignment = std::map<std::string, Element>;

// Tarskian satisfaction over the finite domain of y. Throws DomainError when
// a free variable is unbound, an assigned element lies outside the domain, or
// an atom names an unknown symbol or has the wrong arity.
bool Evaluate(const Formula& f, const Structure& y,
              const Assignment& assignment = {});

}  // namespace chainlab

#endif  // CHAINLAB_FORMULA_H_
