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

#include "chainlab/sentences.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "chainlab/chainability.h"
#include "chainlab/combinatorics.h"
#include "chainlab/error.h"
#include "chainlab/morphism.h"

namespace chainlab {
namespace {

std::vector<std::size_t> KeptIndices(const Signature& sig,
                                     const std::vector<std::string>& keep) {
  std::set<std::string> wanted(keep.begin(), keep.end());
  for (const std::string& name : wanted) {
    if (!sig.IndexOf(name)) {
      throw DomainError("unknown symbol '" + name + "' in sub-signature");
    }
  }
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (wanted.count(sig[i].name)) indices.push_back(i);
  }
  return indices;
}

std::vector<std::string> KeptNames(const Signature& sig,
                                   const std::vector<std::string>& keep) {
  std::vector<std::string> names;
  for (std::size_t i : KeptIndices(sig, keep)) names.push_back(sig[i].name);
  return names;
}

Formula Rename(const Formula& f, const std::vector<std::string>& from,
               const std::vector<std::string>& to) {
  auto map_var = [&](const std::string& v) {
    auto it = std::find(from.begin(), from.end(), v);
    return it == from.end() ? v : to[it - from.begin()];
  };
  switch (f.kind()) {
    case Formula::Kind::kEq:
      return Formula::Eq(map_var(f.vars()[0]), map_var(f.vars()[1]));
    case Formula::Kind::kRel: {
      std::vector<std::string> vars;
      for (const std::string& v : f.vars()) vars.push_back(map_var(v));
      return Formula::Rel(f.symbol(), std::move(vars));
    }
    case Formula::Kind::kNot:
      return Formula::Not(Rename(f.children().front(), from, to));
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      std::vector<Formula> operands;
      for (const Formula& c : f.children()) {
        operands.push_back(Rename(c, from, to));
      }
      return f.kind() == Formula::Kind::kAnd ? Formula::And(std::move(operands))
                                             : Formula::Or(std::move(operands));
    }
    default:
      // Diagram formulas are quantifier-free.
      throw DomainError("cannot rename inside a quantified formula");
  }
}

Formula Distinct(const std::vector<std::string>& vars) {
  std::vector<Formula> literals;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      literals.push_back(Formula::Not(Formula::Eq(vars[i], vars[j])));
    }
  }
  return Formula::And(std::move(literals));
}

Formula Rel1(int constant, const std::string& var) {
  return Formula::Rel(ConstantSymbol(constant), {var});
}

Formula Less(const std::string& a, const std::string& b) {
  return Formula::Rel(std::string(kOrderSymbol), {a, b});
}

}  // namespace

std::vector<std::string> IndexedVariables(int n) {
  std::vector<std::string> vars;
  for (int i = 0; i < n; ++i) vars.push_back("v" + std::to_string(i));
  return vars;
}

Formula DiagramFormula(const Structure& k,
                       const std::vector<std::string>& keep) {
  const std::vector<std::string> vars = IndexedVariables(k.size());
  std::vector<Formula> literals;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      literals.push_back(Formula::Not(Formula::Eq(vars[i], vars[j])));
    }
  }
  for (std::size_t r : KeptIndices(k.signature(), keep)) {
    const Symbol& symbol = k.signature()[r];
    ForEachTuple(k.size(), symbol.arity, [&](std::span<const int> t) {
      std::vector<std::string> args;
      for (int e : t) args.push_back(vars[e]);
      Formula atom = Formula::Rel(symbol.name, std::move(args));
      literals.push_back(k.Holds(r, t) ? atom : Formula::Not(atom));
      return true;
    });
  }
  return Formula::And(std::move(literals));
}

Formula IsomorphismTypeFormula(const Structure& k,
                               const std::vector<std::string>& keep) {
  if (k.size() > kMaxAgeSentenceSize) {
    throw UnsupportedSizeError("type formulas are generated for at most " +
                               std::to_string(kMaxAgeSentenceSize) +
                               " elements");
  }
  const Formula diagram = DiagramFormula(k, keep);
  const std::vector<std::string> vars = IndexedVariables(k.size());
  std::vector<int> pi(vars.size());
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<Formula> disjuncts;
  do {
    std::vector<std::string> renamed;
    for (int p : pi) renamed.push_back(vars[p]);
    disjuncts.push_back(Rename(diagram, vars, renamed));
  } while (std::next_permutation(pi.begin(), pi.end()));
  return Formula::Or(std::move(disjuncts));
}

Formula AgeSentence(const std::vector<Structure>& family,
                    const std::vector<std::string>& keep, int n,
                    const Signature& signature) {
  if (n < 1) throw DomainError("age sentences need n >= 1");
  if (n > kMaxAgeSentenceSize) {
    throw UnsupportedSizeError("age sentences are generated for n <= " +
                               std::to_string(kMaxAgeSentenceSize));
  }
  for (const Structure& k : family) {
    if (k.size() != n) {
      throw DomainError("family members differ in size");
    }
    if (!(k.signature() == signature)) {
      throw DomainError("family members differ in signature");
    }
  }
  const std::vector<std::string> kept = KeptNames(signature, keep);
  const std::vector<std::string> vars = IndexedVariables(n);

  std::vector<Formula> conjuncts;
  std::vector<Formula> types;
  for (const Structure& k : family) {
    types.push_back(IsomorphismTypeFormula(k, kept));
  }
  for (const Formula& type : types) {
    conjuncts.push_back(Formula::ExistsAll(vars, type));
  }
  conjuncts.push_back(Formula::ForallAll(
      vars, Formula::Implies(Distinct(vars), Formula::Or(types))));
  return Formula::And(std::move(conjuncts));
}

Formula AgeSentence(const std::vector<Structure>& family,
                    const std::vector<std::string>& keep) {
  if (family.empty()) {
    throw DomainError("empty family: use the overload with explicit size");
  }
  return AgeSentence(family, keep, family.front().size(),
                     family.front().signature());
}

AgeSentenceCheck EvaluateAgeSentence(const std::vector<Structure>& family,
                                     const std::vector<std::string>& keep,
                                     int n, const Structure& y) {
  const Formula sentence = AgeSentence(family, keep, n, y.signature());
  AgeSentenceCheck check;
  check.sentence_value = Evaluate(sentence, y);

  const std::vector<std::string> kept = KeptNames(y.signature(), keep);
  std::set<CanonicalForm> expected;
  for (const Structure& k : family) {
    expected.insert(ComputeCanonicalForm(Reduct(k, kept)));
  }
  std::set<CanonicalForm> realized;
  if (n <= y.size()) {
    for (CanonicalForm& form : AgeForms(Reduct(y, kept), n)) {
      realized.insert(std::move(form));
    }
  }
  check.semantic_value = expected == realized;
  return check;
}

AgeSentenceCheck EvaluateAgeSentence(const std::vector<Structure>& family,
                                     const std::vector<std::string>& keep,
                                     const Structure& y) {
  if (family.empty()) {
    throw DomainError("empty family: use the overload with explicit size");
  }
  return EvaluateAgeSentence(family, keep, family.front().size(), y);
}

bool CheckAgeSentenceAgreement(const std::vector<Structure>& family,
                               const std::vector<std::string>& keep,
                               const Structure& y) {
  return EvaluateAgeSentence(family, keep, y).agree();
}

std::vector<Formula> TheoryStarSentences(int constant_count) {
  if (constant_count < 0) throw DomainError("negative constant count");
  const int k = constant_count;
  std::vector<Formula> sentences;

  // Strict linear order: irreflexive, transitive, total.
  sentences.push_back(Formula::And({
      Formula::Forall("u", Formula::Not(Less("u", "u"))),
      Formula::ForallAll(
          {"u", "v", "w"},
          Formula::Implies(Formula::And({Less("u", "v"), Less("v", "w")}),
                           Less("u", "w"))),
      Formula::ForallAll({"u", "v"},
                         Formula::Or({Formula::Eq("u", "v"), Less("u", "v"),
                                      Less("v", "u")})),
  }));

  std::vector<Formula> singletons;
  for (int j = 0; j < k; ++j) {
    singletons.push_back(Formula::Exists(
        "u", Formula::And({Rel1(j, "u"),
                           Formula::Forall("v", Formula::Implies(
                                                    Rel1(j, "v"),
                                                    Formula::Eq("v", "u")))})));
  }
  for (int j = 0; j < k; ++j) {
    for (int l = j + 1; l < k; ++l) {
      singletons.push_back(Formula::ForallAll(
          {"u", "v"},
          Formula::Implies(Formula::And({Rel1(j, "u"), Rel1(l, "v")}),
                           Formula::Not(Formula::Eq("u", "v")))));
    }
  }
  sentences.push_back(Formula::And(std::move(singletons)));

  std::vector<Formula> ordered;
  for (int j = 0; j < k; ++j) {
    for (int l = j + 1; l < k; ++l) {
      ordered.push_back(Formula::ForallAll(
          {"u", "v"},
          Formula::Implies(Formula::And({Rel1(j, "u"), Rel1(l, "v")}),
                           Less("u", "v"))));
    }
  }
  sentences.push_back(Formula::And(std::move(ordered)));

  if (k == 0) {
    sentences.push_back(Formula::True());
  } else {
    std::vector<Formula> premise = {Rel1(k - 1, "u")};
    for (int j = 0; j < k; ++j) premise.push_back(Formula::Not(Rel1(j, "v")));
    sentences.push_back(Formula::ForallAll(
        {"u", "v"},
        Formula::Implies(Formula::And(std::move(premise)), Less("u", "v"))));
  }
  return sentences;
}

EndpointSentences MakeEndpointSentences(int constant_count) {
  if (constant_count < 1) {
    throw DomainError("the successor sentence needs at least one constant");
  }
  Formula no_between = Formula::Not(Formula::Exists(
      "w", Formula::And({Less("u", "w"), Less("w", "v")})));
  Formula successor = Formula::Exists(
      "v", Formula::Forall(
               "u", Formula::Implies(
                        Rel1(constant_count - 1, "u"),
                        Formula::And({Less("u", "v"), std::move(no_between)}))));
  return {std::move(successor), MaximumSentence()};
}

Formula MaximumSentence() {
  return Formula::Exists(
      "v", Formula::Forall("u", Formula::Implies(
                                    Formula::Not(Formula::Eq("u", "v")),
                                    Less("u", "v"))));
}

}  // namespace chainlab
