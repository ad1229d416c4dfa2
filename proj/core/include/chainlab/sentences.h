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

// Sentence generators: age sentences pinning down the n-element types of a
// structure, the axioms of companion linear orders, and the endpoint
// sentences of the companion language.

#ifndef CHAINLAB_SENTENCES_H_
#define CHAINLAB_SENTENCES_H_

#include <string>
#include <utility>
#include <vector>

#include "chainlab/formula.h"
#include "chainlab/structure.h"

namespace chainlab {

inline constexpr int kMaxAgeSentenceSize = 6;

// Variable names v0, ..., v{n-1}.
std::vector<std::string> IndexedVariables(int n);

// Conjunction of all literals over the symbols `keep` (in signature order)
// that k satisfies under the enumeration v_i -> i: inequalities v_i != v_j
// for i < j, then each kept relation atom over every tuple of variables in
// lexicographic order, negated when the tuple is absent.
Formula DiagramFormula(const Structure& k, const std::vector<std::string>& keep);

// Disjunction of DiagramFormula under all n! renamings v_i -> v_{pi(i)},
// permutations in lexicographic order. Satisfied by a tuple exactly when the
// substructure it enumerates, restricted to `keep`, is isomorphic to k's.
Formula IsomorphismTypeFormula(const Structure& k,
                               const std::vector<std::string>& keep);

// The sentence stating that the n-element substructures, restricted to
// `keep`, realize exactly the types of `family`:
//   AND_K exists v̄ type_K(v̄)  and  forall v̄ (distinct(v̄) -> OR_K type_K(v̄)).
// Throws DomainError when members differ in size or signature, when `keep`
// names an unknown symbol, and UnsupportedSizeError for n > 6. An empty
// family needs `signature` to resolve `keep`.
Formula AgeSentence(const std::vector<Structure>& family,
                    const std::vector<std::string>& keep, int n,
                    const Signature& signature);
Formula AgeSentence(const std::vector<Structure>& family,
                    const std::vector<std::string>& keep);

struct AgeSentenceCheck {
  bool sentence_value = false;
  // Direct comparison of canonical forms of reducts.
  bool semantic_value = false;
  bool agree() const { return sentence_value == semantic_value; }
};

// Evaluates the age sentence of `family` (members of size n, signature of
// y) on y and compares with the direct age comparison. n must be at most 6.
AgeSentenceCheck EvaluateAgeSentence(const std::vector<Structure>& family,
                                     const std::vector<std::string>& keep,
                                     int n, const Structure& y);
// As above with n taken from the first member; throws DomainError for an
// empty family.
AgeSentenceCheck EvaluateAgeSentence(const std::vector<Structure>& family,
                                     const std::vector<std::string>& keep,
                                     const Structure& y);
bool CheckAgeSentenceAgreement(const std::vector<Structure>& family,
                               const std::vector<std::string>& keep,
                               const Structure& y);

// Companion-language axioms, one sentence per axiom: R is a strict linear
// order; the U_j are pairwise distinct singletons; they are ordered as their
// indices; their union is an initial segment.
std::vector<Formula> TheoryStarSentences(int constant_count);

struct EndpointSentences {
  // The last constant has an immediate successor.
  Formula successor_of_last_constant;
  // The order has a maximum.
  Formula maximum;
};

// Throws DomainError for constant_count == 0 (the first sentence mentions
// the last constant).
EndpointSentences MakeEndpointSentences(int constant_count);
// The maximum sentence alone; defined for every constant count.
Formula MaximumSentence();

}  // namespace chainlab

#endif  // CHAINLAB_SENTENCES_H_
