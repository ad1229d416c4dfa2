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

// Corpora, brute-force oracles and random generators shared by the verify
// suites, the unit tests and the benchmarks.

#ifndef CHAINLAB_TOOLS_TESTKIT_H_
#define CHAINLAB_TOOLS_TESTKIT_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chainlab/chainability.h"
#include "chainlab/definability.h"
#include "chainlab/formula.h"
#include "chainlab/random.h"
#include "chainlab/structure.h"

namespace chainlab::testkit {

// ---- named structures ----

// Symmetric cycle on n vertices, symbol E.
Structure Cycle(int n);
// Symmetric path 0-1-...-(n-1), symbol E.
Structure Path(int n);
// Strict order 0 < 1 < ... < n-1, symbol E.
Structure LinearOrder(int n);
// Clockwise triples (a,b,c) of the regular n-gon, symbol C.
Structure CyclicOrder(int n);
// Unary U = members on domain n.
Structure UnaryMarked(int n, const std::vector<Element>& members);

// ---- corpora ----

// One representative per isomorphism class of structures with a single
// binary symbol E, for sizes 1..max_size, ordered by (size, canonical form).
const std::vector<Structure>& BinaryCorpus(int max_size);

// Seeded structures over a rotating set of small signatures (binary,
// unary+binary, ternary, two binaries). Sizes cycle through
// [min_size, max_size].
std::vector<Structure> RandomCorpus(std::uint64_t seed, int count,
                                    int min_size, int max_size);

// Structures chained by construction: a random companion and random
// definitions applied to it. Returns the structure and the witness.
struct ChainedSample {
  Structure structure;
  ChainWitness witness;
  Companion companion;
  QfDefinitionSet definitions;
};
ChainedSample RandomChained(SplitMix64& rng, int size, const Signature& sig);

// Calls fn for every (F, order) pair over y's domain: F in increasing size
// then lexicographic, orders lexicographic. fn returns false to stop.
bool ForEachWitness(const Structure& y,
                    const std::function<bool(const ChainWitness&)>& fn);

// ---- oracles ----

// Chainability by full quantification: every partial automorphism of the
// chain on the complement of F, of any size, extended by id_F, must be a
// partial automorphism of y.
bool FullQuantificationChainable(const Structure& y, const ChainWitness& w);

// Every injective partial map on y's domain with at most max_dom pairs that
// preserves all relations, found by brute force and sorted.
std::vector<PartialMap> BruteForcePartialAutomorphisms(const Structure& y,
                                                       int max_dom);

// Isomorphism by trying every bijection.
bool BruteForceIsomorphic(const Structure& a, const Structure& b);

// ---- random values ----

void Shuffle(SplitMix64& rng, std::vector<Element>& v);
std::vector<Element> RandomSubset(SplitMix64& rng, int n);
Companion RandomCompanion(SplitMix64& rng, int size);
Signature RandomSignature(SplitMix64& rng, int max_symbols, int max_arity);
QfDefinitionSet RandomDefinitions(SplitMix64& rng, const Companion& x,
                                  const Signature& sig);
// Formula over sig using variables from `vars`; quantifiers rebind names
// from the same pool, so any assignment of all of `vars` is total.
Formula RandomFormula(SplitMix64& rng, const Signature& sig,
                      const std::vector<std::string>& vars,
                      int quantifier_depth, int size_budget);
Assignment RandomAssignment(SplitMix64& rng,
                            const std::vector<std::string>& vars, int size);
Structure Relabel(const Structure& y, const std::vector<Element>& perm);

}  // namespace chainlab::testkit

#endif  // CHAINLAB_TOOLS_TESTKIT_H_
