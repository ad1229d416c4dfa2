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

#include "suites.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "chainlab/chainability.h"
#include "chainlab/combinatorics.h"
#include "chainlab/definability.h"
#include "chainlab/error.h"
#include "chainlab/gpw.h"
#include "chainlab/json_io.h"
#include "chainlab/literal_type.h"
#include "chainlab/morphism.h"
#include "chainlab/random.h"
#include "chainlab/sentences.h"
#include "testkit.h"

namespace chainlab {
namespace {

namespace tk = testkit;

constexpr std::size_t kMaxNotes = 5;

std::string Show(const Structure& y) { return DumpJson(StructureToJson(y)); }

std::string Show(std::span<const Element> v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

std::string Show(const Structure& y, const ChainWitness& w) {
  return Show(y) + " F=" + Show(w.f_set) + " order=" + Show(w.rest_order);
}

// The exhaustive binary corpus followed by seeded mixed-signature
// structures of size 5.
std::vector<Structure> SweepCorpus(const SuiteOptions& o, int random_count) {
  std::vector<Structure> out = tk::BinaryCorpus(o.exhaustive_size);
  for (Structure& y : tk::RandomCorpus(o.seed, random_count, 5, 5)) {
    out.push_back(std::move(y));
  }
  return out;
}

std::vector<Element> Complement(int m, std::span<const Element> f) {
  std::vector<Element> rest;
  for (Element e = 0; e < m; ++e) {
    if (std::find(f.begin(), f.end(), e) == f.end()) rest.push_back(e);
  }
  return rest;
}

Order Reversed(Order o) {
  std::reverse(o.begin(), o.end());
  return o;
}

std::vector<Structure> AgeRepresentatives(const Structure& y, int n) {
  std::map<CanonicalForm, Structure> reps;
  ForEachSubset(y.size(), n, [&](std::span<const int> s) {
    Structure sub = InducedSubstructure(y, s);
    reps.try_emplace(ComputeCanonicalForm(sub), std::move(sub));
    return true;
  });
  std::vector<Structure> out;
  for (auto& [form, k] : reps) out.push_back(std::move(k));
  return out;
}

// ---- core ----

void SubstructureCoherence(const SuiteOptions& o, SuiteResult& r) {
  SplitMix64 rng(o.seed);
  for (const Structure& y : tk::RandomCorpus(o.seed, o.random_structures, 1, 6)) {
    std::vector<Element> all(static_cast<std::size_t>(y.size()));
    std::iota(all.begin(), all.end(), 0);
    r.Check(InducedSubstructure(y, all) == y,
            [&] { return "full restriction changed " + Show(y); });
    std::vector<Element> h = tk::RandomSubset(rng, y.size());
    if (h.empty()) h = {rng.NextInt(0, y.size() - 1)};
    std::vector<Element> idx =
        tk::RandomSubset(rng, static_cast<int>(h.size()));
    if (idx.empty()) idx = {0};
    std::vector<Element> composed;
    for (Element i : idx) composed.push_back(h[i]);
    r.Check(InducedSubstructure(InducedSubstructure(y, h), idx) ==
                InducedSubstructure(y, composed),
            [&] { return "two-step restriction differs on " + Show(y); });
  }
}

void ReductCommutes(const SuiteOptions& o, SuiteResult& r) {
  SplitMix64 rng(o.seed);
  for (const Structure& y : tk::RandomCorpus(o.seed, o.random_structures, 1, 6)) {
    std::vector<std::string> keep;
    for (const Symbol& s : y.signature().symbols()) {
      if (rng.Next() & 1) keep.push_back(s.name);
    }
    std::vector<Element> h = tk::RandomSubset(rng, y.size());
    if (h.empty()) h = {0};
    r.Check(Reduct(InducedSubstructure(y, h), keep) ==
                InducedSubstructure(Reduct(y, keep), h),
            [&] { return "reduct and restriction disagree on " + Show(y); });
  }
}

bool AllTrue(const std::vector<Formula>& sentences, const Structure& x) {
  return std::all_of(sentences.begin(), sentences.end(),
                     [&](const Formula& f) { return Evaluate(f, x); });
}

void CompanionAxiomChecks(const SuiteOptions& o, SuiteResult& r) {
  for (int m = 0; m <= 5; ++m) {
    std::vector<Element> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    do {
      for (int k = 0; k <= m; ++k) {
        const Companion x = CompanionStructure(
            m, std::span<const Element>(order.data(), k),
            std::span<const Element>(order.data() + k, m - k));
        const Structure xs = CompanionAsStructure(x);
        r.Check(ValidateCompanionAxioms(x).all(), [&] {
          return "constructed companion fails an axiom: " +
                 DumpJson(CompanionToJson(x));
        });
        r.Check(AllTrue(TheoryStarSentences(k), xs), [&] {
          return "constructed companion fails a sentence: " +
                 DumpJson(CompanionToJson(x));
        });
        r.Check(Evaluate(MaximumSentence(), xs) == (m >= 1),
                [&] { return "maximum sentence wrong at m=" + std::to_string(m); });
        if (k >= 1) {
          r.Check(Evaluate(MakeEndpointSentences(k).successor_of_last_constant,
                           xs) == (k < m),
                  [&] { return "successor sentence wrong: " +
                               DumpJson(CompanionToJson(x)); });
        }
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  // Hand-built companions, valid or not: the structural check and the
  // sentences must agree.
  SplitMix64 rng(o.seed);
  for (int i = 0; i < o.cases; ++i) {
    Companion x;
    x.size = rng.NextInt(1, 5);
    x.order.resize(x.size);
    std::iota(x.order.begin(), x.order.end(), 0);
    tk::Shuffle(rng, x.order);
    const int k = rng.NextInt(0, x.size);
    for (int j = 0; j < k; ++j) x.constants.push_back(rng.NextInt(0, x.size - 1));
    const bool structural = ValidateCompanionAxioms(x).all();
    const bool semantic = AllTrue(TheoryStarSentences(k), CompanionAsStructure(x));
    r.Check(structural == semantic, [&] {
      return "axiom check and sentences disagree on " +
             DumpJson(CompanionToJson(x));
    });
  }
}

// ---- morphism ----

std::vector<Structure> SmallCorpus(const SuiteOptions& o) {
  std::vector<Structure> out = tk::BinaryCorpus(std::min(3, o.exhaustive_size));
  for (Structure& y : tk::RandomCorpus(o.seed, o.random_structures / 4, 1, 4)) {
    out.push_back(std::move(y));
  }
  return out;
}

void PaEnumeration(const SuiteOptions& o, SuiteResult& r) {
  for (const Structure& y : SmallCorpus(o)) {
    r.Check(EnumeratePartialAutomorphisms(y, y.size()) ==
                tk::BruteForcePartialAutomorphisms(y, y.size()),
            [&] { return "enumeration differs from brute force on " + Show(y); });
  }
}

void PaRestrictionClosed(const SuiteOptions& o, SuiteResult& r) {
  for (const Structure& y : SmallCorpus(o)) {
    for (const PartialMap& p : tk::BruteForcePartialAutomorphisms(y, y.size())) {
      for (std::size_t drop = 0; drop < p.size(); ++drop) {
        std::vector<PartialMap::Pair> pairs = p.pairs();
        pairs.erase(pairs.begin() + drop);
        r.Check(IsPartialAutomorphism(y, PartialMap(pairs)),
                [&] { return "restriction of a partial automorphism fails on " +
                             Show(y); });
      }
    }
  }
}

void PaReversal(const SuiteOptions&, SuiteResult& r) {
  for (int m = 0; m <= 5; ++m) {
    const Structure chain = tk::LinearOrder(m);
    std::vector<Element> flip(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) flip[i] = m - 1 - i;
    const Structure reverse = tk::Relabel(chain, flip);
    r.Check(EnumeratePartialAutomorphisms(chain, m) ==
                EnumeratePartialAutomorphisms(reverse, m),
            [&] { return "chain and reverse differ at m=" + std::to_string(m); });
  }
}

void IsoVersusCanonical(const SuiteOptions& o, SuiteResult& r) {
  const std::vector<Structure>& classes =
      tk::BinaryCorpus(std::min(3, o.exhaustive_size));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      const Structure& a = classes[i];
      const Structure& b = classes[j];
      if (a.size() != b.size()) continue;
      const bool iso = FindIsomorphism(a, b).has_value();
      const bool same = ComputeCanonicalForm(a) == ComputeCanonicalForm(b);
      r.Check(iso == (i == j) && same == (i == j), [&] {
        return "class representatives " + Show(a) + " and " + Show(b);
      });
    }
  }
  SplitMix64 rng(o.seed);
  for (const Structure& y : tk::RandomCorpus(o.seed, o.random_structures, 1, 5)) {
    std::vector<Element> perm(static_cast<std::size_t>(y.size()));
    std::iota(perm.begin(), perm.end(), 0);
    tk::Shuffle(rng, perm);
    Structure z = tk::Relabel(y, perm);
    if (rng.Next() & 1) {
      // Toggle one tuple of the first relation.
      std::vector<std::vector<Tuple>> rel = z.relations();
      Tuple t(y.signature()[0].arity);
      for (Element& e : t) e = rng.NextInt(0, y.size() - 1);
      auto it = std::find(rel[0].begin(), rel[0].end(), t);
      if (it == rel[0].end()) {
        rel[0].push_back(t);
      } else {
        rel[0].erase(it);
      }
      z = Structure(y.signature(), y.size(), std::move(rel));
    }
    const auto found = FindIsomorphism(y, z);
    const bool oracle = tk::BruteForceIsomorphic(y, z);
    r.Check(found.has_value() == oracle &&
                (ComputeCanonicalForm(y) == ComputeCanonicalForm(z)) == oracle,
            [&] { return "isomorphism tests disagree on " + Show(y) + " vs " +
                         Show(z); });
    if (found) {
      std::vector<Element> f(static_cast<std::size_t>(y.size()));
      for (const auto& [s, t] : found->pairs()) f[s] = t;
      r.Check(tk::Relabel(y, f) == z,
              [&] { return "returned map is not an isomorphism on " + Show(y); });
    }
  }
}

// ---- chainability ----

void ReductionOracle(const SuiteOptions& o, SuiteResult& r) {
  for (const Structure& y : SweepCorpus(o, o.random_structures / 8)) {
    tk::ForEachWitness(y, [&](const ChainWitness& w) {
      r.Check(IsChainableWith(y, w) == tk::FullQuantificationChainable(y, w),
              [&] { return "bounded and full quantification disagree: " +
                           Show(y, w); });
      return true;
    });
  }
}

void ChainReversal(const SuiteOptions& o, SuiteResult& r) {
  for (const Structure& y : SweepCorpus(o, o.random_structures / 4)) {
    tk::ForEachWitness(y, [&](const ChainWitness& w) {
      const ChainWitness back{w.f_set, Reversed(w.rest_order)};
      r.Check(IsChainableWith(y, w) == IsChainableWith(y, back),
              [&] { return "reversal changes the verdict: " + Show(y, w); });
      return true;
    });
  }
}

void ChainMonotonicity(const SuiteOptions& o, SuiteResult& r) {
  for (const Structure& y : SweepCorpus(o, o.random_structures / 4)) {
    tk::ForEachWitness(y, [&](const ChainWitness& w) {
      if (!IsChainableWith(y, w)) return true;
      // Moving an endpoint of the order into F always keeps a witness.
      // Interior elements need not: on the 3-chain, F = {1} fails because
      // 0 -> 2 fixes 1 and moves the pair (0,1) to (2,1).
      for (std::size_t i = 0; i < w.rest_order.size(); ++i) {
        const Element x = w.rest_order[i];
        ChainWitness bigger = w;
        bigger.f_set.push_back(x);
        std::sort(bigger.f_set.begin(), bigger.f_set.end());
        bigger.rest_order.erase(bigger.rest_order.begin() + i);
        const bool kept = IsChainableWith(y, bigger);
        if (i == 0 || i + 1 == w.rest_order.size()) {
          r.Check(kept, [&] { return "adding endpoint " + std::to_string(x) +
                                     " to F breaks " + Show(y, w); });
        } else if (!kept) {
          r.Finding("adding interior " + std::to_string(x) + " to F breaks " +
                    Show(y, w));
        }
      }
      return true;
    });
  }
}

void FindOrderAndKernel(const SuiteOptions& o, SuiteResult& r) {
  for (const Structure& y : SweepCorpus(o, o.random_structures / 4)) {
    // Oracle: first witness per F in lexicographic order.
    std::map<std::vector<Element>, std::optional<Order>> first;
    tk::ForEachWitness(y, [&](const ChainWitness& w) {
      auto [it, inserted] = first.try_emplace(w.f_set);
      if (!it->second && IsChainableWith(y, w)) it->second = w.rest_order;
      return true;
    });
    std::optional<int> min_size;
    std::vector<ChainWitness> minimal;
    for (int s = 0; s <= y.size() && !min_size; ++s) {
      for (const auto& [f, order] : first) {
        if (static_cast<int>(f.size()) == s && order) {
          minimal.push_back({f, *order});
        }
      }
      if (!minimal.empty()) min_size = s;
    }
    for (const auto& [f, order] : first) {
      r.Check(FindChainOrder(y, f) == order,
              [&] { return "find-order differs for F=" + Show(f) + " on " +
                           Show(y); });
    }
    const KernelReport k = Kernel(y, y.size());
    r.Check(k.min_size == min_size && k.minimal_sets == minimal &&
                k.search_bound == y.size(),
            [&] { return "kernel differs from exhaustive search on " + Show(y); });
  }
}

void ProfileBound(const SuiteOptions& o, SuiteResult& r) {
  for (const Structure& y : SweepCorpus(o, o.random_structures)) {
    const KernelReport k = Kernel(y, y.size());
    r.Check(k.min_size.has_value() &&
                CheckProfileBound(y, *k.min_size, y.size()),
            [&] { return "profile exceeds 2^kernel on " + Show(y); });
  }
}

void TraceIsomorphism(const SuiteOptions& o, SuiteResult& r) {
  auto check = [&](const Structure& y, const ChainWitness& w) {
    for (int n = 1; n <= y.size(); ++n) {
      r.Check(CheckTraceIsomorphism(y, w, n), [&] {
        return "equal traces, different types at n=" + std::to_string(n) +
               ": " + Show(y, w);
      });
    }
  };
  for (const Structure& y : SweepCorpus(o, o.random_structures / 4)) {
    tk::ForEachWitness(y, [&](const ChainWitness& w) {
      if (IsChainableWith(y, w)) check(y, w);
      return true;
    });
  }
  SplitMix64 rng(o.seed);
  const Signature sig({{"U", 1}, {"E", 2}, {"T", 3}});
  for (int i = 0; i < o.random_structures; ++i) {
    const tk::ChainedSample s = tk::RandomChained(rng, rng.NextInt(1, 6), sig);
    check(s.structure, s.witness);
  }
}

void AgeTransfer(const SuiteOptions& o, SuiteResult& r) {
  const std::vector<Structure>& small =
      tk::BinaryCorpus(std::min(3, o.exhaustive_size));
  std::vector<int> kernels;
  for (const Structure& y : small) kernels.push_back(*Kernel(y, y.size()).min_size);
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = 0; j < small.size(); ++j) {
      const Structure& z = small[i];
      const Structure& y = small[j];
      if (z.size() > y.size()) continue;
      bool premise = true;
      for (int n = 1; n <= z.size() && premise; ++n) {
        premise = AgeSubset(z, y, n);
      }
      if (!premise) continue;
      r.Check(kernels[i] <= kernels[j], [&] {
        return "age-contained " + Show(z) + " has a larger kernel than " +
               Show(y);
      });
    }
  }
  SplitMix64 rng(o.seed);
  for (const Structure& y : tk::RandomCorpus(o.seed, o.random_structures / 4, 5, 5)) {
    const int ky = *Kernel(y, y.size()).min_size;
    std::vector<Element> h = tk::RandomSubset(rng, y.size());
    if (h.empty()) h = {0};
    const Structure z = InducedSubstructure(y, h);
    bool premise = true;
    for (int n = 1; n <= z.size(); ++n) premise = premise && AgeSubset(z, y, n);
    r.Check(premise, [&] { return "substructure not age-contained: " + Show(z); });
    r.Check(*Kernel(z, z.size()).min_size <= ky, [&] {
      return "substructure " + Show(z) + " has a larger kernel than " + Show(y);
    });
  }
}

// ---- logic ----

void CheckRoundTrip(SuiteResult& r, const Structure& y, const ChainWitness& w) {
  const Companion x = CompanionStructure(y.size(), w.f_set, w.rest_order);
  const bool chainable = IsChainableWith(y, w);
  std::optional<QfDefinitionSet> defs;
  try {
    defs = ExtractDefinitions(x, y);
  } catch (const NotSimplyDefinableError&) {
  }
  r.Check(defs.has_value() == chainable, [&] {
    return std::string(chainable ? "extraction failed on chainable "
                                 : "extraction succeeded on non-chainable ") +
           Show(y, w);
  });
  if (!defs) return;
  r.Check(ApplyDefinitions(x, *defs, y.signature()) == y,
          [&] { return "definitions do not reproduce " + Show(y, w); });
  const Structure xs = CompanionAsStructure(x);
  for (std::size_t s = 0; s < y.signature().size(); ++s) {
    const Symbol& symbol = y.signature()[s];
    const std::vector<std::string> vars = IndexedVariables(symbol.arity);
    const Formula phi = RenderDefinition(*defs->Find(symbol.name), vars,
                                         defs->constant_count);
    ForEachTuple(y.size(), symbol.arity, [&](std::span<const int> t) {
      Assignment a;
      for (int i = 0; i < symbol.arity; ++i) a[vars[i]] = t[i];
      r.Check(Evaluate(phi, xs, a) == y.Holds(s, t), [&] {
        return "rendered definition of " + symbol.name + " wrong at " +
               Show(t) + " for " + Show(y, w);
      });
      return true;
    });
  }
}

void DefinabilityRoundTrip(const SuiteOptions& o, SuiteResult& r) {
  for (const Structure& y : SweepCorpus(o, o.random_structures / 4)) {
    tk::ForEachWitness(y, [&](const ChainWitness& w) {
      CheckRoundTrip(r, y, w);
      return true;
    });
  }
}

void RandomDefinitionsChain(const SuiteOptions& o, SuiteResult& r) {
  SplitMix64 rng(o.seed);
  for (int i = 0; i < o.cases; ++i) {
    const Signature sig = tk::RandomSignature(rng, 3, 3);
    const tk::ChainedSample s = tk::RandomChained(rng, rng.NextInt(0, 5), sig);
    r.Check(IsChainableWith(s.structure, s.witness),
            [&] { return "applied definitions not chained: " +
                         Show(s.structure, s.witness); });
    r.Check(ExtractDefinitions(s.companion, s.structure) == s.definitions, [&] {
      return "extraction does not recover the applied definitions on " +
             Show(s.structure, s.witness);
    });
  }
}

void StarTranslation(const SuiteOptions& o, SuiteResult& r) {
  SplitMix64 rng(o.seed);
  const std::vector<std::string> vars = {"x0", "x1", "x2"};
  for (int i = 0; i < o.cases; ++i) {
    const int m = rng.NextInt(1, 5);
    const Signature sig = tk::RandomSignature(rng, 3, 3);
    const Companion x = tk::RandomCompanion(rng, m);
    const QfDefinitionSet defs = tk::RandomDefinitions(rng, x, sig);
    const Formula f = tk::RandomFormula(rng, sig, vars, 3, 12);
    const Assignment a = tk::RandomAssignment(rng, vars, m);
    const Formula star = StarTranslate(f, defs);
    const bool lhs = Evaluate(star, CompanionAsStructure(x), a);
    const bool rhs = Evaluate(f, ApplyDefinitions(x, defs, sig), a);
    r.Check(f.QuantifierDepth() <= 3 && lhs == rhs, [&] {
      return "star translation disagrees on " + f.ToString() + " over " +
             DumpJson(CompanionToJson(x));
    });
  }
}

void QuotientTranslation(const SuiteOptions& o, SuiteResult& r) {
  SplitMix64 rng(o.seed);
  const Signature full({{"E", 2}, {"U", 1}, {"E'", 2}, {"U'", 1}});
  const std::map<std::string, std::string> to_rep = {{"E'", "E"}, {"U'", "U"}};
  const std::vector<std::string> keep = {"E", "U"};
  const std::vector<std::string> vars = {"x0", "x1", "x2"};
  for (int i = 0; i < std::max(1, o.cases / 4); ++i) {
    const int m = rng.NextInt(1, 5);
    std::vector<Tuple> e, u;
    ForEachTuple(m, 2, [&](std::span<const int> t) {
      if (rng.Next() & 1) e.emplace_back(t.begin(), t.end());
      return true;
    });
    for (Element a = 0; a < m; ++a) {
      if (rng.Next() & 1) u.push_back({a});
    }
    const Structure y(full, m, {e, u, e, u});
    const Formula f = tk::RandomFormula(rng, full, vars, 3, 12);
    const Assignment a = tk::RandomAssignment(rng, vars, m);
    const Formula g = QuotientTranslate(f, full, to_rep);
    r.Check(Evaluate(f, y, a) == Evaluate(g, Reduct(y, keep), a), [&] {
      return "quotient translation disagrees on " + f.ToString();
    });
  }
}

void AgeSentences(const SuiteOptions& o, SuiteResult& r) {
  SplitMix64 rng(o.seed);
  auto check_all = [&](const Structure& y) {
    const int names = static_cast<int>(y.signature().size());
    for (int n = 1; n <= 3; ++n) {
      std::vector<std::vector<Structure>> families;
      std::vector<Structure> own =
          n <= y.size() ? AgeRepresentatives(y, n) : std::vector<Structure>{};
      families.push_back(own);
      if (!own.empty()) {
        families.push_back(
            std::vector<Structure>(own.begin() + 1, own.end()));
      }
      // A random n-element structure, usually outside the age.
      std::vector<std::vector<Tuple>> rel(y.signature().size());
      for (std::size_t s = 0; s < rel.size(); ++s) {
        ForEachTuple(n, y.signature()[s].arity, [&](std::span<const int> t) {
          if (rng.Next() & 1) rel[s].emplace_back(t.begin(), t.end());
          return true;
        });
      }
      std::vector<Structure> extended = own;
      extended.emplace_back(y.signature(), n, std::move(rel));
      families.push_back(std::move(extended));

      for (int mask = 0; mask < (1 << names); ++mask) {
        std::vector<std::string> keep;
        for (int s = 0; s < names; ++s) {
          if (mask & (1 << s)) keep.push_back(y.signature()[s].name);
        }
        for (const auto& family : families) {
          const AgeSentenceCheck c = EvaluateAgeSentence(family, keep, n, y);
          r.Check(c.agree(), [&] {
            return "age sentence at n=" + std::to_string(n) + " with " +
                   std::to_string(family.size()) +
                   " members disagrees on " + Show(y);
          });
        }
        if (n <= y.size()) {
          // The structure's own age must satisfy its sentence.
          r.Check(EvaluateAgeSentence(own, keep, n, y).sentence_value,
                  [&] { return "own age sentence false on " + Show(y); });
        }
      }
    }
  };
  for (const Structure& y : tk::BinaryCorpus(o.exhaustive_size)) check_all(y);
  for (const Structure& y :
       tk::RandomCorpus(o.seed, o.random_structures, 1, 5)) {
    check_all(y);
  }
}

void LiteralTypePartition(const SuiteOptions& o, SuiteResult& r) {
  auto check = [&](const Companion& x) {
    const std::vector<int> pos = x.Positions();
    for (int k = 1; k <= 3; ++k) {
      std::map<std::vector<bool>, LiteralType> by_literals;
      std::map<LiteralType, std::vector<bool>> by_type;
      ForEachTuple(x.size, k, [&](std::span<const int> t) {
        std::vector<bool> lits;
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) {
            if (i < j) lits.push_back(t[i] == t[j]);
            if (i != j) lits.push_back(pos[t[i]] < pos[t[j]]);
          }
          for (Element c : x.constants) lits.push_back(t[i] == c);
        }
        const LiteralType type = ComputeLiteralType(x, t);
        r.Check(IsConsistent(type, x.constant_count()),
                [&] { return "inconsistent type for " + Show(t); });
        auto [a, fresh_a] = by_literals.emplace(lits, type);
        auto [b, fresh_b] = by_type.emplace(type, lits);
        r.Check(a->second == type && b->second == lits, [&] {
          return "type does not match literal pattern at " + Show(t) +
                 " in " + DumpJson(CompanionToJson(x));
        });
        return true;
      });
      std::vector<LiteralType> classes;
      for (const auto& [type, lits] : by_type) classes.push_back(type);
      r.Check(classes == RealizedTypes(x, k),
              [&] { return "realized types differ in " + DumpJson(CompanionToJson(x)); });
      if (k <= 2) {
        const Structure xs = CompanionAsStructure(x);
        const std::vector<std::string> vars = IndexedVariables(k);
        for (const LiteralType& type : classes) {
          const Formula eps = RenderLiteralType(type, vars, x.constant_count());
          ForEachTuple(x.size, k, [&](std::span<const int> t) {
            Assignment a;
            for (int i = 0; i < k; ++i) a[vars[i]] = t[i];
            r.Check(Evaluate(eps, xs, a) == (ComputeLiteralType(x, t) == type),
                    [&] { return "rendered type " + eps.ToString() +
                                 " wrong at " + Show(t); });
            return true;
          });
        }
      }
    }
  };
  for (int m = 1; m <= 4; ++m) {
    std::vector<Element> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    do {
      for (int k = 0; k <= m; ++k) {
        check(CompanionStructure(
            m, std::span<const Element>(order.data(), k),
            std::span<const Element>(order.data() + k, m - k)));
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  SplitMix64 rng(o.seed);
  for (int i = 0; i < o.random_structures / 4; ++i) {
    check(tk::RandomCompanion(rng, 5));
  }
}

// ---- gpw ----

std::vector<std::pair<Structure, std::vector<Element>>> FamilyInputs(
    const SuiteOptions& o) {
  std::vector<std::pair<Structure, std::vector<Element>>> out;
  for (const Structure& y : SweepCorpus(o, o.random_structures / 4)) {
    for (int s = 0; s <= y.size(); ++s) {
      ForEachSubset(y.size(), s, [&](std::span<const int> f) {
        out.emplace_back(y, std::vector<Element>(f.begin(), f.end()));
        return true;
      });
    }
  }
  out.emplace_back(tk::LinearOrder(5), std::vector<Element>{});
  out.emplace_back(tk::CyclicOrder(5), std::vector<Element>{});
  out.emplace_back(tk::UnaryMarked(5, {0}), std::vector<Element>{0});
  return out;
}

void FamilyReversal(const SuiteOptions& o, SuiteResult& r) {
  for (const auto& [y, f] : FamilyInputs(o)) {
    const ChainOrderFamily fam = EnumerateChainingOrders(y, f);
    std::set<Order> members(fam.orders.begin(), fam.orders.end());
    for (const Order& ord : fam.orders) {
      r.Check(members.count(Reversed(ord)) == 1, [&] {
        return "reverse of " + Show(ord) + " missing for F=" + Show(f) +
               " on " + Show(y);
      });
    }
    // Oracle: filter every arrangement.
    std::vector<Order> expected;
    Order perm = Complement(y.size(), f);
    do {
      if (IsChainableWith(y, {f, perm})) expected.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    r.Check(fam.orders == expected,
            [&] { return "family differs from filtering for " + Show(y); });
  }
}

void Classification(const SuiteOptions& o, SuiteResult& r) {
  SplitMix64 rng(o.seed);
  for (const auto& [y, f] : FamilyInputs(o)) {
    const ChainOrderFamily fam = EnumerateChainingOrders(y, f);
    if (fam.orders.empty()) continue;
    const GpwClassification c = ClassifyFamily(fam);
    const std::vector<Element> rest = Complement(y.size(), f);
    if (c.tag != GpwTag::kUnmatched) {
      r.Check(ExpandPattern(c, rest) == fam.orders, [&] {
        return GpwTagName(c.tag) + " pattern does not reproduce the family of " +
               Show(y);
      });
    } else {
      r.Check(c.witness.has_value(), [&] { return "Unmatched without witness"; });
    }
    ChainOrderFamily shuffled = fam;
    for (int i = static_cast<int>(shuffled.orders.size()) - 1; i > 0; --i) {
      std::swap(shuffled.orders[i], shuffled.orders[rng.NextInt(0, i)]);
    }
    r.Check(DumpJson(ClassificationToJson(ClassifyFamily(shuffled))) ==
                DumpJson(ClassificationToJson(c)),
            [&] { return "classification depends on presentation order"; });
  }
}

void KernelFamiliesMatched(const SuiteOptions& o, SuiteResult& r) {
  for (const Structure& y : SweepCorpus(o, o.random_structures / 4)) {
    const KernelReport k = Kernel(y, y.size());
    for (const ChainWitness& w : k.minimal_sets) {
      const ChainOrderFamily fam = EnumerateChainingOrders(y, w.f_set);
      const GpwClassification c = ClassifyFamily(fam);
      ++r.passed;
      if (c.tag == GpwTag::kUnmatched) {
        r.Finding("Unmatched family over kernel F=" + Show(w.f_set) + " of " +
                  Show(y) + ": " + DumpJson(FamilyToJson(fam, c)));
      }
    }
  }
}

void Monomorphic(const SuiteOptions&, SuiteResult& r) {
  for (int m = 3; m <= 7; ++m) {
    const Structure y = tk::LinearOrder(m);
    const KernelReport k = Kernel(y, y.size());
    r.Check(k.min_size == 0, [&] { return "kernel of chain " + std::to_string(m); });
    const ProfileReport p = Profile(y, m);
    r.Check(std::all_of(p.values.begin(), p.values.end(),
                        [](std::size_t v) { return v == 1; }) &&
                p.values.size() == static_cast<std::size_t>(m),
            [&] { return "profile of chain " + std::to_string(m) + " not 1"; });
  }
}

// ---- cli ----

void Generation(const SuiteOptions& o, SuiteResult& r) {
  SplitMix64 rng(o.seed);
  for (int i = 0; i < 50; ++i) {
    RandomSpec spec;
    spec.seed = rng.Next();
    spec.size = rng.NextInt(0, 6);
    spec.symbols = rng.NextInt(0, 3);
    spec.min_arity = rng.NextInt(1, 3);
    spec.max_arity = rng.NextInt(spec.min_arity, 3);
    spec.density = rng.NextDouble();
    const std::string once = DumpJson(StructureToJson(Generate(spec)));
    r.Check(once == DumpJson(StructureToJson(Generate(spec))),
            [&] { return "generation is not deterministic"; });
    spec.density = 0.0;
    const Structure empty = Generate(spec);
    spec.density = 1.0;
    const Structure full = Generate(spec);
    for (std::size_t s = 0; s < full.signature().size(); ++s) {
      std::size_t cells = 1;
      for (int a = 0; a < full.signature()[s].arity; ++a) cells *= spec.size;
      r.Check(empty.tuples(s).empty() && full.tuples(s).size() == cells,
              [&] { return "density extremes not honored"; });
    }
  }
}

}  // namespace

void SuiteResult::Check(bool condition,
                        const std::function<std::string()>& describe) {
  if (condition) {
    ++passed;
    return;
  }
  ++failed;
  if (notes.size() < kMaxNotes) notes.push_back("FAIL " + describe());
}

void SuiteResult::Finding(const std::string& description) {
  ++findings;
  if (notes.size() < kMaxNotes) notes.push_back("FINDING " + description);
}

const std::vector<Suite>& AllSuites() {
  static const std::vector<Suite> suites = {
      {"substructure-coherence", "two-step restriction equals one step",
       SubstructureCoherence},
      {"reduct-commutes", "reduct and restriction commute", ReductCommutes},
      {"companion-axioms", "constructed companions satisfy the axioms",
       CompanionAxiomChecks},
      {"pa-enumeration", "enumeration equals brute force", PaEnumeration},
      {"pa-restriction-closed", "partial automorphisms closed under restriction",
       PaRestrictionClosed},
      {"pa-reversal", "a chain and its reverse share partial automorphisms",
       PaReversal},
      {"iso-vs-canonical", "isomorphism iff equal canonical forms",
       IsoVersusCanonical},
      {"reduction-oracle", "bounded and full quantification agree",
       ReductionOracle},
      {"chain-reversal", "reversing the order keeps the verdict", ChainReversal},
      {"chain-monotonicity", "enlarging F keeps a witness", ChainMonotonicity},
      {"kernel-exhaustive", "find-order and kernel match exhaustive search",
       FindOrderAndKernel},
      {"profile-bound", "profile values at most 2^kernel", ProfileBound},
      {"trace-isomorphism", "equal traces on F give isomorphic substructures",
       TraceIsomorphism},
      {"age-transfer", "age containment bounds the kernel", AgeTransfer},
      {"definability-round-trip",
       "chainable iff simply definable; definitions reproduce the structure",
       DefinabilityRoundTrip},
      {"random-definitions-chain", "applied definitions are chained",
       RandomDefinitionsChain},
      {"star-translation", "star translation preserves truth", StarTranslation},
      {"quotient-translation", "quotient translation preserves truth",
       QuotientTranslation},
      {"age-sentence", "age sentence agrees with direct age comparison",
       AgeSentences},
      {"literal-type-partition", "literal types partition the tuple space",
       LiteralTypePartition},
      {"family-reversal", "chaining-order families closed under reversal",
       FamilyReversal},
      {"classification", "classification is sound and order independent",
       Classification},
      {"kernel-families-matched",
       "families over kernel sets match a case (Unmatched is a finding)",
       KernelFamiliesMatched},
      {"monomorphic", "chains have kernel 0 and constant profile 1",
       Monomorphic},
      {"generation", "seeded generation is deterministic", Generation},
  };
  return suites;
}

const Suite* FindSuite(const std::string& name) {
  for (const Suite& s : AllSuites()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

SuiteResult RunSuite(const Suite& suite, const SuiteOptions& options) {
  SuiteResult result;
  result.name = suite.name;
  try {
    suite.run(options, result);
  } catch (const std::exception& e) {
    ++result.failed;
    result.notes.push_back(std::string("FAIL exception: ") + e.what());
  }
  return result;
}

}  // namespace chainlab
