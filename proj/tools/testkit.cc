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

#include "testkit.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "chainlab/combinatorics.h"
#include "chainlab/error.h"
#include "chainlab/literal_type.h"
#include "chainlab/morphism.h"

namespace chainlab::testkit {
namespace {

Signature Binary(const std::string& name) {
  return Signature({{name, 2}});
}

bool PreservesAll(const Structure& y, const std::vector<Element>& dom,
                  const std::vector<Element>& img) {
  std::vector<Element> image(static_cast<std::size_t>(y.size()), -1);
  for (std::size_t i = 0; i < dom.size(); ++i) image[dom[i]] = img[i];
  for (std::size_t r = 0; r < y.signature().size(); ++r) {
    const int arity = y.signature()[r].arity;
    Tuple src(arity), dst(arity);
    const bool ok = ForEachTuple(
        static_cast<int>(dom.size()), arity, [&](std::span<const int> idx) {
          for (int i = 0; i < arity; ++i) {
            src[i] = dom[idx[i]];
            dst[i] = image[src[i]];
          }
          return y.Holds(r, src) == y.Holds(r, dst);
        });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

Structure Cycle(int n) {
  std::vector<Tuple> edges;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (i == j) continue;
    edges.push_back({i, j});
    edges.push_back({j, i});
  }
  return Structure(Binary("E"), n, {edges});
}

Structure Path(int n) {
  std::vector<Tuple> edges;
  for (int i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1});
    edges.push_back({i + 1, i});
  }
  return Structure(Binary("E"), n, {edges});
}

Structure LinearOrder(int n) {
  std::vector<Tuple> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  return Structure(Binary("E"), n, {pairs});
}

Structure CyclicOrder(int n) {
  std::vector<Tuple> triples;
  ForEachTuple(n, 3, [&](std::span<const int> t) {
    const int b = (t[1] - t[0] + n) % n;
    const int c = (t[2] - t[0] + n) % n;
    if (b != 0 && c != 0 && b < c) triples.push_back({t[0], t[1], t[2]});
    return true;
  });
  return Structure(Signature({{"C", 3}}), n, {triples});
}

Structure UnaryMarked(int n, const std::vector<Element>& members) {
  std::vector<Tuple> tuples;
  for (Element e : members) tuples.push_back({e});
  return Structure(Signature({{"U", 1}}), n, {tuples});
}

const std::vector<Structure>& BinaryCorpus(int max_size) {
  static std::mutex mu;
  static std::map<int, std::vector<Structure>> cache;
  if (max_size > 4) {
    throw UnsupportedSizeError("the binary corpus is exhaustive up to size 4");
  }
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(max_size);
  if (it != cache.end()) return it->second;
  std::vector<Structure> out;
  for (int m = 1; m <= max_size; ++m) {
    std::map<CanonicalForm, Structure> classes;
    const int cells = m * m;
    for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
      std::vector<Tuple> edges;
      for (int c = 0; c < cells; ++c) {
        if (mask & (1u << c)) edges.push_back({c / m, c % m});
      }
      Structure y(Binary("E"), m, {edges});
      classes.try_emplace(ComputeCanonicalForm(y), std::move(y));
    }
    for (auto& [form, y] : classes) out.push_back(std::move(y));
  }
  return cache.emplace(max_size, std::move(out)).first->second;
}

std::vector<Structure> RandomCorpus(std::uint64_t seed, int count,
                                    int min_size, int max_size) {
  static const std::vector<Signature> kSignatures = {
      Signature({{"E", 2}}),
      Signature({{"U", 1}, {"E", 2}}),
      Signature({{"T", 3}}),
      Signature({{"E", 2}, {"F", 2}}),
  };
  SplitMix64 rng(seed);
  std::vector<Structure> out;
  for (int i = 0; i < count; ++i) {
    const Signature& sig = kSignatures[i % kSignatures.size()];
    const int m = min_size + i % (max_size - min_size + 1);
    const double density = 0.1 + 0.8 * rng.NextDouble();
    std::vector<std::vector<Tuple>> relations(sig.size());
    for (std::size_t r = 0; r < sig.size(); ++r) {
      ForEachTuple(m, sig[r].arity, [&](std::span<const int> t) {
        if (rng.NextDouble() < density) {
          relations[r].emplace_back(t.begin(), t.end());
        }
        return true;
      });
    }
    out.emplace_back(sig, m, std::move(relations));
  }
  return out;
}

ChainedSample RandomChained(SplitMix64& rng, int size, const Signature& sig) {
  ChainedSample s;
  s.companion = RandomCompanion(rng, size);
  s.definitions = RandomDefinitions(rng, s.companion, sig);
  s.structure = ApplyDefinitions(s.companion, s.definitions, sig);
  s.witness.f_set = s.companion.constants;
  std::sort(s.witness.f_set.begin(), s.witness.f_set.end());
  s.witness.rest_order.assign(
      s.companion.order.begin() + s.companion.constant_count(),
      s.companion.order.end());
  return s;
}

bool ForEachWitness(const Structure& y,
                    const std::function<bool(const ChainWitness&)>& fn) {
  const int m = y.size();
  for (int s = 0; s <= m; ++s) {
    const bool ok = ForEachSubset(m, s, [&](std::span<const int> f) {
      ChainWitness w;
      w.f_set.assign(f.begin(), f.end());
      for (Element e = 0; e < m; ++e) {
        if (!std::binary_search(f.begin(), f.end(), e)) {
          w.rest_order.push_back(e);
        }
      }
      do {
        if (!fn(w)) return false;
      } while (std::next_permutation(w.rest_order.begin(),
                                     w.rest_order.end()));
      return true;
    });
    if (!ok) return false;
  }
  return true;
}

bool FullQuantificationChainable(const Structure& y, const ChainWitness& w) {
  const int r = static_cast<int>(w.rest_order.size());
  std::vector<Tuple> less;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) less.push_back({i, j});
  }
  const Structure chain(Signature({{"<", 2}}), r, {less});
  bool ok = true;
  ForEachPartialAutomorphism(chain, r, [&](const PartialMap& phi) {
    std::vector<PartialMap::Pair> pairs;
    for (Element a : w.f_set) pairs.emplace_back(a, a);
    for (const auto& [s, t] : phi.pairs()) {
      pairs.emplace_back(w.rest_order[s], w.rest_order[t]);
    }
    ok = IsPartialAutomorphism(y, PartialMap(std::move(pairs)));
    return ok;
  });
  return ok;
}

std::vector<PartialMap> BruteForcePartialAutomorphisms(const Structure& y,
                                                       int max_dom) {
  std::vector<PartialMap> out;
  const int m = y.size();
  for (int k = 0; k <= std::min(max_dom, m); ++k) {
    ForEachSubset(m, k, [&](std::span<const int> d) {
      const std::vector<Element> dom(d.begin(), d.end());
      ForEachTuple(m, k, [&](std::span<const int> t) {
        std::vector<Element> img(t.begin(), t.end());
        std::vector<Element> sorted = img;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
          return true;
        }
        if (PreservesAll(y, dom, img)) {
          std::vector<PartialMap::Pair> pairs;
          for (int i = 0; i < k; ++i) pairs.emplace_back(dom[i], img[i]);
          out.emplace_back(std::move(pairs));
        }
        return true;
      });
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool BruteForceIsomorphic(const Structure& a, const Structure& b) {
  if (a.size() != b.size() || !(a.signature() == b.signature())) return false;
  std::vector<Element> perm(static_cast<std::size_t>(a.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (Relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

void Shuffle(SplitMix64& rng, std::vector<Element>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
    std::swap(v[i], v[rng.NextInt(0, i)]);
  }
}

std::vector<Element> RandomSubset(SplitMix64& rng, int n) {
  std::vector<Element> out;
  for (Element e = 0; e < n; ++e) {
    if (rng.Next() & 1) out.push_back(e);
  }
  return out;
}

Companion RandomCompanion(SplitMix64& rng, int size) {
  std::vector<Element> order(static_cast<std::size_t>(size));
  std::iota(order.begin(), order.end(), 0);
  Shuffle(rng, order);
  const int k = rng.NextInt(0, size);
  return CompanionStructure(
      size, std::span<const Element>(order.data(), k),
      std::span<const Element>(order.data() + k, order.size() - k));
}

Signature RandomSignature(SplitMix64& rng, int max_symbols, int max_arity) {
  std::vector<Symbol> symbols;
  const int count = rng.NextInt(1, max_symbols);
  for (int i = 0; i < count; ++i) {
    symbols.push_back({"S" + std::to_string(i), rng.NextInt(1, max_arity)});
  }
  return Signature(std::move(symbols));
}

QfDefinitionSet RandomDefinitions(SplitMix64& rng, const Companion& x,
                                  const Signature& sig) {
  QfDefinitionSet defs;
  defs.constant_count = x.constant_count();
  for (const Symbol& s : sig.symbols()) {
    SymbolDefinition d{s.name, s.arity, {}};
    for (const LiteralType& t : RealizedTypes(x, s.arity)) {
      if (rng.Next() & 1) d.types.push_back(t);
    }
    defs.definitions.push_back(std::move(d));
  }
  return defs;
}

Formula RandomFormula(SplitMix64& rng, const Signature& sig,
                      const std::vector<std::string>& vars,
                      int quantifier_depth, int size_budget) {
  auto var = [&] { return vars[rng.NextInt(0, vars.size() - 1)]; };
  auto atom = [&] {
    if (sig.empty() || rng.NextInt(0, 3) == 0) return Formula::Eq(var(), var());
    const Symbol& s = sig[rng.NextInt(0, sig.size() - 1)];
    std::vector<std::string> args;
    for (int i = 0; i < s.arity; ++i) args.push_back(var());
    return Formula::Rel(s.name, std::move(args));
  };
  if (size_budget <= 1 || rng.NextInt(0, 4) == 0) return atom();
  const int choice = rng.NextInt(0, quantifier_depth > 0 ? 4 : 2);
  const int child_budget = size_budget / 2;
  switch (choice) {
    case 0:
      return Formula::Not(
          RandomFormula(rng, sig, vars, quantifier_depth, size_budget - 1));
    case 1:
    case 2: {
      std::vector<Formula> operands;
      const int n = rng.NextInt(2, 3);
      for (int i = 0; i < n; ++i) {
        operands.push_back(
            RandomFormula(rng, sig, vars, quantifier_depth, child_budget));
      }
      return choice == 1 ? Formula::And(std::move(operands))
                         : Formula::Or(std::move(operands));
    }
    default: {
      Formula body =
          RandomFormula(rng, sig, vars, quantifier_depth - 1, size_budget - 1);
      return choice == 3 ? Formula::Exists(var(), std::move(body))
                         : Formula::Forall(var(), std::move(body));
    }
  }
}

Assignment RandomAssignment(SplitMix64& rng,
                            const std::vector<std::string>& vars, int size) {
  Assignment a;
  for (const std::string& v : vars) a[v] = rng.NextInt(0, size - 1);
  return a;
}

Structure Relabel(const Structure& y, const std::vector<Element>& perm) {
  std::vector<std::vector<Tuple>> relations;
  for (const auto& tuples : y.relations()) {
    std::vector<Tuple> mapped;
    for (const Tuple& t : tuples) {
      Tuple u;
      for (Element e : t) u.push_back(perm[e]);
      mapped.push_back(std::move(u));
    }
    relations.push_back(std::move(mapped));
  }
  return Structure(y.signature(), y.size(), std::move(relations));
}

}  // namespace chainlab::testkit
