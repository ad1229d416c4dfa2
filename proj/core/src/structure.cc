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

#include "chainlab/structure.h"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "chainlab/error.h"

namespace chainlab {
namespace {

constexpr std::size_t kDenseLimit = std::size_t{1} << 20;

// m^arity, or nullopt when it exceeds kDenseLimit.
std::optional<std::size_t> DenseCells(int size, int arity) {
  std::size_t cells = 1;
  for (int i = 0; i < arity; ++i) {
    if (size != 0 && cells > kDenseLimit / static_cast<std::size_t>(size)) {
      return std::nullopt;
    }
    cells *= static_cast<std::size_t>(size);
  }
  return cells;
}

std::size_t DenseIndex(int size, std::span<const Element> tuple) {
  std::size_t index = 0;
  for (Element e : tuple) index = index * static_cast<std::size_t>(size) + e;
  return index;
}

}  // namespace

Signature::Signature(std::vector<Symbol> symbols)
    : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const Symbol& s : symbols_) {
    if (s.name.empty()) throw DomainError("symbol name must be non-empty");
    if (s.arity < 1) {
      throw DomainError("symbol '" + s.name + "' must have arity >= 1");
    }
    if (!seen.insert(s.name).second) {
      throw DomainError("duplicate symbol '" + s.name + "'");
    }
  }
}

std::optional<std::size_t> Signature::IndexOf(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return std::nullopt;
}

int Signature::MaxArity() const {
  int result = 0;
  for (const Symbol& s : symbols_) result = std::max(result, s.arity);
  return result;
}

Structure::Structure(Signature signature, int size,
                     std::vector<std::vector<Tuple>> relations)
    : signature_(std::move(signature)),
      size_(size),
      relations_(std::move(relations)) {
  if (size_ < 0) throw DomainError("structure size must be non-negative");
  if (relations_.size() != signature_.size()) {
    throw DomainError("relation count does not match signature");
  }
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const Symbol& symbol = signature_[i];
    for (const Tuple& t : relations_[i]) {
      if (static_cast<int>(t.size()) != symbol.arity) {
        throw DomainError("tuple of wrong arity in relation '" + symbol.name +
                          "'");
      }
      for (Element e : t) {
        if (e < 0 || e >= size_) {
          throw DomainError("element " + std::to_string(e) +
                            " outside domain in relation '" + symbol.name +
                            "'");
        }
      }
    }
    std::sort(relations_[i].begin(), relations_[i].end());
    relations_[i].erase(std::unique(relations_[i].begin(), relations_[i].end()),
                        relations_[i].end());
  }
  BuildIndex();
}

Structure Structure::Empty(Signature signature, int size) {
  std::vector<std::vector<Tuple>> relations(signature.size());
  return Structure(std::move(signature), size, std::move(relations));
}

void Structure::BuildIndex() {
  dense_.assign(relations_.size(), {});
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    auto cells = DenseCells(size_, signature_[i].arity);
    if (!cells) continue;
    dense_[i].assign(*cells, false);
    for (const Tuple& t : relations_[i]) dense_[i][DenseIndex(size_, t)] = true;
  }
}

bool Structure::Holds(std::size_t relation,
                      std::span<const Element> tuple) const {
  const auto& dense = dense_[relation];
  if (!dense.empty() || relations_[relation].empty()) {
    if (dense.empty()) return false;
    return dense[DenseIndex(size_, tuple)];
  }
  const auto& tuples = relations_[relation];
  return std::binary_search(
      tuples.begin(), tuples.end(), tuple,
      [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                            b.end());
      });
}

Structure InducedSubstructure(const Structure& y,
                              std::span<const Element> subset) {
  std::vector<Element> h(subset.begin(), subset.end());
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  if (h.empty()) throw DomainError("induced substructure of an empty set");
  std::vector<int> relabel(static_cast<std::size_t>(y.size()), -1);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] < 0 || h[i] >= y.size()) {
      throw DomainError("element " + std::to_string(h[i]) +
                        " outside domain");
    }
    relabel[h[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<Tuple>> relations(y.signature().size());
  for (std::size_t r = 0; r < relations.size(); ++r) {
    for (const Tuple& t : y.tuples(r)) {
      Tuple image;
      image.reserve(t.size());
      bool inside = true;
      for (Element e : t) {
        if (relabel[e] < 0) {
          inside = false;
          break;
        }
        image.push_back(relabel[e]);
      }
      if (inside) relations[r].push_back(std::move(image));
    }
  }
  return Structure(y.signature(), static_cast<int>(h.size()),
                   std::move(relations));
}

Structure Reduct(const Structure& y, std::span<const std::string> keep) {
  std::unordered_set<std::string> wanted;
  for (const std::string& name : keep) {
    if (!y.signature().IndexOf(name)) {
      throw DomainError("unknown symbol '" + name + "' in reduct");
    }
    wanted.insert(name);
  }
  std::vector<Symbol> symbols;
  std::vector<std::vector<Tuple>> relations;
  for (std::size_t i = 0; i < y.signature().size(); ++i) {
    if (!wanted.count(y.signature()[i].name)) continue;
    symbols.push_back(y.signature()[i]);
    relations.push_back(y.tuples(i));
  }
  return Structure(Signature(std::move(symbols)), y.size(),
                   std::move(relations));
}

std::vector<int> Companion::Positions() const {
  std::vector<int> position(static_cast<std::size_t>(size), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = static_cast<int>(i);
  }
  return position;
}

Companion CompanionStructure(int size, std::span<const Element> f_enum,
                             std::span<const Element> rest_order) {
  if (size < 0) throw DomainError("companion size must be non-negative");
  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  auto take = [&](Element e) {
    if (e < 0 || e >= size) {
      throw DomainError("element " + std::to_string(e) + " outside domain");
    }
    if (seen[e]) {
      throw DomainError("element " + std::to_string(e) +
                        " listed twice in companion");
    }
    seen[e] = true;
  };
  for (Element e : f_enum) take(e);
  for (Element e : rest_order) take(e);
  if (f_enum.size() + rest_order.size() != static_cast<std::size_t>(size)) {
    throw DomainError("constants and rest order do not cover the domain");
  }
  Companion x;
  x.size = size;
  x.order.assign(f_enum.begin(), f_enum.end());
  x.order.insert(x.order.end(), rest_order.begin(), rest_order.end());
  x.constants.assign(f_enum.begin(), f_enum.end());
  return x;
}

CompanionAxioms ValidateCompanionAxioms(const Companion& x) {
  CompanionAxioms result;
  const auto m = static_cast<std::size_t>(std::max(x.size, 0));

  std::vector<bool> seen(m, false);
  result.linear_order = x.size >= 0 && x.order.size() == m;
  for (Element e : x.order) {
    if (e < 0 || e >= x.size || seen[e]) {
      result.linear_order = false;
      break;
    }
    seen[e] = true;
  }

  std::set<Element> distinct(x.constants.begin(), x.constants.end());
  result.distinct_singletons = distinct.size() == x.constants.size();
  for (Element c : x.constants) {
    if (c < 0 || c >= x.size) result.distinct_singletons = false;
  }

  if (!result.linear_order || !result.distinct_singletons) {
    // Order-dependent axioms cannot hold without a valid order and
    // well-formed singletons.
    return result;
  }
  const std::vector<int> position = x.Positions();
  result.ordered_as_indices = true;
  for (std::size_t j = 1; j < x.constants.size(); ++j) {
    if (position[x.constants[j - 1]] >= position[x.constants[j]]) {
      result.ordered_as_indices = false;
    }
  }
  result.initial_segment = true;
  for (Element c : x.constants) {
    if (position[c] >= x.constant_count()) result.initial_segment = false;
  }
  return result;
}

std::string ConstantSymbol(int index) { return "U" + std::to_string(index); }

Signature CompanionSignature(int constant_count) {
  std::vector<Symbol> symbols;
  symbols.push_back({std::string(kOrderSymbol), 2});
  for (int j = 0; j < constant_count; ++j) {
    symbols.push_back({ConstantSymbol(j), 1});
  }
  return Signature(std::move(symbols));
}

Structure CompanionAsStructure(const Companion& x) {
  std::vector<std::vector<Tuple>> relations(
      static_cast<std::size_t>(1 + x.constant_count()));
  for (std::size_t i = 0; i < x.order.size(); ++i) {
    for (std::size_t j = i + 1; j < x.order.size(); ++j) {
      relations[0].push_back({x.order[i], x.order[j]});
    }
  }
  for (int j = 0; j < x.constant_count(); ++j) {
    relations[1 + j].push_back({x.constants[j]});
  }
  return Structure(CompanionSignature(x.constant_count()), x.size,
                   std::move(relations));
}

}  // namespace chainlab
