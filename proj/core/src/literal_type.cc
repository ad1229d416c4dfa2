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

#include "chainlab/literal_type.h"

#include <algorithm>
#include <set>

#include "chainlab/combinatorics.h"
#include "chainlab/error.h"

namespace chainlab {

LiteralType ComputeLiteralType(const Companion& x,
                               std::span<const Element> tuple) {
  const std::vector<int> position = x.Positions();
  std::vector<int> ranks;
  for (Element e : tuple) {
    if (e < 0 || e >= x.size) {
      throw DomainError("element " + std::to_string(e) + " outside domain");
    }
    ranks.push_back(position[e]);
  }
  std::vector<int> distinct = ranks;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());

  LiteralType t;
  for (int r : ranks) {
    t.block_of.push_back(static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), r) -
        distinct.begin()));
  }
  for (int r : distinct) {
    const Element e = x.order[r];
    auto it = std::find(x.constants.begin(), x.constants.end(), e);
    t.constant_of_block.push_back(
        it == x.constants.end()
            ? -1
            : static_cast<int>(it - x.constants.begin()));
  }
  return t;
}

bool IsConsistent(const LiteralType& t, int constant_count) {
  std::vector<bool> used(t.constant_of_block.size(), false);
  for (int b : t.block_of) {
    if (b < 0 || b >= t.block_count()) return false;
    used[b] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) return false;
  int last_constant = -1;
  bool seen_plain = false;
  for (int c : t.constant_of_block) {
    if (c < 0) {
      seen_plain = true;
      continue;
    }
    if (seen_plain || c <= last_constant || c >= constant_count) return false;
    last_constant = c;
  }
  return true;
}

bool IsRealizable(const LiteralType& t, const Companion& x) {
  if (!IsConsistent(t, x.constant_count())) return false;
  const auto plain = std::count(t.constant_of_block.begin(),
                                t.constant_of_block.end(), -1);
  return plain <= x.size - x.constant_count();
}

std::vector<LiteralType> RealizedTypes(const Companion& x, int arity) {
  std::set<LiteralType> types;
  ForEachTuple(x.size, arity, [&](std::span<const int> tuple) {
    types.insert(ComputeLiteralType(x, tuple));
    return true;
  });
  return {types.begin(), types.end()};
}

Formula RenderLiteralType(const LiteralType& t,
                          std::span<const std::string> vars,
                          int constant_count) {
  if (static_cast<int>(vars.size()) != t.arity()) {
    throw DomainError("literal type of arity " + std::to_string(t.arity()) +
                      " rendered over " + std::to_string(vars.size()) +
                      " variables");
  }
  const int k = t.arity();
  std::vector<Formula> literals;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      Formula eq = Formula::Eq(vars[i], vars[j]);
      literals.push_back(t.block_of[i] == t.block_of[j] ? eq
                                                        : Formula::Not(eq));
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      Formula less = Formula::Rel(std::string(kOrderSymbol), {vars[i], vars[j]});
      literals.push_back(t.block_of[i] < t.block_of[j] ? less
                                                       : Formula::Not(less));
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < constant_count; ++c) {
      Formula member = Formula::Rel(ConstantSymbol(c), {vars[i]});
      literals.push_back(t.constant_of_block[t.block_of[i]] == c
                             ? member
                             : Formula::Not(member));
    }
  }
  return Formula::And(std::move(literals));
}

}  // namespace chainlab
