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

#include "chainlab/random.h"

#include <string>

#include "chainlab/combinatorics.h"
#include "chainlab/error.h"

namespace chainlab {

std::uint64_t SplitMix64::Next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::NextDouble() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

int SplitMix64::NextInt(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(Next() % span);
}

Structure Generate(const RandomSpec& spec) {
  if (spec.size < 0 || spec.size > kMaxRandomSize) {
    throw DomainError("size must lie in [0, " + std::to_string(kMaxRandomSize) +
                      "]");
  }
  if (spec.symbols < 0) throw DomainError("symbol count must be >= 0");
  if (spec.min_arity < 1 || spec.max_arity > kMaxRandomArity ||
      spec.min_arity > spec.max_arity) {
    throw DomainError("arity range must satisfy 1 <= min <= max <= " +
                      std::to_string(kMaxRandomArity));
  }
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw DomainError("density must lie in [0, 1]");
  }
  std::uint64_t cells = 1;
  for (int i = 0; i < spec.max_arity; ++i) cells *= spec.size;
  if (cells > (1u << 20)) {
    throw DomainError("size^arity exceeds 2^20 tuples");
  }

  SplitMix64 rng(spec.seed);
  std::vector<Symbol> symbols;
  for (int s = 0; s < spec.symbols; ++s) {
    symbols.push_back(
        {"S" + std::to_string(s), rng.NextInt(spec.min_arity, spec.max_arity)});
  }
  std::vector<std::vector<Tuple>> relations(symbols.size());
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    ForEachTuple(spec.size, symbols[s].arity, [&](std::span<const int> t) {
      if (rng.NextDouble() < spec.density) {
        relations[s].emplace_back(t.begin(), t.end());
      }
      return true;
    });
  }
  return Structure(Signature(std::move(symbols)), spec.size,
                   std::move(relations));
}

}  // namespace chainlab
