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

// Seeded random structures. Output depends only on the RandomSpec, so a seed
// reproduces the same structure on every platform.

#ifndef CHAINLAB_RANDOM_H_
#define CHAINLAB_RANDOM_H_

#include <cstdint>

#include "chainlab/structure.h"

namespace chainlab {

// SplitMix64. Small, portable and good enough for test generation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  // Uniform in [0, 1) from the top 53 bits.
  double NextDouble();
  // Uniform in [lo, hi]; requires lo <= hi.
  int NextInt(int lo, int hi);

 private:
  std::uint64_t state_;
};

struct RandomSpec {
  std::uint64_t seed = 0;
  int size = 5;
  int symbols = 1;
  int min_arity = 2;
  int max_arity = 2;
  double density = 0.5;
};

inline constexpr int kMaxRandomSize = 16;
inline constexpr int kMaxRandomArity = 4;

// Symbols are S0, S1, ...; each gets an arity drawn from
// [min_arity, max_arity], then every tuple is kept with probability
// `density`, in lexicographic order. Throws DomainError on an out-of-range
// RandomSpec (size > 16, arity > 4, size^arity > 2^20, density outside [0, 1]).
Structure Generate(const RandomSpec& spec);

}  // namespace chainlab

#endif  // CHAINLAB_RANDOM_H_
