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

// Small enumeration helpers shared by the exhaustive searches. All of them
// visit their objects in lexicographic order.

#ifndef CHAINLAB_COMBINATORICS_H_
#define CHAINLAB_COMBINATORICS_H_

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace chainlab {

// Calls fn(span) for every tuple in {0..base-1}^length. A zero-length tuple
// is visited exactly once. fn returns false to stop early; the return value
// reports whether the enumeration ran to completion.
template <typename Fn>
bool ForEachTuple(int base, int length, Fn&& fn) {
  std::vector<int> tuple(static_cast<std::size_t>(length), 0);
  if (length > 0 && base <= 0) return true;
  while (true) {
    if (!fn(std::span<const int>(tuple))) return false;
    int pos = length - 1;
    while (pos >= 0 && tuple[pos] == base - 1) {
      tuple[pos] = 0;
      --pos;
    }
    if (pos < 0) return true;
    ++tuple[pos];
  }
}

// Calls fn(span) for every strictly increasing k-subset of {0..n-1}.
template <typename Fn>
bool ForEachSubset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return true;
  std::vector<int> subset(static_cast<std::size_t>(k));
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    if (!fn(std::span<const int>(subset))) return false;
    int pos = k - 1;
    while (pos >= 0 && subset[pos] == n - k + pos) --pos;
    if (pos < 0) return true;
    ++subset[pos];
    for (int i = pos + 1; i < k; ++i) subset[i] = subset[i - 1] + 1;
  }
}

// n! as a 64-bit value; callers keep n small.
inline std::uint64_t Factorial(int n) {
  std::uint64_t result = 1;
  for (int i = 2; i <= n; ++i) result *= static_cast<std::uint64_t>(i);
  return result;
}

}  // namespace chainlab

#endif  // CHAINLAB_COMBINATORICS_H_
