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

#ifndef CHAINLAB_LITERAL_TYPE_H_
#define CHAINLAB_LITERAL_TYPE_H_

#include <span>
#include <string>
#include <vector>

#include "chainlab/formula.h"
#include "chainlab/structure.h"

namespace chainlab {

// The complete quantifier-free description of a k-tuple over a companion:
// which entries coincide, how the distinct entries are ordered, and which of
// them are constants.
//
// Distinct entries form blocks numbered 0, 1, ... in increasing companion
// order; block_of[i] is the block of variable i. Numbering blocks by rank
// encodes the equality pattern and the order pattern at once.
struct LiteralType {
  std::vector<int> block_of;
  // Per block: index j of the constant a_j it equals, or -1.
  std::vector<int> constant_of_block;

  int arity() const { return static_cast<int>(block_of.size()); }
  int block_count() const { return static_cast<int>(constant_of_block.size()); }

  friend bool operator==(const LiteralType&, const LiteralType&) = default;
  friend auto operator<=>(const LiteralType&, const LiteralType&) = default;
};

// Type of `tuple` in the companion x. x must satisfy the companion axioms.
LiteralType ComputeLiteralType(const Companion& x,
                               std::span<const Element> tuple);

// Well-formed for a companion with `constant_count` constants: blocks are
// numbered by first rank, every block is used, constant blocks come first
// with strictly increasing indices below constant_count.
bool IsConsistent(const LiteralType& t, int constant_count);

// Some tuple of x has type t.
bool IsRealizable(const LiteralType& t, const Companion& x);

// All types of arity k realized in x, sorted.
std::vector<LiteralType> RealizedTypes(const Companion& x, int arity);

// The conjunction of every companion-language literal the type decides,
// over the given variables (one per position, repeats allowed): equalities
// v_i = v_j (i < j) first, then order atoms R(v_i, v_j) (i != j), then unary
// atoms U_c(v_i), each group in lexicographic order. The order is strict, so
// reflexive order atoms never appear.
Formula RenderLiteralType(const LiteralType& t,
                          std::span<const std::string> vars,
                          int constant_count);

}  // namespace chainlab

#endif  // CHAINLAB_LITERAL_TYPE_H_
