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

#ifndef CHAINLAB_ERROR_H_
#define CHAINLAB_ERROR_H_

#include <stdexcept>
#include <string>

namespace chainlab {

// Violated precondition on domain values: out-of-range elements, overlapping
// partitions, signature mismatches, unknown symbols.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A request falls outside an exhaustive-enumeration cap (e.g. canonical forms
// above 8 elements). Caps are never applied by silent truncation.
class UnsupportedSizeError : public DomainError {
 public:
  explicit UnsupportedSizeError(const std::string& what) : DomainError(what) {}
};

// Malformed text input: JSON documents, formula syntax.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chainlab

#endif  // CHAINLAB_ERROR_H_
