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

// Named invariant suites run by `chainlab verify` and the acceptance tests.

#ifndef CHAINLAB_TOOLS_SUITES_H_
#define CHAINLAB_TOOLS_SUITES_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace chainlab {

struct SuiteOptions {
  std::uint64_t seed = 1;
  // Randomized cases for the formula suites.
  int cases = 1000;
  // Seeded structures added to the exhaustive corpus.
  int random_structures = 200;
  // Largest size of the exhaustive single-binary-relation corpus (<= 4).
  int exhaustive_size = 4;
};

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  // Observations that are reported but do not fail the suite.
  std::size_t findings = 0;
  // First few failure and finding descriptions.
  std::vector<std::string> notes;

  bool ok() const { return failed == 0; }
  void Check(bool condition, const std::function<std::string()>& describe);
  void Finding(const std::string& description);
};

struct Suite {
  std::string name;
  std::string summary;
  std::function<void(const SuiteOptions&, SuiteResult&)> run;
};

const std::vector<Suite>& AllSuites();
// nullptr for an unknown name.
const Suite* FindSuite(const std::string& name);
// Runs a suite; an escaping exception counts as one failure.
SuiteResult RunSuite(const Suite& suite, const SuiteOptions& options);

}  // namespace chainlab

#endif  // CHAINLAB_TOOLS_SUITES_H_
