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


// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "golden_cases.h"
#include "suites.h"

namespace {

using chainlab::SuiteOptions;
using chainlab::SuiteResult;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 for no limit
  std::function<Outcome()> run;
};

Outcome FromSuite(const std::string& name, const SuiteOptions& o) {
  const chainlab::Suite* suite = chainlab::FindSuite(name);
  if (!suite) return {false, "suite " + name + " missing"};
  const SuiteResult r = chainlab::RunSuite(*suite, o);
  std::ostringstream s;
  s << name << ": " << r.passed << " checks, " << r.failed << " failures";
  for (const std::string& note : r.notes) {
    if (note.rfind("FAIL", 0) == 0) s << "; " << note;
  }
  return {r.ok() && r.passed > 0, s.str()};
}

Outcome GoldenFixtures(double limit_seconds) {
  Outcome out{true, ""};
  for (const chainlab::golden::GoldenCase& c : chainlab::golden::Cases()) {
    std::vector<std::string> args = c.args;
    args.insert(args.begin(), "chainlab");
    std::ostringstream text;
    const auto start = Clock::now();
    const int code = chainlab::RunCli(args, text);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool same =
        text.str() == chainlab::golden::ReadFile(chainlab::golden::GoldenPath(c.golden));
    const bool ok = code == chainlab::kExitOk && same && secs < limit_seconds;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s %s (%.2fs)", out.detail.empty() ? "" : "; ",
                  c.golden.c_str(), ok ? "matches" : "DIFFERS", secs);
    out.detail += buf;
    out.ok = out.ok && ok;
  }
  return out;
}

}  // namespace

int main() {
  SuiteOptions base;  // seed 1, all binary structures up to 4 points
  base.exhaustive_size = 4;

  SuiteOptions sweep = base;
  sweep.random_structures = 200;

  SuiteOptions star = base;
  star.cases = 1000;

  const std::vector<Criterion> criteria = {
      {1, "bounded chainability agrees with full quantification", 300,
       [&] { return FromSuite("reduction-oracle", sweep); }},
      {2, "definitions round trip for every chained witness", 0,
       [&] { return FromSuite("definability-round-trip", sweep); }},
      {3, "profile bounded by 2^kernel", 0,
       [&] { return FromSuite("profile-bound", sweep); }},
      {4, "equal traces on F give isomorphic substructures", 0,
       [&] { return FromSuite("trace-isomorphism", sweep); }},
      {5, "age sentences agree with direct age comparison", 0,
       [&] { return FromSuite("age-sentence", sweep); }},
      {6, "star translation preserves truth", 0,
       [&] { return FromSuite("star-translation", star); }},
      {7, "named fixtures reproduce golden output", 0,
       [&] { return GoldenFixtures(60.0); }},
      {8, "chaining-order families closed under reversal", 0,
       [&] { return FromSuite("family-reversal", sweep); }},
      {9, "linear orders have empty kernel and constant profile", 0,
       [&] { return FromSuite("monomorphic", base); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail += "; over time limit";
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s criterion %d: %s [%s] (%.1fs)\n", o.ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
