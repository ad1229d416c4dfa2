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

#ifndef CHAINLAB_TOOLS_CLI_H_
#define CHAINLAB_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace chainlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;

// Runs one command. args[0] is the program name. Reports and error objects
// go to `out` as JSON; help text goes to `out` as well.
int RunCli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace chainlab

#endif  // CHAINLAB_TOOLS_CLI_H_
