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

// JSON documents for structures, companions and analysis reports.
//
//   structure  {"signature":[{"name":"E","arity":2}],"size":5,
//               "relations":{"E":[[0,1],[1,0]]}}
//   companion  {"size":5,"order":[4,0,1,2,3],"constants":[4]}
//
// Keys are emitted in a fixed order and every set is sorted, so equal values
// serialize to equal bytes.

#ifndef CHAINLAB_JSON_IO_H_
#define CHAINLAB_JSON_IO_H_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "chainlab/chainability.h"
#include "chainlab/definability.h"
#include "chainlab/gpw.h"
#include "chainlab/literal_type.h"
#include "chainlab/structure.h"

namespace chainlab {

using Json = nlohmann::ordered_json;

// Parses text as JSON; throws ParseError on malformed input.
Json ParseJson(std::string_view text);
// Compact by default, two-space indentation when pretty.
std::string DumpJson(const Json& j, bool pretty = false);

Json StructureToJson(const Structure& y);
// Throws ParseError for schema violations (missing keys, wrong types,
// relation keys outside the signature) and DomainError for semantic ones
// (elements outside the domain, wrong tuple arity). Relations missing from
// "relations" are empty.
Structure StructureFromJson(const Json& j);

Json CompanionToJson(const Companion& x);
// Shape checks only; the companion axioms are not enforced.
Companion CompanionFromJson(const Json& j);

Json LiteralTypeToJson(const LiteralType& t);
Json DefinitionsToJson(const QfDefinitionSet& defs);

Json KernelReportToJson(const KernelReport& report);
Json ProfileReportToJson(const ProfileReport& report, bool with_forms = false);

Json ClassificationToJson(const GpwClassification& c);
// {"f":[...],"orders":[[...],...],"class":{...}}
Json FamilyToJson(const ChainOrderFamily& family,
                  const GpwClassification& c);

}  // namespace chainlab

#endif  // CHAINLAB_JSON_IO_H_
