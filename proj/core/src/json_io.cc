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

#include "chainlab/json_io.h"

#include <set>

#include "chainlab/error.h"
#include "chainlab/sentences.h"

namespace chainlab {
namespace {

const Json& Require(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing key '") + key + "'");
  }
  return *it;
}

int AsInt(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

std::vector<Element> AsElements(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Element> out;
  for (const Json& e : j) out.push_back(AsInt(e, what));
  return out;
}

Json Elements(std::span<const Element> elements) {
  Json out = Json::array();
  for (Element e : elements) out.push_back(e);
  return out;
}

}  // namespace

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string DumpJson(const Json& j, bool pretty) {
  return pretty ? j.dump(2) : j.dump();
}

Json StructureToJson(const Structure& y) {
  Json signature = Json::array();
  for (const Symbol& s : y.signature().symbols()) {
    signature.push_back(Json{{"name", s.name}, {"arity", s.arity}});
  }
  Json relations = Json::object();
  for (std::size_t r = 0; r < y.signature().size(); ++r) {
    Json tuples = Json::array();
    for (const Tuple& t : y.tuples(r)) tuples.push_back(Elements(t));
    relations[y.signature()[r].name] = std::move(tuples);
  }
  return Json{{"signature", std::move(signature)},
              {"size", y.size()},
              {"relations", std::move(relations)}};
}

Structure StructureFromJson(const Json& j) {
  const Json& sig_json = Require(j, "signature");
  if (!sig_json.is_array()) throw ParseError("'signature' must be an array");
  std::vector<Symbol> symbols;
  for (const Json& s : sig_json) {
    const Json& name = Require(s, "name");
    if (!name.is_string()) throw ParseError("symbol name must be a string");
    symbols.push_back({name.get<std::string>(),
                       AsInt(Require(s, "arity"), "arity")});
  }
  Signature sig(std::move(symbols));
  const int size = AsInt(Require(j, "size"), "size");

  std::vector<std::vector<Tuple>> relations(sig.size());
  if (auto it = j.find("relations"); it != j.end()) {
    if (!it->is_object()) throw ParseError("'relations' must be an object");
    for (const auto& [name, tuples] : it->items()) {
      auto index = sig.IndexOf(name);
      if (!index) {
        throw ParseError("relation '" + name + "' is not in the signature");
      }
      if (!tuples.is_array()) {
        throw ParseError("relation '" + name + "' must be an array");
      }
      for (const Json& t : tuples) {
        relations[*index].push_back(AsElements(t, "tuple entry"));
      }
    }
  }
  return Structure(std::move(sig), size, std::move(relations));
}

Json CompanionToJson(const Companion& x) {
  return Json{{"size", x.size},
              {"order", Elements(x.order)},
              {"constants", Elements(x.constants)}};
}

Companion CompanionFromJson(const Json& j) {
  Companion x;
  x.size = AsInt(Require(j, "size"), "size");
  x.order = AsElements(Require(j, "order"), "order");
  if (auto it = j.find("constants"); it != j.end()) {
    x.constants = AsElements(*it, "constants");
  }
  return x;
}

Json LiteralTypeToJson(const LiteralType& t) {
  Json constants = Json::array();
  for (int c : t.constant_of_block) {
    constants.push_back(c < 0 ? Json(nullptr) : Json(c));
  }
  return Json{{"blocks", Elements(t.block_of)},
              {"constants", std::move(constants)}};
}

Json DefinitionsToJson(const QfDefinitionSet& defs) {
  Json out = Json::array();
  for (const SymbolDefinition& d : defs.definitions) {
    Json types = Json::array();
    for (const LiteralType& t : d.types) types.push_back(LiteralTypeToJson(t));
    const std::vector<std::string> vars = IndexedVariables(d.arity);
    out.push_back(Json{
        {"symbol", d.symbol},
        {"arity", d.arity},
        {"types", std::move(types)},
        {"formula",
         RenderDefinition(d, vars, defs.constant_count).ToString()}});
  }
  return Json{{"constants", defs.constant_count},
              {"definitions", std::move(out)}};
}

Json KernelReportToJson(const KernelReport& report) {
  Json sets = Json::array();
  for (const ChainWitness& w : report.minimal_sets) {
    sets.push_back(
        Json{{"f", Elements(w.f_set)}, {"order", Elements(w.rest_order)}});
  }
  return Json{{"min_size", report.min_size ? Json(*report.min_size)
                                           : Json(nullptr)},
              {"minimal_sets", std::move(sets)},
              {"search_bound", report.search_bound}};
}

Json ProfileReportToJson(const ProfileReport& report, bool with_forms) {
  Json values = Json::array();
  for (std::size_t v : report.values) values.push_back(v);
  Json out{{"values", std::move(values)}};
  if (with_forms) {
    Json forms = Json::array();
    for (const auto& level : report.age_forms) {
      Json hex = Json::array();
      for (const CanonicalForm& f : level) hex.push_back(f.Hex());
      forms.push_back(std::move(hex));
    }
    out["age_forms"] = std::move(forms);
  }
  return out;
}

Json ClassificationToJson(const GpwClassification& c) {
  Json out{{"tag", GpwTagName(c.tag)}};
  switch (c.tag) {
    case GpwTag::kRotationFamily:
      out["base"] = Elements(c.base);
      break;
    case GpwTag::kBoundedPerturbation:
      out["base"] = Elements(c.base);
      out["k"] = Elements(c.k_set);
      out["middle"] = Elements(c.middle);
      out["h"] = Elements(c.h_set);
      break;
    case GpwTag::kUnmatched:
      if (c.witness) out["witness"] = Elements(*c.witness);
      break;
    default:
      break;
  }
  Json also = Json::array();
  for (GpwTag t : c.also_matches) also.push_back(GpwTagName(t));
  out["evidence"] = Json{{"family_size", c.family_size},
                         {"pattern_size", c.pattern_size},
                         {"also_matches", std::move(also)}};
  return out;
}

Json FamilyToJson(const ChainOrderFamily& family,
                  const GpwClassification& c) {
  Json orders = Json::array();
  for (const Order& o : family.orders) orders.push_back(Elements(o));
  return Json{{"f", Elements(family.f_set)},
              {"orders", std::move(orders)},
              {"class", ClassificationToJson(c)}};
}

}  // namespace chainlab
