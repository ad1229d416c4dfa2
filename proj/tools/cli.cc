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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "chainlab/chainability.h"
#include "chainlab/definability.h"
#include "chainlab/error.h"
#include "chainlab/formula.h"
#include "chainlab/gpw.h"
#include "chainlab/json_io.h"
#include "chainlab/random.h"
#include "chainlab/sentences.h"
#include "suites.h"

namespace chainlab {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Structure LoadStructure(const std::string& path) {
  return StructureFromJson(ParseJson(ReadFile(path)));
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  if (text.empty()) return parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (text.back() == ',') parts.emplace_back();
  return parts;
}

std::vector<Element> ParseElements(const std::string& text) {
  std::vector<Element> out;
  for (const std::string& part : SplitCommas(text)) {
    Element value = 0;
    const char* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (part.empty() || ec != std::errc() || ptr != end) {
      throw ParseError("'" + part + "' is not an element");
    }
    out.push_back(value);
  }
  return out;
}

Assignment ParseAssignment(const std::string& text) {
  Assignment a;
  for (const std::string& part : SplitCommas(text)) {
    const auto eq = part.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("assignment '" + part + "' must look like v=3");
    }
    const std::vector<Element> value = ParseElements(part.substr(eq + 1));
    if (value.size() != 1) throw ParseError("bad value in '" + part + "'");
    a[part.substr(0, eq)] = value.front();
  }
  return a;
}

Json Elements(std::span<const Element> v) {
  Json out = Json::array();
  for (Element e : v) out.push_back(e);
  return out;
}

Json ErrorObject(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

struct Options {
  bool pretty = false;
  std::string structure;
  std::string companion;
  std::string f;
  std::string order;
  std::optional<int> max_f;
  std::optional<int> up_to;
  bool forms = false;
  int n = 0;
  std::string in;
  std::string formula;
  std::string assign;
  std::string family;
  std::optional<std::string> keep;
  std::string eval_on;
  std::optional<int> sentence_size;
  bool print_sentence = false;
  RandomSpec gen;
  std::optional<int> arity;
  std::string only;
  SuiteOptions verify;
};

Json CheckChain(const Options& o) {
  const Structure y = LoadStructure(o.structure);
  ChainWitness w{ParseElements(o.f), ParseElements(o.order)};
  std::sort(w.f_set.begin(), w.f_set.end());
  return Json{{"chainable", IsChainableWith(y, w)}};
}

Json FindOrder(const Options& o) {
  const Structure y = LoadStructure(o.structure);
  std::vector<Element> f = ParseElements(o.f);
  std::sort(f.begin(), f.end());
  const std::optional<Order> order = FindChainOrder(y, f);
  return Json{{"f", Elements(f)},
              {"order", order ? Elements(*order) : Json(nullptr)}};
}

Json RunKernel(const Options& o) {
  const Structure y = LoadStructure(o.structure);
  return KernelReportToJson(Kernel(y, o.max_f.value_or(y.size())));
}

Json RunProfile(const Options& o) {
  const Structure y = LoadStructure(o.structure);
  const int up_to = o.up_to.value_or(std::min(y.size(), kMaxCanonicalSize));
  return ProfileReportToJson(Profile(y, up_to), o.forms);
}

Json RunAge(const Options& o) {
  const Structure z = LoadStructure(o.structure);
  Json forms = Json::array();
  for (const CanonicalForm& f : AgeForms(z, o.n)) forms.push_back(f.Hex());
  Json out{{"n", o.n}, {"count", forms.size()}, {"forms", std::move(forms)}};
  if (!o.in.empty()) out["subset"] = AgeSubset(z, LoadStructure(o.in), o.n);
  return out;
}

Json RunDefine(const Options& o) {
  const Structure y = LoadStructure(o.structure);
  const Companion x = CompanionFromJson(ParseJson(ReadFile(o.companion)));
  return DefinitionsToJson(ExtractDefinitions(x, y));
}

Json StarEval(const Options& o) {
  const Structure y = LoadStructure(o.structure);
  const Companion x = CompanionFromJson(ParseJson(ReadFile(o.companion)));
  const Formula f = ParseFormula(o.formula);
  const Assignment a = ParseAssignment(o.assign);
  const QfDefinitionSet defs = ExtractDefinitions(x, y);
  const Formula star = StarTranslate(f, defs);
  const bool on_companion = Evaluate(star, CompanionAsStructure(x), a);
  const bool on_structure = Evaluate(f, y, a);
  return Json{{"formula", f.ToString()},
              {"star", star.ToString()},
              {"companion_value", on_companion},
              {"structure_value", on_structure},
              {"agree", on_companion == on_structure}};
}

Json RunAgeSentence(const Options& o) {
  std::vector<Structure> family;
  for (const std::string& path : SplitCommas(o.family)) {
    family.push_back(LoadStructure(path));
  }
  std::optional<Structure> target;
  if (!o.eval_on.empty()) target = LoadStructure(o.eval_on);
  Signature sig;
  if (!family.empty()) {
    sig = family.front().signature();
  } else if (target) {
    sig = target->signature();
  } else {
    throw DomainError("an empty family needs --eval-on to fix the signature");
  }
  int n = 0;
  if (o.sentence_size) {
    n = *o.sentence_size;
  } else if (!family.empty()) {
    n = family.front().size();
  } else {
    throw DomainError("an empty family needs --n");
  }
  std::vector<std::string> keep;
  if (o.keep) {
    keep = SplitCommas(*o.keep);
  } else {
    for (const Symbol& s : sig.symbols()) keep.push_back(s.name);
  }
  const Formula sentence = AgeSentence(family, keep, n, sig);
  Json keep_json = Json::array();
  for (const std::string& k : keep) keep_json.push_back(k);
  Json out{{"n", n},
           {"keep", std::move(keep_json)},
           {"members", family.size()},
           {"node_count", sentence.NodeCount()}};
  if (o.print_sentence || !target) out["sentence"] = sentence.ToString();
  if (target) {
    const AgeSentenceCheck c = EvaluateAgeSentence(family, keep, n, *target);
    out["sentence_value"] = c.sentence_value;
    out["semantic_value"] = c.semantic_value;
    out["agree"] = c.agree();
  }
  return out;
}

Json ClassifyOrders(const Options& o) {
  const Structure y = LoadStructure(o.structure);
  const ChainOrderFamily fam = EnumerateChainingOrders(y, ParseElements(o.f));
  if (fam.orders.empty()) {
    return Json{{"f", Elements(fam.f_set)},
                {"orders", Json::array()},
                {"class", nullptr}};
  }
  return FamilyToJson(fam, ClassifyFamily(fam));
}

Json Gen(const Options& o) {
  RandomSpec spec = o.gen;
  if (o.arity) spec.min_arity = spec.max_arity = *o.arity;
  return StructureToJson(Generate(spec));
}

Json Verify(const Options& o, bool& ok) {
  std::vector<const Suite*> selected;
  if (o.only.empty()) {
    for (const Suite& s : AllSuites()) selected.push_back(&s);
  } else {
    for (const std::string& name : SplitCommas(o.only)) {
      const Suite* s = FindSuite(name);
      if (!s) throw DomainError("unknown suite '" + name + "'");
      selected.push_back(s);
    }
  }
  Json suites = Json::array();
  ok = true;
  for (const Suite* s : selected) {
    const SuiteResult r = RunSuite(*s, o.verify);
    ok = ok && r.ok();
    Json notes = Json::array();
    for (const std::string& note : r.notes) notes.push_back(note);
    suites.push_back(Json{{"name", r.name},
                          {"passed", r.passed},
                          {"failed", r.failed},
                          {"findings", r.findings},
                          {"notes", std::move(notes)}});
  }
  return Json{{"ok", ok}, {"suites", std::move(suites)}};
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  CLI::App app{"Chainability analysis for finite relational structures",
               "chainlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", o.pretty, "Indent JSON output");

  auto structure = [&](CLI::App* sub) {
    sub->add_option("--structure", o.structure, "Structure JSON file")
        ->required();
  };

  CLI::App* check = app.add_subcommand("check-chain", "Test a chain witness");
  structure(check);
  check->add_option("--f", o.f, "Comma-separated F");
  check->add_option("--order", o.order, "Order of the complement")->required();

  CLI::App* find = app.add_subcommand("find-order", "Search a chaining order");
  structure(find);
  find->add_option("--f", o.f, "Comma-separated F");

  CLI::App* kernel = app.add_subcommand("kernel", "Minimal chaining sets");
  structure(kernel);
  kernel->add_option("--max-f", o.max_f, "Largest F size searched");

  CLI::App* profile = app.add_subcommand("profile", "Profile values");
  structure(profile);
  profile->add_option("--up-to", o.up_to, "Largest level");
  profile->add_flag("--forms", o.forms, "Include canonical forms");

  CLI::App* age = app.add_subcommand("age", "Age at one level");
  structure(age);
  age->add_option("--n", o.n, "Level")->required();
  age->add_option("--in", o.in, "Structure whose age must contain it");

  CLI::App* define = app.add_subcommand("define", "Extract definitions");
  structure(define);
  define->add_option("--companion", o.companion, "Companion JSON file")
      ->required();

  CLI::App* star = app.add_subcommand("star-eval",
                                      "Compare a formula with its translation");
  structure(star);
  star->add_option("--companion", o.companion, "Companion JSON file")
      ->required();
  star->add_option("--formula", o.formula, "Formula text")->required();
  star->add_option("--assign", o.assign, "Assignment, e.g. v0=1,v1=2");

  CLI::App* sentence =
      app.add_subcommand("age-sentence", "Build and evaluate an age sentence");
  sentence->add_option("--family", o.family, "Comma-separated member files");
  sentence->add_option("--keep", o.keep, "Comma-separated kept symbols");
  sentence->add_option("--eval-on", o.eval_on, "Structure to evaluate on");
  sentence->add_option("--n", o.sentence_size, "Member size");
  sentence->add_flag("--print-sentence", o.print_sentence,
                     "Include the sentence text");

  CLI::App* classify =
      app.add_subcommand("classify-orders", "Enumerate and classify orders");
  structure(classify);
  classify->add_option("--f", o.f, "Comma-separated F");

  CLI::App* gen = app.add_subcommand("gen", "Generate a random structure");
  gen->add_option("--seed", o.gen.seed, "Seed");
  gen->add_option("--size", o.gen.size, "Domain size");
  gen->add_option("--symbols", o.gen.symbols, "Number of symbols");
  gen->add_option("--arity", o.arity, "Arity of every symbol");
  gen->add_option("--min-arity", o.gen.min_arity, "Smallest arity");
  gen->add_option("--max-arity", o.gen.max_arity, "Largest arity");
  gen->add_option("--density", o.gen.density, "Tuple probability");

  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--only", o.only, "Comma-separated suite names");
  verify->add_option("--seed", o.verify.seed, "Seed");
  verify->add_option("--cases", o.verify.cases, "Randomized formula cases");
  verify->add_option("--random", o.verify.random_structures,
                     "Seeded structures per suite");
  verify->add_option("--exhaustive-size", o.verify.exhaustive_size,
                     "Largest exhaustive corpus size (at most 4)");

  auto emit = [&](const Json& j) { out << DumpJson(j, o.pretty) << '\n'; };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit(ErrorObject("usage", e.what()));
    return kExitParseError;
  }

  try {
    bool ok = true;
    Json report;
    if (check->parsed()) {
      report = CheckChain(o);
    } else if (find->parsed()) {
      report = FindOrder(o);
    } else if (kernel->parsed()) {
      report = RunKernel(o);
    } else if (profile->parsed()) {
      report = RunProfile(o);
    } else if (age->parsed()) {
      report = RunAge(o);
    } else if (define->parsed()) {
      report = RunDefine(o);
    } else if (star->parsed()) {
      report = StarEval(o);
    } else if (sentence->parsed()) {
      report = RunAgeSentence(o);
    } else if (classify->parsed()) {
      report = ClassifyOrders(o);
    } else if (gen->parsed()) {
      report = Gen(o);
    } else {
      report = Verify(o, ok);
    }
    emit(report);
    return ok ? kExitOk : kExitDomainError;
  } catch (const NotSimplyDefinableError& e) {
    Json witnesses = Json::array({Elements(e.member()), Elements(e.non_member())});
    emit(Json{{"error", "not_simply_definable"},
              {"witnesses", std::move(witnesses)},
              {"symbol", e.symbol()},
              {"type", LiteralTypeToJson(e.type())},
              {"message", e.what()}});
    return kExitDomainError;
  } catch (const UnsupportedSizeError& e) {
    emit(ErrorObject("unsupported_size", e.what()));
    return kExitDomainError;
  } catch (const DomainError& e) {
    emit(ErrorObject("domain_error", e.what()));
    return kExitDomainError;
  } catch (const ParseError& e) {
    emit(ErrorObject("parse_error", e.what()));
    return kExitParseError;
  } catch (const std::exception& e) {
    emit(ErrorObject("internal_error", e.what()));
    return kExitDomainError;
  }
}

}  // namespace chainlab
