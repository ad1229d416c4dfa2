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

#include "chainlab/formula.h"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "chainlab/error.h"

namespace chainlab {

Formula Formula::Eq(std::string left, std::string right) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kEq, {}, {std::move(left), std::move(right)}, {}}));
}

Formula Formula::Rel(std::string symbol, std::vector<std::string> vars) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kRel, std::move(symbol), std::move(vars), {}}));
}

Formula Formula::Not(Formula f) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kNot, {}, {}, {std::move(f)}}));
}

Formula Formula::And(std::vector<Formula> operands) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kAnd, {}, {}, std::move(operands)}));
}

Formula Formula::Or(std::vector<Formula> operands) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kOr, {}, {}, std::move(operands)}));
}

Formula Formula::Exists(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kExists, {}, {std::move(var)}, {std::move(body)}}));
}

Formula Formula::Forall(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kForall, {}, {std::move(var)}, {std::move(body)}}));
}

Formula Formula::Implies(Formula a, Formula b) {
  return Or({Not(std::move(a)), std::move(b)});
}

Formula Formula::ExistsAll(const std::vector<std::string>& vars,
                           Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    body = Exists(*it, std::move(body));
  }
  return body;
}

Formula Formula::ForallAll(const std::vector<std::string>& vars,
                           Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    body = Forall(*it, std::move(body));
  }
  return body;
}

namespace {

void CollectFree(const Formula& f, std::multiset<std::string>& bound,
                 std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::kEq:
    case Formula::Kind::kRel:
      for (const std::string& v : f.vars()) {
        if (!bound.count(v)) out.insert(v);
      }
      return;
    case Formula::Kind::kExists:
    case Formula::Kind::kForall: {
      auto it = bound.insert(f.bound_var());
      CollectFree(f.children().front(), bound, out);
      bound.erase(it);
      return;
    }
    default:
      for (const Formula& c : f.children()) CollectFree(c, bound, out);
  }
}

void Print(const Formula& f, std::string& out) {
  using Kind = Formula::Kind;
  out.push_back('(');
  switch (f.kind()) {
    case Kind::kEq:
      out += "= " + f.vars()[0] + " " + f.vars()[1];
      break;
    case Kind::kRel:
      out += "rel " + f.symbol();
      for (const std::string& v : f.vars()) out += " " + v;
      break;
    case Kind::kNot:
    case Kind::kAnd:
    case Kind::kOr:
      out += f.kind() == Kind::kNot ? "not" : f.kind() == Kind::kAnd ? "and"
                                                                     : "or";
      for (const Formula& c : f.children()) {
        out.push_back(' ');
        Print(c, out);
      }
      break;
    case Kind::kExists:
    case Kind::kForall:
      out += f.kind() == Kind::kExists ? "exists " : "forall ";
      out += f.bound_var();
      out.push_back(' ');
      Print(f.children().front(), out);
      break;
  }
  out.push_back(')');
}

bool IsIdentifier(std::string_view token) {
  if (token.empty()) return false;
  const auto head = static_cast<unsigned char>(token.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_' || u == '\'';
  });
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula ParseAll() {
    Formula f = ParseOne();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing input");
    return f;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("formula: " + what + " at offset " +
                     std::to_string(pos_));
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Peek(char c) {
    SkipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void Expect(char c) {
    if (!Peek(c)) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string Word() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) Fail("expected a word");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string Identifier() {
    std::string w = Word();
    if (!IsIdentifier(w)) Fail("invalid identifier '" + w + "'");
    return w;
  }

  Formula ParseOne() {
    Expect('(');
    const std::string head = Word();
    Formula result = Formula::True();
    if (head == "=") {
      std::string a = Identifier();
      std::string b = Identifier();
      result = Formula::Eq(std::move(a), std::move(b));
    } else if (head == "rel") {
      std::string symbol = Identifier();
      std::vector<std::string> vars;
      while (!Peek(')')) vars.push_back(Identifier());
      if (vars.empty()) Fail("relational atom without arguments");
      result = Formula::Rel(std::move(symbol), std::move(vars));
    } else if (head == "not") {
      result = Formula::Not(ParseOne());
    } else if (head == "and" || head == "or") {
      std::vector<Formula> operands;
      while (!Peek(')')) operands.push_back(ParseOne());
      result = head == "and" ? Formula::And(std::move(operands))
                             : Formula::Or(std::move(operands));
    } else if (head == "exists" || head == "forall") {
      std::string var = Identifier();
      Formula body = ParseOne();
      result = head == "exists" ? Formula::Exists(std::move(var), body)
                                : Formula::Forall(std::move(var), body);
    } else {
      Fail("unknown keyword '" + head + "'");
    }
    Expect(')');
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Formulas are compiled to a flat tree with resolved variable slots and
// relation indices before evaluation.
struct CompiledNode {
  Formula::Kind kind;
  int relation = -1;
  std::vector<int> slots;
  std::vector<int> children;
};

class Compiler {
 public:
  Compiler(const Structure& y, std::vector<CompiledNode>& nodes)
      : y_(y), nodes_(nodes) {}

  int Bind(const std::string& name) {
    const int slot = slot_count_++;
    scope_[name].push_back(slot);
    return slot;
  }
  int slot_count() const { return slot_count_; }

  int Compile(const Formula& f) {
    CompiledNode node{f.kind(), -1, {}, {}};
    switch (f.kind()) {
      case Formula::Kind::kEq:
        node.slots = {Lookup(f.vars()[0]), Lookup(f.vars()[1])};
        break;
      case Formula::Kind::kRel: {
        auto index = y_.signature().IndexOf(f.symbol());
        if (!index) {
          throw DomainError("unknown symbol '" + f.symbol() + "'");
        }
        if (y_.signature()[*index].arity != static_cast<int>(f.vars().size())) {
          throw DomainError("symbol '" + f.symbol() + "' used with arity " +
                            std::to_string(f.vars().size()));
        }
        node.relation = static_cast<int>(*index);
        for (const std::string& v : f.vars()) node.slots.push_back(Lookup(v));
        break;
      }
      case Formula::Kind::kExists:
      case Formula::Kind::kForall: {
        const int slot = Bind(f.bound_var());
        node.slots = {slot};
        node.children = {Compile(f.children().front())};
        scope_[f.bound_var()].pop_back();
        break;
      }
      default:
        for (const Formula& c : f.children()) {
          node.children.push_back(Compile(c));
        }
    }
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  }

 private:
  int Lookup(const std::string& name) {
    auto it = scope_.find(name);
    if (it == scope_.end() || it->second.empty()) {
      throw DomainError("unbound variable '" + name + "'");
    }
    return it->second.back();
  }

  const Structure& y_;
  std::vector<CompiledNode>& nodes_;
  std::unordered_map<std::string, std::vector<int>> scope_;
  int slot_count_ = 0;
};

class Evaluator {
 public:
  Evaluator(const Structure& y, const std::vector<CompiledNode>& nodes,
            std::vector<Element>& env)
      : y_(y), nodes_(nodes), env_(env) {}

  bool Eval(int index) {
    const CompiledNode& node = nodes_[index];
    switch (node.kind) {
      case Formula::Kind::kEq:
        return env_[node.slots[0]] == env_[node.slots[1]];
      case Formula::Kind::kRel: {
        tuple_.resize(node.slots.size());
        for (std::size_t i = 0; i < node.slots.size(); ++i) {
          tuple_[i] = env_[node.slots[i]];
        }
        return y_.Holds(static_cast<std::size_t>(node.relation), tuple_);
      }
      case Formula::Kind::kNot:
        return !Eval(node.children.front());
      case Formula::Kind::kAnd:
        for (int c : node.children) {
          if (!Eval(c)) return false;
        }
        return true;
      case Formula::Kind::kOr:
        for (int c : node.children) {
          if (Eval(c)) return true;
        }
        return false;
      case Formula::Kind::kExists:
      case Formula::Kind::kForall: {
        const bool want = node.kind == Formula::Kind::kExists;
        for (Element e = 0; e < y_.size(); ++e) {
          env_[node.slots[0]] = e;
          if (Eval(node.children.front()) == want) return want;
        }
        return !want;
      }
    }
    return false;
  }

 private:
  const Structure& y_;
  const std::vector<CompiledNode>& nodes_;
  std::vector<Element>& env_;
  Tuple tuple_;
};

bool Equal(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind() || a.symbol() != b.symbol() ||
      a.vars() != b.vars() || a.children().size() != b.children().size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    if (!Equal(a.children()[i], b.children()[i])) return false;
  }
  return true;
}

}  // namespace

bool operator==(const Formula& a, const Formula& b) { return Equal(a, b); }

std::set<std::string> Formula::FreeVariables() const {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  CollectFree(*this, bound, out);
  return out;
}

int Formula::QuantifierDepth() const {
  int deepest = 0;
  for (const Formula& c : children()) {
    deepest = std::max(deepest, c.QuantifierDepth());
  }
  if (kind() == Kind::kExists || kind() == Kind::kForall) ++deepest;
  return deepest;
}

std::size_t Formula::NodeCount() const {
  std::size_t count = 1;
  for (const Formula& c : children()) count += c.NodeCount();
  return count;
}

std::string Formula::ToString() const {
  std::string out;
  Print(*this, out);
  return out;
}

Formula ParseFormula(std::string_view text) { return Parser(text).ParseAll(); }

bool Evaluate(const Formula& f, const Structure& y,
              const Assignment& assignment) {
  std::vector<CompiledNode> nodes;
  Compiler compiler(y, nodes);
  std::vector<Element> initial;
  for (const auto& [name, value] : assignment) {
    if (value < 0 || value >= y.size()) {
      throw DomainError("variable '" + name + "' assigned element " +
                        std::to_string(value) + " outside domain");
    }
    compiler.Bind(name);
    initial.push_back(value);
  }
  const int root = compiler.Compile(f);
  std::vector<Element> env(static_cast<std::size_t>(compiler.slot_count()), 0);
  std::copy(initial.begin(), initial.end(), env.begin());
  return Evaluator(y, nodes, env).Eval(root);
}

}  // namespace chainlab
