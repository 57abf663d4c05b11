// Copyright 2026 The folclone Authors.
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

#include "folclone/syntax.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "text_util.hpp"

namespace folclone {

//------------------------------------------------------------------------------
// Signature

Signature::Signature(bool with_equality) : with_equality_(with_equality) {
  predicates_.emplace(std::string(kFalse), 0);
  if (with_equality_) predicates_.emplace(std::string(kEq), 2);
}

void Signature::check_fresh(const std::string& name) const {
  if (!detail::is_symbol_name(name)) throw SignatureError("invalid symbol name '" + name + "'");
  if (functions_.contains(name) || predicates_.contains(name))
    throw SignatureError("duplicate symbol '" + name + "'");
}

void Signature::add_function(const std::string& name, int arity) {
  if (arity < 0) throw SignatureError("negative arity for '" + name + "'");
  if (name == kFalse || name == kEq)
    throw SignatureError("reserved name '" + name + "' cannot be a function");
  check_fresh(name);
  functions_.emplace(name, arity);
}

void Signature::add_predicate(const std::string& name, int arity) {
  if (arity < 0) throw SignatureError("negative arity for '" + name + "'");
  if (name == kFalse) {
    if (arity != 0) throw SignatureError("reserved predicate 'false' must have arity 0");
    return;
  }
  if (name == kEq) {
    if (arity != 2) throw SignatureError("reserved predicate 'eq' must have arity 2");
    if (!with_equality_) throw SignatureError("'eq' requires the with-equality directive");
    return;
  }
  check_fresh(name);
  predicates_.emplace(name, arity);
}

bool Signature::is_function(std::string_view name) const { return functions_.find(name) != functions_.end(); }
bool Signature::is_predicate(std::string_view name) const { return predicates_.find(name) != predicates_.end(); }

int Signature::function_arity(std::string_view name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? -1 : it->second;
}

int Signature::predicate_arity(std::string_view name) const {
  auto it = predicates_.find(name);
  return it == predicates_.end() ? -1 : it->second;
}

Signature parse_signature(std::string_view text) {
  std::vector<std::vector<std::string>> decls;
  bool with_equality = false;
  std::size_t lineno = 0;
  for (const auto& raw : detail::split_lines(text)) {
    ++lineno;
    auto words = detail::split_words(detail::strip_comment(raw));
    if (words.empty()) continue;
    if (words.size() == 1 && words[0] == "with-equality") {
      if (!decls.empty()) throw ParseError("line " + std::to_string(lineno) + ": with-equality must come first");
      with_equality = true;
      continue;
    }
    if (words.size() != 3 || (words[0] != "fn" && words[0] != "pred"))
      throw ParseError("line " + std::to_string(lineno) + ": expected 'fn NAME ARITY' or 'pred NAME ARITY'");
    decls.push_back(std::move(words));
  }

  Signature sig(with_equality);
  for (const auto& d : decls) {
    int arity = 0;
    const auto& a = d[2];
    auto [ptr, ec] = std::from_chars(a.data(), a.data() + a.size(), arity);
    if (ec != std::errc() || ptr != a.data() + a.size()) throw ParseError("bad arity '" + a + "' for '" + d[1] + "'");
    if (d[0] == "fn")
      sig.add_function(d[1], arity);
    else
      sig.add_predicate(d[1], arity);
  }
  return sig;
}

std::string print_signature(const Signature& sig) {
  std::ostringstream out;
  if (sig.with_equality()) out << "with-equality\n";
  for (const auto& [name, arity] : sig.functions()) out << "fn " << name << ' ' << arity << '\n';
  for (const auto& [name, arity] : sig.predicates())
    if (name != kFalse && name != kEq) out << "pred " << name << ' ' << arity << '\n';
  return out.str();
}

//------------------------------------------------------------------------------
// Term

Term Term::var(std::size_t index) {
  if (index == 0) throw std::invalid_argument("variable index must be positive");
  return Term(std::make_shared<const Node>(Node{Kind::kVar, index, {}, {}}));
}

Term Term::param(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::kParam, 0, std::move(name), {}}));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{Kind::kApp, 0, std::move(symbol), std::move(args)}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kVar:
      return a.index() == b.index();
    case Term::Kind::kParam:
      return a.name() == b.name();
    case Term::Kind::kApp:
      return a.name() == b.name() && std::ranges::equal(a.args(), b.args());
  }
  return false;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Term::Kind::kVar:
      return a.index() <=> b.index();
    case Term::Kind::kParam:
      return a.name() <=> b.name();
    case Term::Kind::kApp:
      if (auto c = a.name() <=> b.name(); c != 0) return c;
      return std::lexicographical_compare_three_way(a.args().begin(), a.args().end(), b.args().begin(),
                                                    b.args().end());
  }
  return std::strong_ordering::equal;
}

//------------------------------------------------------------------------------
// Formula

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  return Formula(std::make_shared<const Node>(Node{Kind::kAtom, std::move(predicate), std::move(args), {}}));
}

Formula Formula::falsum() {
  static const Formula f = atom(std::string(kFalse));
  return f;
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::kImplies, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::forall(Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::kForall, {}, {}, {std::move(body)}}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::kAtom:
      return a.predicate() == b.predicate() && std::ranges::equal(a.args(), b.args());
    case Formula::Kind::kImplies:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::kForall:
      return a.body() == b.body();
  }
  return false;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Formula::Kind::kAtom:
      if (auto c = a.predicate() <=> b.predicate(); c != 0) return c;
      return std::lexicographical_compare_three_way(a.args().begin(), a.args().end(), b.args().begin(),
                                                    b.args().end());
    case Formula::Kind::kImplies:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
    case Formula::Kind::kForall:
      return a.body() <=> b.body();
  }
  return std::strong_ordering::equal;
}

//------------------------------------------------------------------------------
// Structural queries

std::size_t connective_count(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return 0;
    case Formula::Kind::kImplies:
      return 1 + connective_count(f.lhs()) + connective_count(f.rhs());
    case Formula::Kind::kForall:
      return 1 + connective_count(f.body());
  }
  return 0;
}

std::size_t max_var_index(const Term& t) {
  if (t.is_var()) return t.index();
  std::size_t m = 0;
  for (const auto& a : t.args()) m = std::max(m, max_var_index(a));
  return m;
}

std::size_t max_var_index(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      std::size_t m = 0;
      for (const auto& a : f.args()) m = std::max(m, max_var_index(a));
      return m;
    }
    case Formula::Kind::kImplies:
      return std::max(max_var_index(f.lhs()), max_var_index(f.rhs()));
    case Formula::Kind::kForall:
      return max_var_index(f.body());
  }
  return 0;
}

bool has_params(const Term& t) {
  if (t.is_param()) return true;
  return std::ranges::any_of(t.args(), [](const Term& a) { return has_params(a); });
}

bool has_params(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return std::ranges::any_of(f.args(), [](const Term& a) { return has_params(a); });
    case Formula::Kind::kImplies:
      return has_params(f.lhs()) || has_params(f.rhs());
    case Formula::Kind::kForall:
      return has_params(f.body());
  }
  return false;
}

void check_term(const Term& t, const Signature& sig) {
  if (!t.is_app()) return;
  int arity = sig.function_arity(t.name());
  if (arity < 0) throw SignatureError("unknown function symbol '" + t.name() + "'");
  if (static_cast<std::size_t>(arity) != t.args().size())
    throw SignatureError("function '" + t.name() + "' expects " + std::to_string(arity) + " argument(s), got " +
                         std::to_string(t.args().size()));
  for (const auto& a : t.args()) check_term(a, sig);
}

void check_formula(const Formula& f, const Signature& sig) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      int arity = sig.predicate_arity(f.predicate());
      if (arity < 0) throw SignatureError("unknown predicate symbol '" + f.predicate() + "'");
      if (static_cast<std::size_t>(arity) != f.args().size())
        throw SignatureError("predicate '" + f.predicate() + "' expects " + std::to_string(arity) +
                             " argument(s), got " + std::to_string(f.args().size()));
      for (const auto& a : f.args()) check_term(a, sig);
      return;
    }
    case Formula::Kind::kImplies:
      check_formula(f.lhs(), sig);
      check_formula(f.rhs(), sig);
      return;
    case Formula::Kind::kForall:
      check_formula(f.body(), sig);
      return;
  }
}

//------------------------------------------------------------------------------
// Printing

namespace {

void print_to(std::string& out, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      out += 'x';
      out += std::to_string(t.index());
      return;
    case Term::Kind::kParam:
      out += '$';
      out += t.name();
      return;
    case Term::Kind::kApp:
      out += t.name();
      out += '(';
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ", ";
        print_to(out, t.args()[i]);
      }
      out += ')';
      return;
  }
}

void print_to(std::string& out, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      out += f.predicate();
      if (f.is_false()) return;
      out += '(';
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ", ";
        print_to(out, f.args()[i]);
      }
      out += ')';
      return;
    case Formula::Kind::kImplies:
      out += '(';
      print_to(out, f.lhs());
      out += " -> ";
      print_to(out, f.rhs());
      out += ')';
      return;
    case Formula::Kind::kForall:
      out += "(forall ";
      print_to(out, f.body());
      out += ')';
      return;
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_to(out, t);
  return out;
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_to(out, f);
  return out;
}

}  // namespace folclone
