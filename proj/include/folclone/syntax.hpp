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

#ifndef FOLCLONE_SYNTAX_HPP_
#define FOLCLONE_SYNTAX_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace folclone {

inline constexpr std::string_view kFalse = "false";
inline constexpr std::string_view kEq = "eq";

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SignatureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//------------------------------------------------------------------------------
// Signature

// Function and predicate symbols with their arities. `false`/0 is always
// declared; `eq`/2 is declared iff the signature is with equality.
class Signature {
 public:
  using SymbolTable = std::map<std::string, int, std::less<>>;

  explicit Signature(bool with_equality = false);

  void add_function(const std::string& name, int arity);
  void add_predicate(const std::string& name, int arity);

  bool with_equality() const { return with_equality_; }
  const SymbolTable& functions() const { return functions_; }
  const SymbolTable& predicates() const { return predicates_; }

  bool is_function(std::string_view name) const;
  bool is_predicate(std::string_view name) const;
  int function_arity(std::string_view name) const;   // -1 if undeclared
  int predicate_arity(std::string_view name) const;  // -1 if undeclared

 private:
  void check_fresh(const std::string& name) const;

  bool with_equality_;
  SymbolTable functions_;
  SymbolTable predicates_;
};

// Signature file: optional `with-equality` directive, then `fn NAME ARITY`
// and `pred NAME ARITY` lines. `#` starts a comment.
Signature parse_signature(std::string_view text);
std::string print_signature(const Signature& sig);

//------------------------------------------------------------------------------
// Terms

// An element of the free clone: a variable x_i (i >= 1), a parameter, or a
// function symbol applied to terms. Immutable; copies share structure.
class Term {
 public:
  enum class Kind : unsigned char { kVar, kParam, kApp };

  static Term var(std::size_t index);
  static Term param(std::string name);
  static Term app(std::string symbol, std::vector<Term> args = {});

  Kind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == Kind::kVar; }
  bool is_param() const { return node_->kind == Kind::kParam; }
  bool is_app() const { return node_->kind == Kind::kApp; }

  // Variable index; only meaningful for kVar.
  std::size_t index() const { return node_->index; }
  // Parameter name or function symbol.
  const std::string& name() const { return node_->name; }
  std::span<const Term> args() const { return node_->args; }

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::size_t index;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

//------------------------------------------------------------------------------
// Formulas

// An element of the free predicate algebra: an atom, an implication, or the
// primitive index-shifting quantifier. Equality is tree identity.
class Formula {
 public:
  enum class Kind : unsigned char { kAtom, kImplies, kForall };

  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula falsum();
  static Formula implies(Formula lhs, Formula rhs);
  static Formula forall(Formula body);

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return node_->kind == Kind::kAtom; }
  bool is_implies() const { return node_->kind == Kind::kImplies; }
  bool is_forall() const { return node_->kind == Kind::kForall; }
  bool is_false() const { return is_atom() && node_->symbol == kFalse && node_->args.empty(); }

  const std::string& predicate() const { return node_->symbol; }
  std::span<const Term> args() const { return node_->args; }
  const Formula& lhs() const { return node_->children[0]; }
  const Formula& rhs() const { return node_->children[1]; }
  const Formula& body() const { return node_->children[0]; }

  bool same_node(const Formula& other) const { return node_ == other.node_; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string symbol;
    std::vector<Term> args;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Number of Implies/Forall constructors.
std::size_t connective_count(const Formula& f);
// Largest variable index occurring anywhere (bound or free), 0 if none.
std::size_t max_var_index(const Term& t);
std::size_t max_var_index(const Formula& f);
bool has_params(const Term& t);
bool has_params(const Formula& f);

// Throws SignatureError when a symbol is undeclared or used at the wrong arity.
void check_term(const Term& t, const Signature& sig);
void check_formula(const Formula& f, const Signature& sig);

//------------------------------------------------------------------------------
// Text forms
//
//   TERM    := xN | $NAME | NAME(TERM, ..., TERM) | NAME()
//   FORMULA := NAME(TERM, ...) | false | (FORMULA -> FORMULA) | (forall FORMULA)
//
// The parser also accepts `~A`, `t1 = t2`, `(forall xN A)` and unparenthesized
// right-associated `->` chains; all sugar is expanded while parsing.

Term parse_term(std::string_view text, const Signature& sig);
Formula parse_formula(std::string_view text, const Signature& sig);
// A term or a formula, decided by the leading symbol (names are unique across
// functions and predicates).
std::variant<Term, Formula> parse_expression(std::string_view text, const Signature& sig);

std::string print_term(const Term& t);
std::string print_formula(const Formula& f);

}  // namespace folclone

#endif  // FOLCLONE_SYNTAX_HPP_
