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

#ifndef FOLCLONE_SEMANTICS_HPP_
#define FOLCLONE_SEMANTICS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folclone/proof.hpp"
#include "folclone/syntax.hpp"

namespace folclone {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Elements are addressed by their position in the domain.
using Element = std::size_t;

// Position k interprets x_{k+1}.
using Env = std::vector<Element>;

// A finite structure (M, gamma) for a signature. Function tables are total
// (fresh tables send everything to the first element), `false` is empty and
// `eq` is the identity relation; neither can be changed.
class Structure {
 public:
  Structure(Signature sig, std::vector<std::string> domain);

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return domain_.size(); }
  const std::vector<std::string>& domain() const { return domain_; }
  std::optional<Element> element(std::string_view name) const;

  void set_function(std::string_view name, std::span<const Element> args, Element value);
  void set_predicate(std::string_view name, std::span<const Element> args, bool member);

  Element apply(std::string_view name, std::span<const Element> args) const;
  bool holds(std::string_view name, std::span<const Element> args) const;

  // Flat tables, indexed by the argument tuple read as a base-size number
  // with the first argument most significant.
  struct FunctionTable {
    int arity;
    std::vector<Element> values;
  };
  struct PredicateTable {
    int arity;
    std::vector<std::uint8_t> members;
  };
  const std::map<std::string, FunctionTable, std::less<>>& function_tables() const { return functions_; }
  const std::map<std::string, PredicateTable, std::less<>>& predicate_tables() const { return predicates_; }
  FunctionTable& function_table(std::string_view name);
  PredicateTable& predicate_table(std::string_view name);

  std::size_t tuple_index(std::span<const Element> args) const;
  std::vector<Element> tuple_at(std::size_t index, int arity) const;

 private:
  Signature sig_;
  std::vector<std::string> domain_;
  std::map<std::string, FunctionTable, std::less<>> functions_;
  std::map<std::string, PredicateTable, std::less<>> predicates_;
};

// Parameters are read as domain elements (the parameter set is M).
Element eval_term(const Term& t, const Structure& s, std::span<const Element> env);
// Quantifiers range over the domain. The environment must cover min_rank(f).
bool eval_formula(const Formula& f, const Structure& s, std::span<const Element> env);

// A formula with its symbols resolved against one structure. The binding
// refers to the structure's tables, so it stays valid while table entries
// are edited in place; the structure must outlive it. Not thread-safe.
class BoundFormula {
 public:
  BoundFormula(const Formula& f, const Structure& s);

  std::size_t rank() const { return rank_; }
  // Same result as eval_formula(f, s, env).
  bool operator()(std::span<const Element> env) const;

 private:
  struct TermOp {
    enum class Kind : unsigned char { kVar, kElement, kApp } kind;
    std::size_t value;  // variable index, element, or first argument slot
    std::size_t arity;
    const std::vector<Element>* table;
  };
  struct FormulaOp {
    Formula::Kind kind;
    std::size_t first;  // argument slot (atoms) or first child op
    std::size_t second;
    std::size_t arity;
    const std::vector<std::uint8_t>* table;
  };

  std::size_t add_term(const Term& t);
  std::size_t add_formula(const Formula& f);
  Element term(std::size_t op) const;
  bool formula(std::size_t op) const;

  const Structure& s_;
  std::size_t rank_;
  std::vector<TermOp> terms_;
  std::vector<std::size_t> slots_;
  std::vector<FormulaOp> formulas_;
  std::size_t root_ = 0;
  mutable std::vector<Element> stack_;
};

//------------------------------------------------------------------------------
// Perfect-valuation audit

struct ConditionReport {
  int condition = 0;
  bool applicable = true;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;
};

struct AuditReport {
  std::array<ConditionReport, 5> conditions;
  bool passed() const;
};

// Membership test for a set U of formulas.
using Membership = std::function<bool(const Formula&)>;

// Checks the five perfect-valuation conditions for U on the samples and all
// their subformulas. Quantifier instances range over `terms`. Conditions 4
// and 5 are instantiated for n up to the largest sample rank and only when
// the signature has equality.
AuditReport audit_valuation(const Membership& in_u, const Signature& sig, std::span<const Formula> samples,
                            std::span<const Term> terms);

// Audits the valuation induced by (s, env): A is in U iff A holds under env,
// extended with the first element where it is too short. `terms` is extended
// with every domain element as a parameter.
AuditReport induced_valuation_check(const Structure& s, std::span<const Element> env, std::span<const Formula> samples,
                                    std::span<const Term> terms);

std::string print_report(const AuditReport& r);

//------------------------------------------------------------------------------
// Countermodels

struct Countermodel {
  Structure structure;
  Env env;
};

inline constexpr std::uint64_t kDefaultCeiling = 20'000'000;

// Number of (structure, environment) pairs find_countermodel would visit in
// the worst case, saturating at UINT64_MAX.
std::uint64_t countermodel_search_size(const Signature& sig, std::size_t rank, std::size_t max_size);

// First structure of size 1..max_size (in enumeration order) and environment
// where every sentence of t holds and a fails. Throws ResourceLimitError when
// the search would exceed `ceiling` pairs.
std::optional<Countermodel> find_countermodel(const Signature& sig, const Theory& t, const Formula& a,
                                              std::size_t max_size, std::uint64_t ceiling = kDefaultCeiling);

//------------------------------------------------------------------------------
// Model files
//
//   domain e1 e2 ...
//   fn NAME: a1 ... an -> b      (one line per tuple; tables must be total)
//   pred NAME: a1 ... an         (one line per member tuple)
//   env e1 e2 ...                (optional)

struct Model {
  Structure structure;
  std::optional<Env> env;
};

Model parse_model(std::string_view text, const Signature& sig);
std::string print_model(const Structure& s, const Env* env = nullptr);
// Names of environment entries resolved against the domain.
Env parse_env(std::string_view text, const Structure& s);

//------------------------------------------------------------------------------
// Herbrand evaluation

// A set of closed, parameter-free atoms not containing `false`.
class AtomicValuation {
 public:
  explicit AtomicValuation(std::set<Formula> atoms = {});
  bool contains(const Formula& atom) const { return atoms_.contains(atom); }
  const std::set<Formula>& atoms() const { return atoms_; }

 private:
  std::set<Formula> atoms_;
};

// Truth of a closed formula in the perfect valuation generated by `e` over
// the finite Herbrand universe of constants. The signature must be without
// equality and have only 0-ary function symbols.
bool herbrand_eval(const AtomicValuation& e, const Formula& a, const Signature& sig);

}  // namespace folclone

#endif  // FOLCLONE_SEMANTICS_HPP_
