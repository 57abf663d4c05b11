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

#include "folclone/semantics.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "folclone/clone.hpp"

namespace folclone {

//------------------------------------------------------------------------------
// Structure

namespace {

constexpr std::size_t kMaxTable = 1u << 24;

std::size_t table_size(std::size_t n, int arity) {
  std::size_t out = 1;
  for (int k = 0; k < arity; ++k) {
    if (out > kMaxTable / std::max<std::size_t>(n, 1)) throw ModelError("table too large");
    out *= n;
  }
  return out;
}

}  // namespace

Structure::Structure(Signature sig, std::vector<std::string> domain) : sig_(std::move(sig)), domain_(std::move(domain)) {
  if (domain_.empty()) throw ModelError("domain must be nonempty");
  std::set<std::string_view> seen;
  for (const auto& d : domain_)
    if (!seen.insert(d).second) throw ModelError("duplicate domain element '" + d + "'");
  for (const auto& [name, arity] : sig_.functions())
    functions_.emplace(name, FunctionTable{arity, std::vector<Element>(table_size(size(), arity), 0)});
  for (const auto& [name, arity] : sig_.predicates())
    predicates_.emplace(name, PredicateTable{arity, std::vector<std::uint8_t>(table_size(size(), arity), 0)});
  if (sig_.with_equality()) {
    auto& eq = predicates_.find(kEq)->second;
    for (Element m = 0; m < size(); ++m) eq.members[m * size() + m] = 1;
  }
}

std::optional<Element> Structure::element(std::string_view name) const {
  auto it = std::find(domain_.begin(), domain_.end(), name);
  if (it == domain_.end()) return std::nullopt;
  return static_cast<Element>(it - domain_.begin());
}

std::size_t Structure::tuple_index(std::span<const Element> args) const {
  std::size_t idx = 0;
  for (auto a : args) {
    if (a >= size()) throw ModelError("element index out of range");
    idx = idx * size() + a;
  }
  return idx;
}

std::vector<Element> Structure::tuple_at(std::size_t index, int arity) const {
  std::vector<Element> out(static_cast<std::size_t>(arity));
  for (int k = arity - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = index % size();
    index /= size();
  }
  return out;
}

Structure::FunctionTable& Structure::function_table(std::string_view name) {
  auto it = functions_.find(name);
  if (it == functions_.end()) throw ModelError("unknown function symbol '" + std::string(name) + "'");
  return it->second;
}

Structure::PredicateTable& Structure::predicate_table(std::string_view name) {
  if (name == kFalse || name == kEq) throw ModelError("'" + std::string(name) + "' has a fixed interpretation");
  auto it = predicates_.find(name);
  if (it == predicates_.end()) throw ModelError("unknown predicate symbol '" + std::string(name) + "'");
  return it->second;
}

void Structure::set_function(std::string_view name, std::span<const Element> args, Element value) {
  auto& table = function_table(name);
  if (args.size() != static_cast<std::size_t>(table.arity))
    throw ModelError("arity mismatch for '" + std::string(name) + "'");
  if (value >= size()) throw ModelError("element index out of range");
  table.values[tuple_index(args)] = value;
}

void Structure::set_predicate(std::string_view name, std::span<const Element> args, bool member) {
  auto& table = predicate_table(name);
  if (args.size() != static_cast<std::size_t>(table.arity))
    throw ModelError("arity mismatch for '" + std::string(name) + "'");
  table.members[tuple_index(args)] = member ? 1 : 0;
}

Element Structure::apply(std::string_view name, std::span<const Element> args) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) throw ModelError("unknown function symbol '" + std::string(name) + "'");
  return it->second.values[tuple_index(args)];
}

bool Structure::holds(std::string_view name, std::span<const Element> args) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) throw ModelError("unknown predicate symbol '" + std::string(name) + "'");
  return it->second.members[tuple_index(args)] != 0;
}

//------------------------------------------------------------------------------
// Evaluation

namespace {

// Environment kept reversed so that entering a binder is a push: x_i is
// stack_[size - i].
class Evaluator {
 public:
  Evaluator(const Structure& s, std::span<const Element> env) : s_(s), stack_(env.rbegin(), env.rend()) {
    for (auto m : env)
      if (m >= s.size()) throw EvalError("environment element out of range");
  }

  Element term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kVar:
        if (t.index() > stack_.size())
          throw EvalError("environment too short: x" + std::to_string(t.index()) + " is unbound");
        return stack_[stack_.size() - t.index()];
      case Term::Kind::kParam: {
        auto m = s_.element(t.name());
        if (!m) throw EvalError("parameter $" + t.name() + " is not a domain element");
        return *m;
      }
      case Term::Kind::kApp: {
        auto it = s_.function_tables().find(t.name());
        if (it == s_.function_tables().end()) throw EvalError("unknown function symbol '" + t.name() + "'");
        std::size_t idx = 0;
        for (const auto& a : t.args()) idx = idx * s_.size() + term(a);
        return it->second.values[idx];
      }
    }
    return 0;
  }

  bool formula(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::kAtom: {
        auto it = s_.predicate_tables().find(f.predicate());
        if (it == s_.predicate_tables().end()) throw EvalError("unknown predicate symbol '" + f.predicate() + "'");
        std::size_t idx = 0;
        for (const auto& a : f.args()) idx = idx * s_.size() + term(a);
        return it->second.members[idx] != 0;
      }
      case Formula::Kind::kImplies:
        return !formula(f.lhs()) || formula(f.rhs());
      case Formula::Kind::kForall:
        for (Element m = 0; m < s_.size(); ++m) {
          stack_.push_back(m);
          bool ok = formula(f.body());
          stack_.pop_back();
          if (!ok) return false;
        }
        return true;
    }
    return false;
  }

 private:
  const Structure& s_;
  std::vector<Element> stack_;
};

}  // namespace

Element eval_term(const Term& t, const Structure& s, std::span<const Element> env) {
  return Evaluator(s, env).term(t);
}

bool eval_formula(const Formula& f, const Structure& s, std::span<const Element> env) {
  if (env.size() < min_rank(f))
    throw EvalError("environment too short: formula has rank " + std::to_string(min_rank(f)) + ", environment " +
                    std::to_string(env.size()));
  return Evaluator(s, env).formula(f);
}

//------------------------------------------------------------------------------
// Audit

//------------------------------------------------------------------------------
// Bound formulas

BoundFormula::BoundFormula(const Formula& f, const Structure& s) : s_(s), rank_(min_rank(f)) {
  root_ = add_formula(f);
}

std::size_t BoundFormula::add_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      terms_.push_back({TermOp::Kind::kVar, t.index(), 0, nullptr});
      break;
    case Term::Kind::kParam: {
      auto m = s_.element(t.name());
      if (!m) throw EvalError("parameter $" + t.name() + " is not a domain element");
      terms_.push_back({TermOp::Kind::kElement, *m, 0, nullptr});
      break;
    }
    case Term::Kind::kApp: {
      auto it = s_.function_tables().find(t.name());
      if (it == s_.function_tables().end()) throw EvalError("unknown function symbol '" + t.name() + "'");
      std::vector<std::size_t> args;
      for (const auto& a : t.args()) args.push_back(add_term(a));
      std::size_t first = slots_.size();
      slots_.insert(slots_.end(), args.begin(), args.end());
      terms_.push_back({TermOp::Kind::kApp, first, args.size(), &it->second.values});
      break;
    }
  }
  return terms_.size() - 1;
}

std::size_t BoundFormula::add_formula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      auto it = s_.predicate_tables().find(f.predicate());
      if (it == s_.predicate_tables().end()) throw EvalError("unknown predicate symbol '" + f.predicate() + "'");
      std::vector<std::size_t> args;
      for (const auto& a : f.args()) args.push_back(add_term(a));
      std::size_t first = slots_.size();
      slots_.insert(slots_.end(), args.begin(), args.end());
      formulas_.push_back({f.kind(), first, 0, args.size(), &it->second.members});
      break;
    }
    case Formula::Kind::kImplies: {
      auto l = add_formula(f.lhs());
      auto r = add_formula(f.rhs());
      formulas_.push_back({f.kind(), l, r, 0, nullptr});
      break;
    }
    case Formula::Kind::kForall: {
      auto b = add_formula(f.body());
      formulas_.push_back({f.kind(), b, 0, 0, nullptr});
      break;
    }
  }
  return formulas_.size() - 1;
}

Element BoundFormula::term(std::size_t op) const {
  const TermOp& t = terms_[op];
  switch (t.kind) {
    case TermOp::Kind::kVar:
      return stack_[stack_.size() - t.value];
    case TermOp::Kind::kElement:
      return t.value;
    case TermOp::Kind::kApp: {
      std::size_t idx = 0;
      for (std::size_t k = 0; k < t.arity; ++k) idx = idx * s_.size() + term(slots_[t.value + k]);
      return (*t.table)[idx];
    }
  }
  return 0;
}

bool BoundFormula::formula(std::size_t op) const {
  const FormulaOp& f = formulas_[op];
  switch (f.kind) {
    case Formula::Kind::kAtom: {
      std::size_t idx = 0;
      for (std::size_t k = 0; k < f.arity; ++k) idx = idx * s_.size() + term(slots_[f.first + k]);
      return (*f.table)[idx] != 0;
    }
    case Formula::Kind::kImplies:
      return !formula(f.first) || formula(f.second);
    case Formula::Kind::kForall:
      for (Element m = 0; m < s_.size(); ++m) {
        stack_.push_back(m);
        bool ok = formula(f.first);
        stack_.pop_back();
        if (!ok) return false;
      }
      return true;
  }
  return false;
}

bool BoundFormula::operator()(std::span<const Element> env) const {
  if (env.size() < rank_)
    throw EvalError("environment too short: formula has rank " + std::to_string(rank_) + ", environment " +
                    std::to_string(env.size()));
  stack_.assign(env.rbegin(), env.rend());
  for (auto m : stack_)
    if (m >= s_.size()) throw EvalError("environment element out of range");
  return formula(root_);
}

bool AuditReport::passed() const {
  return std::ranges::all_of(conditions, [](const ConditionReport& c) { return c.passed; });
}

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

void collect_subformulas(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  if (f.is_implies()) {
    collect_subformulas(f.lhs(), out);
    collect_subformulas(f.rhs(), out);
  } else if (f.is_forall()) {
    collect_subformulas(f.body(), out);
  }
}

void record(ConditionReport& r, bool ok, const std::string& what) {
  ++r.checked;
  if (ok) return;
  r.passed = false;
  if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(what);
}

Formula eq_atom(std::size_t x, std::size_t y) {
  return Formula::atom(std::string(kEq), {Term::var(x), Term::var(y)});
}

}  // namespace

AuditReport audit_valuation(const Membership& in_u, const Signature& sig, std::span<const Formula> samples,
                            std::span<const Term> terms) {
  AuditReport report;
  for (int k = 0; k < 5; ++k) report.conditions[static_cast<std::size_t>(k)].condition = k + 1;
  auto& c1 = report.conditions[0];
  auto& c2 = report.conditions[1];
  auto& c3 = report.conditions[2];
  auto& c4 = report.conditions[3];
  auto& c5 = report.conditions[4];

  record(c1, !in_u(Formula::falsum()), "false is in U");

  std::set<Formula> subs;
  std::size_t max_rank = 0;
  for (const auto& f : samples) {
    collect_subformulas(f, subs);
    max_rank = std::max(max_rank, min_rank(f));
  }

  for (const auto& f : subs) {
    if (f.is_implies()) {
      bool lhs = in_u(f);
      bool rhs = !in_u(f.lhs()) || in_u(f.rhs());
      record(c2, lhs == rhs, print_formula(f));
    } else if (f.is_forall()) {
      bool lhs = in_u(f);
      bool all = true;
      std::string witness;
      for (const auto& t : terms) {
        if (!in_u(subst(f.body(), Substitution::instantiate_front(t)))) {
          all = false;
          witness = print_term(t);
          break;
        }
      }
      record(c3, lhs == all,
             print_formula(f) + (lhs ? " is in U but fails at t=" + witness : " is not in U though every instance is"));
    }
  }

  if (!sig.with_equality()) {
    c4.applicable = c5.applicable = false;
    return report;
  }
  std::size_t vars = max_rank + 1;
  for (std::size_t n = 0; n <= max_rank; ++n) {
    for (std::size_t x = 1; x <= vars; ++x) {
      auto f = forall_n(eq_atom(x, x), n);
      record(c4, in_u(f), print_formula(f));
    }
    for (const auto& a : samples)
      for (std::size_t x = 1; x <= vars; ++x)
        for (std::size_t y = 1; y <= vars; ++y) {
          auto f = forall_n(
              Formula::implies(eq_atom(x, y), Formula::implies(a, single_subst(a, Term::var(y), x))), n);
          record(c5, in_u(f), print_formula(f));
        }
  }
  return report;
}

AuditReport induced_valuation_check(const Structure& s, std::span<const Element> env, std::span<const Formula> samples,
                                    std::span<const Term> terms) {
  std::vector<Term> all_terms(terms.begin(), terms.end());
  for (const auto& m : s.domain()) all_terms.push_back(Term::param(m));
  Env base(env.begin(), env.end());
  Membership in_u = [&](const Formula& f) {
    std::size_t r = min_rank(f);
    if (base.size() >= r) return eval_formula(f, s, base);
    Env padded = base;
    padded.resize(r, 0);
    return eval_formula(f, s, padded);
  };
  return audit_valuation(in_u, s.signature(), samples, all_terms);
}

std::string print_report(const AuditReport& r) {
  std::ostringstream out;
  for (const auto& c : r.conditions) {
    out << "condition " << c.condition << ": ";
    if (!c.applicable) {
      out << "N/A\n";
      continue;
    }
    out << (c.passed ? "PASS" : "FAIL") << " checked=" << c.checked << '\n';
    for (const auto& ce : c.counterexamples) out << "  counterexample: " << ce << '\n';
  }
  return out.str();
}

//------------------------------------------------------------------------------
// Countermodel search

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t k = 0; k < exp && out != std::numeric_limits<std::uint64_t>::max(); ++k) out = sat_mul(out, base);
  return out;
}

bool is_fixed_predicate(std::string_view name) { return name == kFalse || name == kEq; }

// Odometer over every table entry: predicate bits first, then function
// values, the first entry most significant.
class TableOdometer {
 public:
  explicit TableOdometer(Structure& s) : s_(s) {
    for (const auto& [name, table] : s.predicate_tables()) {
      if (is_fixed_predicate(name)) continue;
      auto& t = s.predicate_table(name);
      for (auto& bit : t.members) slots_.push_back({&bit, nullptr, 2});
    }
    for (const auto& [name, table] : s.function_tables()) {
      auto& t = s.function_table(name);
      for (auto& v : t.values) slots_.push_back({nullptr, &v, s.size()});
    }
  }

  bool advance() {
    for (std::size_t k = slots_.size(); k-- > 0;) {
      auto& slot = slots_[k];
      std::size_t v = (slot.bit ? *slot.bit : *slot.value) + 1;
      bool carry = v == slot.radix;
      if (carry) v = 0;
      if (slot.bit)
        *slot.bit = static_cast<std::uint8_t>(v);
      else
        *slot.value = v;
      if (!carry) return true;
    }
    return false;
  }

 private:
  struct Slot {
    std::uint8_t* bit;
    Element* value;
    std::size_t radix;
  };
  Structure& s_;
  std::vector<Slot> slots_;
};

bool advance_env(Env& env, std::size_t n) {
  for (std::size_t k = env.size(); k-- > 0;) {
    if (++env[k] < n) return true;
    env[k] = 0;
  }
  return false;
}

}  // namespace

std::uint64_t countermodel_search_size(const Signature& sig, std::size_t rank, std::size_t max_size) {
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::uint64_t per = sat_pow(n, rank);
    for (const auto& [name, arity] : sig.predicates())
      if (!is_fixed_predicate(name)) per = sat_mul(per, sat_pow(2, sat_pow(n, static_cast<std::uint64_t>(arity))));
    for (const auto& [name, arity] : sig.functions())
      per = sat_mul(per, sat_pow(n, sat_pow(n, static_cast<std::uint64_t>(arity))));
    total = sat_add(total, per);
  }
  return total;
}

std::optional<Countermodel> find_countermodel(const Signature& sig, const Theory& t, const Formula& a,
                                              std::size_t max_size, std::uint64_t ceiling) {
  if (max_size == 0) throw std::invalid_argument("max_size must be positive");
  if (has_params(a)) throw std::invalid_argument("countermodel target must be parameter-free");
  check_formula(a, sig);
  for (const auto& [name, f] : t.sentences()) check_formula(f, sig);
  std::size_t rank = min_rank(a);
  auto bound = countermodel_search_size(sig, rank, max_size);
  if (bound > ceiling)
    throw ResourceLimitError("search over sizes 1.." + std::to_string(max_size) + " visits up to " +
                             std::to_string(bound) + " structure/environment pairs, above the ceiling of " +
                             std::to_string(ceiling));

  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back(std::to_string(k));
    Structure s(sig, names);
    TableOdometer tables(s);
    std::vector<BoundFormula> theory;
    for (const auto& entry : t.sentences()) theory.emplace_back(entry.second, s);
    BoundFormula target(a, s);
    do {
      bool model = std::ranges::all_of(theory, [](const BoundFormula& b) { return b({}); });
      if (!model) continue;
      Env env(rank, 0);
      do {
        if (!target(env)) return Countermodel{s, env};
      } while (advance_env(env, n));
    } while (tables.advance());
  }
  return std::nullopt;
}

//------------------------------------------------------------------------------
// Herbrand evaluation

AtomicValuation::AtomicValuation(std::set<Formula> atoms) : atoms_(std::move(atoms)) {
  for (const auto& a : atoms_) {
    if (!a.is_atom()) throw ModelError("atomic valuation contains a non-atomic formula: " + print_formula(a));
    if (a.is_false()) throw ModelError("atomic valuation must not contain false");
    if (min_rank(a) != 0 || has_params(a)) throw ModelError("atomic valuation atoms must be ground: " + print_formula(a));
  }
}

namespace {

bool herbrand(const AtomicValuation& e, const Formula& f, std::span<const Term> universe) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return e.contains(f);
    case Formula::Kind::kImplies:
      return !herbrand(e, f.lhs(), universe) || herbrand(e, f.rhs(), universe);
    case Formula::Kind::kForall:
      return std::ranges::all_of(universe, [&](const Term& c) {
        return herbrand(e, subst(f.body(), Substitution::instantiate_front(c)), universe);
      });
  }
  return false;
}

bool has_quantifier(const Formula& f) {
  if (f.is_forall()) return true;
  if (f.is_implies()) return has_quantifier(f.lhs()) || has_quantifier(f.rhs());
  return false;
}

}  // namespace

bool herbrand_eval(const AtomicValuation& e, const Formula& a, const Signature& sig) {
  if (sig.with_equality()) throw ModelError("Herbrand evaluation needs a signature without equality");
  std::vector<Term> universe;
  for (const auto& [name, arity] : sig.functions()) {
    if (arity != 0) throw ModelError("Herbrand universe is infinite: '" + name + "' has arity " + std::to_string(arity));
    universe.push_back(Term::app(name));
  }
  check_formula(a, sig);
  for (const auto& atom : e.atoms()) check_formula(atom, sig);
  if (min_rank(a) != 0 || has_params(a)) throw ModelError("Herbrand evaluation needs a closed, parameter-free formula");
  if (universe.empty() && has_quantifier(a)) throw ModelError("empty Herbrand universe");
  return herbrand(e, a, universe);
}

}  // namespace folclone
