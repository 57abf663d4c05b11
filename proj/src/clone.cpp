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

#include "folclone/clone.hpp"

#include <algorithm>
#include <stdexcept>

namespace folclone {

//------------------------------------------------------------------------------
// Substitution

Substitution::Substitution(std::vector<Term> prefix, long offset) : Substitution(std::move(prefix), offset, {}) {}

Substitution::Substitution(std::vector<Term> prefix, long offset, std::optional<Term> tail)
    : prefix_(std::move(prefix)), offset_(tail ? 0 : offset), tail_(std::move(tail)) {
  if (!tail_ && offset_ < -static_cast<long>(prefix_.size()))
    throw std::invalid_argument("substitution tail offset " + std::to_string(offset_) + " below -" +
                                std::to_string(prefix_.size()));
  canonicalize();
}

Substitution Substitution::saturating(std::vector<Term> prefix, Term tail) {
  return Substitution(std::move(prefix), 0, std::move(tail));
}

void Substitution::canonicalize() {
  while (!prefix_.empty()) {
    const Term& last = prefix_.back();
    bool redundant = tail_ ? last == *tail_
                           : last.is_var() && static_cast<long>(last.index()) ==
                                                  static_cast<long>(prefix_.size()) + offset_;
    if (!redundant) break;
    prefix_.pop_back();
  }
}

Substitution Substitution::shift_down() { return Substitution({Term::var(1)}, -1); }

Substitution Substitution::single(Term t, std::size_t i) {
  if (i == 0) throw std::invalid_argument("variable index must be positive");
  std::vector<Term> prefix;
  prefix.reserve(i);
  for (std::size_t k = 1; k < i; ++k) prefix.push_back(Term::var(k));
  prefix.push_back(std::move(t));
  return Substitution(std::move(prefix), 0);
}

Substitution Substitution::collapse(std::size_t n) {
  if (n == 0) throw std::invalid_argument("collapse(0) is not a substitution");
  std::vector<Term> prefix;
  for (std::size_t k = 1; k < n; ++k) prefix.push_back(Term::var(k));
  return saturating(std::move(prefix), Term::var(n));
}

Substitution Substitution::swap_front(std::size_t i) {
  if (i == 0) throw std::invalid_argument("variable index must be positive");
  std::vector<Term> prefix;
  prefix.reserve(i);
  for (std::size_t k = 2; k <= i; ++k) prefix.push_back(Term::var(k));
  prefix.push_back(Term::var(1));
  return Substitution(std::move(prefix), 1);
}

Substitution Substitution::instantiate_front(Term t) { return Substitution({std::move(t)}, -1); }

Term Substitution::at(std::size_t i) const {
  if (i == 0) throw std::invalid_argument("variable index must be positive");
  if (i <= prefix_.size()) return prefix_[i - 1];
  if (tail_) return *tail_;
  return Term::var(static_cast<std::size_t>(static_cast<long>(i) + offset_));
}

Substitution Substitution::lifted() const {
  std::vector<Term> prefix;
  prefix.reserve(prefix_.size() + 1);
  prefix.push_back(Term::var(1));
  for (const auto& t : prefix_) prefix.push_back(folclone::shift_up(t));
  if (tail_) return Substitution(std::move(prefix), 0, folclone::shift_up(*tail_));
  return Substitution(std::move(prefix), offset_);
}

Substitution Substitution::with(std::size_t i, Term t) const {
  if (i == 0) throw std::invalid_argument("variable index must be positive");
  std::vector<Term> prefix = prefix_;
  for (std::size_t k = prefix.size() + 1; k <= i; ++k) prefix.push_back(at(k));
  prefix[i - 1] = std::move(t);
  return Substitution(std::move(prefix), offset_, tail_);
}

bool operator==(const Substitution& a, const Substitution& b) {
  if (a.tail_.has_value() != b.tail_.has_value()) return false;
  if (a.tail_ ? !(*a.tail_ == *b.tail_) : a.offset_ != b.offset_) return false;
  return std::ranges::equal(a.prefix_, b.prefix_);
}

//------------------------------------------------------------------------------
// Application

namespace {

bool is_identity(const Substitution& s) { return s.is_affine() && s.offset() == 0 && s.prefix().empty(); }

}  // namespace

Term subst(const Term& t, const Substitution& s) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return s.at(t.index());
    case Term::Kind::kParam:
      return t;
    case Term::Kind::kApp: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      bool changed = false;
      for (const auto& a : t.args()) {
        args.push_back(subst(a, s));
        changed = changed || !args.back().same_node(a);
      }
      return changed ? Term::app(t.name(), std::move(args)) : t;
    }
  }
  return t;
}

namespace {

Formula subst_nontrivial(const Formula& f, const Substitution& s) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      if (f.args().empty()) return f;
      std::vector<Term> args;
      args.reserve(f.args().size());
      bool changed = false;
      for (const auto& a : f.args()) {
        args.push_back(subst(a, s));
        changed = changed || !args.back().same_node(a);
      }
      return changed ? Formula::atom(f.predicate(), std::move(args)) : f;
    }
    case Formula::Kind::kImplies: {
      auto lhs = subst_nontrivial(f.lhs(), s);
      auto rhs = subst_nontrivial(f.rhs(), s);
      if (lhs.same_node(f.lhs()) && rhs.same_node(f.rhs())) return f;
      return Formula::implies(std::move(lhs), std::move(rhs));
    }
    case Formula::Kind::kForall: {
      auto lifted = s.lifted();
      auto body = is_identity(lifted) ? f.body() : subst_nontrivial(f.body(), lifted);
      return body.same_node(f.body()) ? f : Formula::forall(std::move(body));
    }
  }
  return f;
}

}  // namespace

Formula subst(const Formula& f, const Substitution& s) { return is_identity(s) ? f : subst_nontrivial(f, s); }

Substitution compose(const Substitution& s, const Substitution& t) {
  if (!s.is_affine()) {
    std::vector<Term> prefix;
    prefix.reserve(s.prefix().size());
    for (const auto& e : s.prefix()) prefix.push_back(subst(e, t));
    return Substitution::saturating(std::move(prefix), subst(s.tail_term(), t));
  }
  // Past max(|s|, |t| - d_s), s_i = x_{i+d_s} lands in t's tail.
  long n = std::max(static_cast<long>(s.prefix().size()), static_cast<long>(t.prefix().size()) - s.offset());
  std::vector<Term> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) prefix.push_back(subst(s.at(static_cast<std::size_t>(i)), t));
  if (!t.is_affine()) return Substitution::saturating(std::move(prefix), t.tail_term());
  return Substitution(std::move(prefix), s.offset() + t.offset());
}

//------------------------------------------------------------------------------
// Shifts and single substitution

Term shift_up(const Term& t) { return subst(t, Substitution::shift_up()); }
Formula shift_up(const Formula& f) { return subst(f, Substitution::shift_up()); }
Term shift_down(const Term& t) { return subst(t, Substitution::shift_down()); }
Formula shift_down(const Formula& f) { return subst(f, Substitution::shift_down()); }

Term single_subst(const Term& d, const Term& t, std::size_t i) { return subst(d, Substitution::single(t, i)); }
Formula single_subst(const Formula& d, const Term& t, std::size_t i) {
  return subst(d, Substitution::single(t, i));
}

//------------------------------------------------------------------------------
// Free variables and rank

namespace {

void collect(const Term& t, std::size_t depth, std::set<std::size_t>& out) {
  if (t.is_var()) {
    if (t.index() > depth) out.insert(t.index() - depth);
    return;
  }
  for (const auto& a : t.args()) collect(a, depth, out);
}

void collect(const Formula& f, std::size_t depth, std::set<std::size_t>& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      for (const auto& a : f.args()) collect(a, depth, out);
      return;
    case Formula::Kind::kImplies:
      collect(f.lhs(), depth, out);
      collect(f.rhs(), depth, out);
      return;
    case Formula::Kind::kForall:
      collect(f.body(), depth + 1, out);
      return;
  }
}

std::size_t max_free(const Term& t, std::size_t depth) {
  if (t.is_var()) return t.index() > depth ? t.index() - depth : 0;
  std::size_t m = 0;
  for (const auto& a : t.args()) m = std::max(m, max_free(a, depth));
  return m;
}

std::size_t max_free(const Formula& f, std::size_t depth) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      std::size_t m = 0;
      for (const auto& a : f.args()) m = std::max(m, max_free(a, depth));
      return m;
    }
    case Formula::Kind::kImplies:
      return std::max(max_free(f.lhs(), depth), max_free(f.rhs(), depth));
    case Formula::Kind::kForall:
      return max_free(f.body(), depth + 1);
  }
  return 0;
}

}  // namespace

std::set<std::size_t> free_vars(const Term& t) {
  std::set<std::size_t> out;
  collect(t, 0, out);
  return out;
}

std::set<std::size_t> free_vars(const Formula& f) {
  std::set<std::size_t> out;
  collect(f, 0, out);
  return out;
}

bool is_independent(const Term& d, std::size_t i) { return d == single_subst(d, Term::var(i + 1), i); }
bool is_independent(const Formula& d, std::size_t i) { return d == single_subst(d, Term::var(i + 1), i); }

std::size_t min_rank(const Term& d) { return max_free(d, 0); }
std::size_t min_rank(const Formula& d) { return max_free(d, 0); }

bool has_rank(const Term& d, std::size_t n) {
  if (n == 0) return has_rank(d, 1) && is_independent(d, 1);
  return d == subst(d, Substitution::collapse(n));
}

bool has_rank(const Formula& d, std::size_t n) {
  if (n == 0) return has_rank(d, 1) && is_independent(d, 1);
  return d == subst(d, Substitution::collapse(n));
}

bool has_rank_fast(const Term& d, std::size_t n) { return min_rank(d) <= n; }
bool has_rank_fast(const Formula& d, std::size_t n) { return min_rank(d) <= n; }

//------------------------------------------------------------------------------
// Derived operators

Formula forall_var(const Formula& a, std::size_t i) { return Formula::forall(subst(a, Substitution::swap_front(i))); }

Formula forall_n(const Formula& a, std::size_t n) {
  Formula out = a;
  for (std::size_t k = 0; k < n; ++k) out = Formula::forall(std::move(out));
  return out;
}

Formula neg(const Formula& a) { return Formula::implies(a, Formula::falsum()); }

std::string print_substitution(const Substitution& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.prefix().size(); ++i) {
    if (i) out += ", ";
    out += print_term(s.prefix()[i]);
  }
  out += "; ";
  if (s.is_affine()) {
    out += s.offset() < 0 ? '-' : '+';
    out += std::to_string(s.offset() < 0 ? -s.offset() : s.offset());
  } else {
    out += '=';
    out += print_term(s.tail_term());
  }
  out += ']';
  return out;
}

}  // namespace folclone
