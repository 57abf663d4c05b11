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

#ifndef FOLCLONE_CLONE_HPP_
#define FOLCLONE_CLONE_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "folclone/syntax.hpp"

namespace folclone {

// An infinite sequence [s_1, s_2, ...] of terms, stored as a finite prefix
// s_1..s_n followed by a tail. The tail is either affine (s_i = x_{i+d}) or
// saturating (s_i = c for a fixed term c). Saturating tails exist only so
// that the collapse sequences used to define rank stay literal.
//
// The prefix is kept trimmed: its last entry never equals the tail value at
// its own position. Two substitutions are equal iff they denote the same
// sequence.
class Substitution {
 public:
  // Affine tail. Requires offset >= -prefix.size() so every tail entry is a
  // legal variable.
  explicit Substitution(std::vector<Term> prefix = {}, long offset = 0);
  static Substitution saturating(std::vector<Term> prefix, Term tail);

  static Substitution identity() { return Substitution(); }
  // [x2, x3, ...]
  static Substitution shift_up() { return Substitution({}, 1); }
  // [x1, x1, x2, ...]
  static Substitution shift_down();
  // [x1, ..., x_{i-1}, t, x_{i+1}, ...]
  static Substitution single(Term t, std::size_t i);
  // [x1, ..., x_{n-1}, x_n, x_n, ...]. collapse(0) has no literal meaning and
  // is rejected.
  static Substitution collapse(std::size_t n);
  // [x2, x3, ..., x_i, x1, x_{i+2}, ...]
  static Substitution swap_front(std::size_t i);
  // [t, x1, x2, ...]
  static Substitution instantiate_front(Term t);

  // s_i, i >= 1.
  Term at(std::size_t i) const;

  std::span<const Term> prefix() const { return prefix_; }
  bool is_affine() const { return !tail_.has_value(); }
  long offset() const { return offset_; }
  // Only for saturating substitutions.
  const Term& tail_term() const { return *tail_; }

  // [x1, s_1^+, s_2^+, ...]: the sequence seen under one binder.
  Substitution lifted() const;
  // The same sequence with s_i replaced by t.
  Substitution with(std::size_t i, Term t) const;

  friend bool operator==(const Substitution& a, const Substitution& b);

 private:
  Substitution(std::vector<Term> prefix, long offset, std::optional<Term> tail);
  void canonicalize();

  std::vector<Term> prefix_;
  long offset_ = 0;
  std::optional<Term> tail_;
};

// D[s] by the term rules: x_i -> s_i, parameters fixed, applications mapped.
Term subst(const Term& t, const Substitution& s);
// D[s] by the formula rules; quantifier bodies see s.lifted().
Formula subst(const Formula& f, const Substitution& s);

// (s o t)_i = s_i[t], so that D[s][t] = D[compose(s, t)].
Substitution compose(const Substitution& s, const Substitution& t);

// D+ and D-.
Term shift_up(const Term& t);
Formula shift_up(const Formula& f);
Term shift_down(const Term& t);
Formula shift_down(const Formula& f);

// D[t/x_i]
Term single_subst(const Term& d, const Term& t, std::size_t i);
Formula single_subst(const Formula& d, const Term& t, std::size_t i);

std::set<std::size_t> free_vars(const Term& t);
std::set<std::size_t> free_vars(const Formula& f);

// D == D[x_{i+1}/x_i], computed literally.
bool is_independent(const Term& d, std::size_t i);
bool is_independent(const Formula& d, std::size_t i);

// Largest free variable index, 0 for closed objects.
std::size_t min_rank(const Term& d);
std::size_t min_rank(const Formula& d);

// D == D[collapse(n)], computed literally. Rank 0 means closed: rank 1 and
// independent of x1.
bool has_rank(const Term& d, std::size_t n);
bool has_rank(const Formula& d, std::size_t n);
// max free index <= n.
bool has_rank_fast(const Term& d, std::size_t n);
bool has_rank_fast(const Formula& d, std::size_t n);

// (forall x_i) A := forall (A[x2, ..., x_i, x1, x_{i+2}, ...])
Formula forall_var(const Formula& a, std::size_t i);
// n-fold primitive quantifier.
Formula forall_n(const Formula& a, std::size_t n);
// (A -> false)
Formula neg(const Formula& a);

// `[t1, ..., tn; +d]`, or `[t1, ..., tn; =t]` for a saturating tail.
std::string print_substitution(const Substitution& s);
// Accepts the printed form; `; +d` may be omitted for d = 0.
Substitution parse_substitution(std::string_view text, const Signature& sig);

}  // namespace folclone

#endif  // FOLCLONE_CLONE_HPP_
