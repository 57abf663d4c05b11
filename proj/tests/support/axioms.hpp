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

// Axiom instances built straight from the schema shapes.

#ifndef FOLCLONE_TESTS_SUPPORT_AXIOMS_HPP_
#define FOLCLONE_TESTS_SUPPORT_AXIOMS_HPP_

#include "folclone/clone.hpp"
#include "support/generators.hpp"

namespace folclone::testing {

inline Formula eq_atom(std::size_t x, std::size_t y) {
  return Formula::atom(std::string(kEq), {Term::var(x), Term::var(y)});
}

inline Formula a5_instance(const Formula& a, const Term& t) {
  return Formula::implies(Formula::forall(a), subst(a, Substitution({t}, -1)));
}

// schema 1..8; 7 and 8 need a signature with equality. `closure` outer
// quantifiers are added on top.
inline Formula axiom_instance(Generator& gen, int schema, std::size_t closure = 0) {
  using F = Formula;
  auto a = gen.formula();
  auto b = gen.formula();
  auto c = gen.formula();
  F out = F::falsum();
  switch (schema) {
    case 1: out = F::implies(a, F::implies(b, a)); break;
    case 2: out = F::implies(F::implies(a, F::implies(b, c)), F::implies(F::implies(a, b), F::implies(a, c))); break;
    case 3: out = F::implies(neg(neg(a)), a); break;
    case 4: out = F::implies(F::forall(F::implies(a, b)), F::implies(F::forall(a), F::forall(b))); break;
    case 5: out = a5_instance(a, gen.term()); break;
    case 6: out = F::implies(a, F::forall(shift_up(a))); break;
    case 7: {
      auto i = 1 + gen.below(gen.options().max_var);
      out = eq_atom(i, i);
      break;
    }
    case 8: {
      auto x = 1 + gen.below(gen.options().max_var);
      auto y = 1 + gen.below(gen.options().max_var);
      out = F::implies(eq_atom(x, y), F::implies(a, single_subst(a, Term::var(y), x)));
      break;
    }
  }
  for (std::size_t k = 0; k < closure; ++k) out = F::forall(out);
  return out;
}

// A4', A5', A6' through the derived quantifier.
inline Formula a4_primed(Generator& gen, std::size_t i) {
  auto a = gen.formula();
  auto b = gen.formula();
  return Formula::implies(forall_var(Formula::implies(a, b), i), Formula::implies(forall_var(a, i), forall_var(b, i)));
}

inline Formula a5_primed(Generator& gen, std::size_t i) {
  auto a = gen.formula();
  return Formula::implies(forall_var(a, i), single_subst(a, gen.term(), i));
}

inline Formula a6_primed(Generator& gen, std::size_t i) {
  auto a = gen.formula();
  a = single_subst(a, Term::var(1 + std::max(max_var_index(a), i)), i);
  return Formula::implies(a, forall_var(a, i));
}

}  // namespace folclone::testing

#endif  // FOLCLONE_TESTS_SUPPORT_AXIOMS_HPP_
