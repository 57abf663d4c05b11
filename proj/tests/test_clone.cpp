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

#include <doctest.h>

#include "folclone/clone.hpp"
#include "support/generators.hpp"
#include "support/lemmas.hpp"
#include "support/oracle.hpp"

using namespace folclone;

namespace {

Term x(std::size_t i) { return Term::var(i); }
Term zero() { return Term::app("zero"); }
Term app(const char* f, std::vector<Term> args) { return Term::app(f, std::move(args)); }
Formula P(std::vector<Term> args) { return Formula::atom("P", std::move(args)); }

oracle::Seq seq(const Substitution& s) {
  return [s](std::size_t i) { return s.at(i); };
}

}  // namespace

TEST_CASE("named substitutions") {
  CHECK(Substitution::identity().prefix().empty());
  CHECK(Substitution::shift_up().offset() == 1);
  CHECK(Substitution::shift_down().at(1) == x(1));
  CHECK(Substitution::shift_down().at(2) == x(1));
  CHECK(Substitution::shift_down().at(5) == x(4));
  auto s = Substitution::single(zero(), 3);
  CHECK(s.at(2) == x(2));
  CHECK(s.at(3) == zero());
  CHECK(s.at(4) == x(4));
  auto w = Substitution::swap_front(3);
  CHECK(w.at(1) == x(2));
  CHECK(w.at(2) == x(3));
  CHECK(w.at(3) == x(1));
  CHECK(w.at(4) == x(5));
  CHECK(Substitution::swap_front(1).at(1) == x(1));
  CHECK(Substitution::swap_front(1).at(2) == x(3));
  auto c = Substitution::collapse(3);
  CHECK(c.at(2) == x(2));
  CHECK(c.at(3) == x(3));
  CHECK(c.at(9) == x(3));
  CHECK_THROWS_AS(Substitution::collapse(0), std::invalid_argument);
  CHECK_THROWS_AS(Substitution({x(1)}, -2), std::invalid_argument);
}

TEST_CASE("canonical trimming makes equality extensional") {
  CHECK(Substitution({x(1), x(2)}, 0) == Substitution::identity());
  CHECK(Substitution({x(2), x(3)}, 1) == Substitution::shift_up());
  CHECK(Substitution::single(x(4), 4) == Substitution::identity());
  CHECK_FALSE(Substitution({x(2)}, 0) == Substitution::identity());
  CHECK(Substitution::saturating({x(1), x(2), x(2)}, x(2)) == Substitution::collapse(2));
  CHECK_FALSE(Substitution::collapse(2) == Substitution({x(1)}, 0));
  CHECK(Substitution({x(1), x(1)}, 0).prefix().size() == 2);
}

TEST_CASE("subst_term") {
  CHECK(subst(x(1), Substitution::single(app("succ", {x(2)}), 1)) == app("succ", {x(2)}));
  CHECK(subst(Term::param("c"), Substitution({zero()}, 4)) == Term::param("c"));
  auto t = app("plus", {x(1), x(3)});
  CHECK(subst(t, Substitution::shift_up()) == app("plus", {x(2), x(4)}));
  CHECK(oracle::apply(t, seq(Substitution::shift_up())) == app("plus", {x(2), x(4)}));
}

TEST_CASE("subst_formula") {
  auto g1 = app("g", {x(1)});
  auto f = Formula::forall(P({x(1), x(2)}));
  auto expected = Formula::forall(P({x(1), app("g", {x(2)})}));
  CHECK(subst(f, Substitution::single(g1, 1)) == expected);
  CHECK(oracle::apply(f, seq(Substitution::single(g1, 1))) == expected);
  CHECK(subst(Formula::falsum(), Substitution({zero()}, 3)) == Formula::falsum());
  auto a = Formula::implies(P({x(3)}), Formula::forall(P({x(1), x(2)})));
  CHECK(subst(a, Substitution::identity()) == a);
}

TEST_CASE("compose") {
  CHECK(compose(Substitution::shift_up(), Substitution::shift_down()) == Substitution::identity());
  auto t = app("f", {x(1), x(2)});
  auto tau = Substitution({t, zero()}, -1);
  CHECK(compose(Substitution::identity(), tau) == tau);
  CHECK(compose(tau, Substitution::identity()) == tau);
  // (single(t, 1) o shift_up)_1 = t[x2, x3, ...]; every other entry x_{i+1}.
  auto composed = compose(Substitution::single(t, 1), Substitution::shift_up());
  CHECK(composed == Substitution({app("f", {x(2), x(3)})}, 1));
  // shift_down o shift_up is not the identity: x1, x2 both go to x2.
  CHECK(compose(Substitution::shift_down(), Substitution::shift_up()) == Substitution({x(2)}, 0));
  // Saturating tails compose entrywise too.
  auto c = compose(Substitution::collapse(2), Substitution::shift_up());
  CHECK(c == Substitution::saturating({x(2)}, x(3)));
}

TEST_CASE("shifts") {
  CHECK(shift_up(P({x(1)})) == P({x(2)}));
  CHECK(shift_up(Formula::forall(P({x(1)}))) == Formula::forall(P({x(1)})));
  CHECK(shift_down(P({x(3), x(1)})) == P({x(2), x(1)}));
}

TEST_CASE("single_subst") {
  CHECK(single_subst(P({x(2)}), zero(), 2) == P({zero()}));
  CHECK(single_subst(P({x(1)}), x(1), 1) == P({x(1)}));
  CHECK(single_subst(Formula::forall(P({x(2)})), zero(), 1) == Formula::forall(P({zero()})));
}

TEST_CASE("free_vars and is_independent") {
  CHECK(free_vars(app("plus", {x(1), x(3)})) == std::set<std::size_t>{1, 3});
  CHECK(free_vars(Formula::forall(P({x(1)}))).empty());
  CHECK(free_vars(Formula::forall(P({x(1), x(3)}))) == std::set<std::size_t>{2});
  CHECK(is_independent(P({x(1)}), 2));
  CHECK_FALSE(is_independent(P({x(1)}), 1));
  CHECK_FALSE(is_independent(Formula::forall(P({x(2)})), 1));
  CHECK(is_independent(Formula::forall(P({x(1)})), 1));
}

TEST_CASE("rank") {
  auto a = P({x(1), x(3)});
  CHECK(min_rank(a) == 3);
  // Oracle: the least n passing the literal collapse test.
  std::size_t least = 0;
  while (!has_rank(a, least)) ++least;
  CHECK(least == 3);
  CHECK(min_rank(Formula::forall(P({x(1)}))) == 0);
  CHECK(has_rank(Formula::forall(P({x(1)})), 0));
  CHECK_FALSE(has_rank(P({x(2)}), 1));
  CHECK(has_rank(P({x(2)}), 2));
  CHECK_FALSE(has_rank(P({x(1)}), 0));
  CHECK(has_rank(P({zero()}), 0));
  CHECK(has_rank(x(4), 4));
  CHECK_FALSE(has_rank(x(4), 3));
}

TEST_CASE("forall_var, forall_n, neg") {
  CHECK(forall_var(P({x(1)}), 1) == Formula::forall(P({x(1)})));
  CHECK(forall_var(P({x(1), x(2)}), 2) == Formula::forall(P({x(2), x(1)})));
  for (std::size_t i = 1; i <= 5; ++i) CHECK(forall_var(Formula::falsum(), i) == Formula::forall(Formula::falsum()));
  auto a = P({x(1), x(2)});
  CHECK(forall_n(a, 0) == a);
  CHECK(forall_n(P({x(1)}), 1) == Formula::forall(P({x(1)})));
  CHECK(min_rank(forall_n(a, min_rank(a))) == 0);
  CHECK(neg(Formula::falsum()) == Formula::implies(Formula::falsum(), Formula::falsum()));
  CHECK(neg(neg(a)) == Formula::implies(Formula::implies(a, Formula::falsum()), Formula::falsum()));
  // (forall x_n)...(forall x_1)A is a sentence too.
  Formula b = a;
  for (std::size_t k = 1; k <= min_rank(a); ++k) b = forall_var(b, k);
  CHECK(min_rank(b) == 0);
}

TEST_CASE("substitution text form") {
  auto sig = testing::clone_signature();
  CHECK(print_substitution(Substitution({Term::app("f", {x(1)}), Term::app("c")}, -1)) == "[f(x1), c(); -1]");
  CHECK(print_substitution(Substitution::shift_up()) == "[; +1]");
  CHECK(print_substitution(Substitution::collapse(2)) == "[x1; =x2]");
  CHECK(parse_substitution("[f(x1), c(); -1]", sig) == Substitution({Term::app("f", {x(1)}), Term::app("c")}, -1));
  CHECK(parse_substitution("[]", sig) == Substitution::identity());
  CHECK(parse_substitution("[x2]", sig) == Substitution({x(2)}, 0));
  CHECK(parse_substitution("[; 2]", sig) == Substitution({}, 2));
  CHECK(parse_substitution("[x1; =x2]", sig) == Substitution::collapse(2));
  CHECK_THROWS_AS(parse_substitution("[x1; -2]", sig), ParseError);
  CHECK_THROWS_AS(parse_substitution("[x1", sig), ParseError);
  testing::Generator gen(sig, 17);
  for (int n = 0; n < 200; ++n) {
    auto s = gen.substitution(0.2);
    CHECK(parse_substitution(print_substitution(s), sig) == s);
  }
}

TEST_CASE("property: substitution agrees with the sequence oracle") {
  auto sig = testing::clone_signature();
  testing::GenOptions opts;
  opts.params = true;
  testing::Generator gen(sig, 101, opts);
  for (int n = 0; n < 300; ++n) {
    auto f = gen.formula();
    auto s = gen.substitution(0.2);
    REQUIRE(subst(f, s) == oracle::apply(f, seq(s)));
  }
}

TEST_CASE("property: clone laws") {
  auto sig = testing::clone_signature();
  testing::GenOptions opts;
  opts.params = true;
  testing::Generator gen(sig, 7, opts);
  for (int n = 0; n < 300; ++n) {
    auto f = gen.formula();
    auto t = gen.term();
    auto s = gen.substitution(0.15);
    auto u = gen.substitution(0.15);
    CHECK(subst(f, Substitution::identity()) == f);
    auto i = 1 + gen.below(8);
    CHECK(subst(Term::var(i), s) == s.at(i));
    auto st = compose(s, u);
    REQUIRE(subst(subst(f, s), u) == subst(f, st));
    REQUIRE(subst(subst(t, s), u) == subst(t, st));
    for (std::size_t k = 1; k <= 10; ++k) REQUIRE(st.at(k) == subst(s.at(k), u));
  }
}

TEST_CASE("property: local finiteness") {
  auto sig = testing::clone_signature();
  testing::Generator gen(sig, 8);
  for (int n = 0; n < 300; ++n) {
    auto f = gen.formula();
    auto s = gen.substitution();
    auto fv = free_vars(f);
    // Rewrite every entry outside free_vars(f) up to a bound past them all.
    auto changed = s;
    for (std::size_t k = 1; k <= max_var_index(f) + 2; ++k)
      if (!fv.contains(k)) changed = changed.with(k, Term::app("c"));
    CHECK(subst(f, s) == subst(f, changed));
  }
}

TEST_CASE("property: shifts, independence and rank") {
  auto sig = testing::clone_signature();
  testing::GenOptions opts;
  opts.max_var = 6;
  testing::Generator gen(sig, 9, opts);
  for (int n = 0; n < 300; ++n) {
    auto f = gen.formula();
    CHECK(shift_down(shift_up(f)) == f);
    auto fv = free_vars(f);
    for (std::size_t i = 1; i <= 8; ++i) {
      CHECK(is_independent(f, i) == !fv.contains(i));
      CHECK(oracle::free_by_definition(f, i) == fv.contains(i));
    }
    for (std::size_t r = 0; r <= 8; ++r) {
      CHECK(has_rank(f, r) == has_rank_fast(f, r));
      if (has_rank(f, r)) CHECK(has_rank(f, r + 1));
    }
    CHECK(min_rank(f) == (fv.empty() ? 0 : *fv.rbegin()));
  }
}

TEST_CASE("property: rank closure") {
  auto sig = testing::clone_signature();
  testing::Generator gen(sig, 10);
  for (int k = 0; k < 300; ++k) {
    auto a = gen.formula();
    auto b = gen.formula();
    std::size_t n = std::max(min_rank(a), min_rank(b)) + gen.below(2);
    REQUIRE(has_rank(a, n));
    REQUIRE(has_rank(b, n));
    CHECK(has_rank(Formula::implies(a, b), n));
    CHECK(has_rank(Formula::forall(a), n));
    for (std::size_t i = 1; i <= n + 1; ++i) CHECK(has_rank(forall_var(a, i), n));
    if (n > 0) {
      CHECK(has_rank(Formula::forall(a), n - 1));
      CHECK(has_rank(forall_var(a, n), n - 1));
    }
  }
}

TEST_CASE("property: quantifier identities") {
  auto sig = testing::clone_signature();
  testing::Generator gen(sig, 11);
  using Builder = testing::Identity (*)(testing::Generator&);
  const std::pair<const char*, Builder> lemmas[] = {
      {"binds", testing::forall_binds_its_variable},  {"rename", testing::rename_bound_variable},  {"substitute", testing::substitute_under_forall},
      {"primitive", testing::primitive_via_derived},  {"vacuous", testing::vacuous_forall_is_shift},  {"x1-shift", testing::forall_x1_is_shifted_forall},
      {"x1-unshift", testing::forall_is_unshifted_forall_x1}, {"swap", testing::forall_xi_via_swap},
  };
  for (const auto& [name, build] : lemmas) {
    CAPTURE(name);
    for (int n = 0; n < 200; ++n) {
      auto id = build(gen);
      REQUIRE(id.side);
      REQUIRE_MESSAGE(id.lhs == id.rhs, print_formula(id.lhs), " vs ", print_formula(id.rhs));
    }
  }
}

TEST_CASE("bound renaming with any independent y, not only a fresh one") {
  auto sig = testing::clone_signature();
  testing::Generator gen(sig, 12);
  for (int n = 0; n < 200; ++n) {
    auto a = gen.formula();
    auto i = 1 + gen.below(5);
    for (std::size_t y = 1; y <= max_var_index(a) + 1; ++y) {
      if (!is_independent(a, y)) continue;
      CHECK(forall_var(a, i) == forall_var(single_subst(a, Term::var(y), i), y));
    }
  }
}
