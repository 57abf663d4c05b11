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
#include "folclone/proof.hpp"
#include "support/axioms.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace folclone;

namespace {

Term x(std::size_t i) { return Term::var(i); }
Term f(Term t) { return Term::app("f", {std::move(t)}); }
Formula P(Term t) { return Formula::atom("P", {std::move(t)}); }
Formula Q(Term t) { return Formula::atom("Q", {std::move(t)}); }
Formula imp(Formula a, Formula b) { return Formula::implies(std::move(a), std::move(b)); }

Signature pq_sig(bool eq = false) {
  Signature sig(eq);
  sig.add_function("c", 0);
  sig.add_function("f", 1);
  sig.add_predicate("P", 1);
  sig.add_predicate("Q", 1);
  return sig;
}

Term zero() { return Term::app("zero"); }
Term succ(Term t) { return Term::app("succ", {std::move(t)}); }
Term plus(Term a, Term b) { return Term::app("plus", {std::move(a), std::move(b)}); }
Formula eq(Term a, Term b) { return Formula::atom("eq", {std::move(a), std::move(b)}); }

}  // namespace

TEST_CASE("is_axiom examples") {
  auto sig = pq_sig();
  auto a1 = is_axiom(imp(P(x(1)), imp(Q(x(1)), P(x(1)))), sig);
  REQUIRE(a1);
  CHECK(a1->schema == Schema::kA1);
  CHECK(a1->stripped == 0);
  CHECK(a1->parts == std::vector<Formula>{P(x(1)), Q(x(1))});

  auto closed = is_axiom(Formula::forall(imp(P(x(1)), imp(Formula::falsum(), P(x(1))))), sig);
  REQUIRE(closed);
  CHECK(closed->schema == Schema::kA1);
  CHECK(closed->stripped == 1);

  CHECK_FALSE(is_axiom(Formula::falsum(), sig));
  CHECK_FALSE(is_axiom(imp(Formula::falsum(), Formula::falsum()), sig));
  CHECK_FALSE(is_axiom(P(x(1)), sig));

  auto eq_sig = pq_sig(true);
  auto a7 = is_axiom(eq(x(1), x(1)), eq_sig);
  REQUIRE(a7);
  CHECK(a7->schema == Schema::kA7);
  CHECK(describe(*a7) == "A7 strip=0 x=1");
  // Without equality in the signature eq atoms are never axioms.
  CHECK_FALSE(is_axiom(eq(x(1), x(1)), sig));
  // A7 needs variables.
  CHECK_FALSE(is_axiom(eq(Term::app("c"), Term::app("c")), eq_sig));
  CHECK_FALSE(is_axiom(eq(x(1), x(2)), eq_sig));
}

TEST_CASE("schema recognition per shape") {
  auto sig = pq_sig(true);
  auto a = P(x(1));
  auto b = Q(x(2));
  auto c = P(f(x(3)));
  auto tag = [&](const Formula& g) {
    auto t = is_axiom(g, sig);
    REQUIRE_MESSAGE(t, print_formula(g));
    return *t;
  };
  CHECK(tag(imp(imp(a, imp(b, c)), imp(imp(a, b), imp(a, c)))).schema == Schema::kA2);
  CHECK(tag(imp(neg(neg(a)), a)).schema == Schema::kA3);
  CHECK(tag(imp(Formula::forall(imp(a, b)), imp(Formula::forall(a), Formula::forall(b)))).schema == Schema::kA4);
  auto a5 = tag(imp(Formula::forall(a), P(f(x(1)))));
  CHECK(a5.schema == Schema::kA5);
  CHECK(describe(a5) == "A5 strip=0 t=f(x1)");
  CHECK(tag(imp(b, Formula::forall(Q(x(3))))).schema == Schema::kA6);
  auto a8 = tag(imp(eq(x(1), x(2)), imp(P(x(1)), P(x(2)))));
  CHECK(a8.schema == Schema::kA8);
  CHECK(describe(a8) == "A8 strip=0 x=1 y=2");
  CHECK(tag(imp(eq(x(2), x(2)), imp(P(x(2)), P(x(2))))).schema == Schema::kA8);
  CHECK(tag(imp(eq(x(1), x(1)), imp(P(x(2)), eq(x(1), x(1))))).schema == Schema::kA1);
  CHECK_FALSE(is_axiom(imp(eq(x(1), x(2)), imp(P(x(1)), P(x(1)))), sig));
  // A6 with the wrong shift.
  CHECK_FALSE(is_axiom(imp(b, Formula::forall(Q(x(2)))), sig));
  // Parameters are never axioms.
  CHECK_FALSE(is_axiom(imp(P(Term::param("a")), imp(b, P(Term::param("a")))), sig));
}

TEST_CASE("match_a5 examples") {
  CHECK(match_a5(imp(Formula::forall(P(x(1))), P(f(x(1))))) == f(x(1)));
  CHECK(match_a5(imp(Formula::forall(P(x(2))), P(x(1)))) == x(1));
  auto E = [](Term a, Term b) { return Formula::atom("E", {std::move(a), std::move(b)}); };
  CHECK_FALSE(match_a5(imp(Formula::forall(E(x(1), x(1))), E(zero(), succ(zero())))));
  CHECK(match_a5(imp(Formula::forall(E(x(1), x(1))), E(zero(), zero()))) == zero());
  // Inside a binder slot 1 is x2 and free x3 becomes x2.
  auto body = Formula::forall(E(x(2), x(3)));
  CHECK(match_a5(imp(Formula::forall(body), Formula::forall(E(succ(x(2)), x(2))))) == succ(x(1)));
  // A witness that would be captured is not a witness.
  CHECK_FALSE(match_a5(imp(Formula::forall(body), Formula::forall(E(x(1), x(2))))));
  CHECK_FALSE(match_a5(P(x(1))));
  CHECK_FALSE(match_a5(imp(P(x(1)), P(x(1)))));
}

TEST_CASE("property: match_a5 agrees with brute force") {
  Signature sig;
  sig.add_function("c", 0);
  sig.add_function("f", 1);
  sig.add_predicate("P", 1);
  sig.add_predicate("Q", 2);
  testing::GenOptions opts;
  opts.max_var = 3;
  opts.formula_depth = 2;
  testing::Generator gen(sig, 21, opts);
  std::vector<std::pair<std::string, int>> fns{{"c", 0}, {"f", 1}};
  auto candidates = oracle::all_terms(fns, 4, 2);
  for (int n = 0; n < 300; ++n) {
    auto a = gen.formula();
    // Half real instances, half arbitrary B.
    auto b = gen.coin() ? subst(a, Substitution({gen.term()}, -1)) : gen.formula();
    auto found = match_a5(imp(Formula::forall(a), b));
    auto brute = oracle::a5_witnesses(a, b, candidates);
    if (found) {
      CHECK(subst(a, Substitution({*found}, -1)) == b);
      if (!brute.empty() && !is_independent(a, 1)) CHECK(brute.front() == *found);
    } else {
      CHECK(brute.empty());
    }
    if (!brute.empty()) CHECK(found);
  }
}

TEST_CASE("property: tags reproduce their formula") {
  auto sig = testing::clone_signature(true);
  testing::Generator gen(sig, 22);
  for (int schema = 1; schema <= 8; ++schema) {
    for (int n = 0; n < 60; ++n) {
      auto g = testing::axiom_instance(gen, schema, gen.below(3));
      auto tag = is_axiom(g, sig);
      REQUIRE_MESSAGE(tag, print_formula(g));
      CHECK(static_cast<int>(tag->schema) <= schema);
      CHECK(instantiate(*tag) == g);
    }
  }
  for (int n = 0; n < 200; ++n) {
    auto g = gen.formula();
    if (auto tag = is_axiom(g, sig)) CHECK(instantiate(*tag) == g);
  }
}

TEST_CASE("property: primed forms are axioms") {
  auto sig = testing::clone_signature();
  testing::Generator gen(sig, 23);
  for (int n = 0; n < 200; ++n) {
    auto i = 1 + gen.below(5);
    auto a4 = testing::a4_primed(gen, i);
    auto a5 = testing::a5_primed(gen, i);
    auto a6 = testing::a6_primed(gen, i);
    REQUIRE_MESSAGE(is_axiom(a4, sig), print_formula(a4));
    REQUIRE_MESSAGE(is_axiom(a5, sig), print_formula(a5));
    REQUIRE_MESSAGE(is_axiom(a6, sig), print_formula(a6));
    CHECK(is_axiom(forall_n(a5, min_rank(a5)), sig));
  }
}

TEST_CASE("check_proof") {
  auto sig = pq_sig();
  Theory t("T");
  auto a = Formula::forall(P(x(1)));
  auto b = Formula::forall(Q(x(1)));
  t.add("A", a);
  t.add("AB", imp(a, b));

  SUBCASE("one modus ponens step") {
    Proof p{{{a, ByHypothesis{"A"}}, {imp(a, b), ByHypothesis{"AB"}}, {b, ByModusPonens{1, 2}}}};
    CHECK(check_proof(p, t, sig).accepted);
  }
  SUBCASE("A5 instantiation") {
    Theory h("H");
    h.add("all", a);
    Proof p{{{a, ByHypothesis{"all"}},
             {imp(a, P(f(x(1)))), ByAxiom{}},
             {P(f(x(1))), ByModusPonens{1, 2}}}};
    CHECK(print_verdict(check_proof(p, h, sig)) == "ACCEPT");
  }
  SUBCASE("self reference") {
    Proof p{{{b, ByModusPonens{1, 1}}}};
    auto v = check_proof(p, t, sig);
    CHECK(print_verdict(v) == "REJECT line=1 reason=forward-reference");
  }
  SUBCASE("reasons") {
    auto reason = [&](Proof p) { return print_verdict(check_proof(p, t, sig)); };
    CHECK(reason(Proof{}) == "REJECT line=0 reason=empty-proof");
    CHECK(reason(Proof{{{a, ByHypothesis{"A"}}, {P(x(1)), ByAxiom{}}}}) == "REJECT line=2 reason=bad-axiom");
    CHECK(reason(Proof{{{a, ByHypothesis{"Z"}}}}) == "REJECT line=1 reason=unknown-hypothesis");
    CHECK(reason(Proof{{{b, ByHypothesis{"A"}}}}) == "REJECT line=1 reason=hypothesis-mismatch");
    CHECK(reason(Proof{{{a, ByHypothesis{"A"}}, {imp(a, b), ByHypothesis{"AB"}}, {a, ByModusPonens{1, 2}}}}) ==
          "REJECT line=3 reason=mp-mismatch");
    CHECK(reason(Proof{{{a, ByHypothesis{"A"}}, {b, ByModusPonens{0, 1}}}}) ==
          "REJECT line=2 reason=forward-reference");
    CHECK(reason(Proof{{{Formula::atom("Z", {}), ByAxiom{}}}}) == "REJECT line=1 reason=ill-formed");
    CHECK(reason(Proof{{{a, ByInduction{P(x(1)), 1}}}}) == "REJECT line=1 reason=bad-induction");
  }
  SUBCASE("adding lines never breaks an accepted proof") {
    Proof p{{{a, ByHypothesis{"A"}}, {imp(a, b), ByHypothesis{"AB"}}, {b, ByModusPonens{1, 2}}}};
    p.lines.push_back({imp(b, imp(a, b)), ByAxiom{}});
    p.lines.push_back({imp(a, b), ByModusPonens{3, 4}});
    CHECK(check_proof(p, t, sig).accepted);
  }
}

TEST_CASE("arithmetic theory") {
  auto sig = arithmetic_signature();
  auto base = ta_base();
  CHECK(base.name() == "Ta");
  CHECK(base.sentences().size() == 6);
  CHECK_FALSE(base.has_induction());
  CHECK(ta_theory().has_induction());
  for (const auto& [name, s] : base.sentences()) {
    CHECK(min_rank(s) == 0);
    CHECK_NOTHROW(check_formula(s, sig));
  }
  REQUIRE(base.find("S1"));
  CHECK(*base.find("S1") == forall_var(neg(eq(zero(), succ(x(1)))), 1));
  CHECK(*base.find("S3") == forall_var(eq(plus(x(1), zero()), x(1)), 1));
  CHECK(*base.find("S3") == parse_formula("(forall x1 plus(x1, zero) = x1)", sig));
  CHECK(*base.find("S2") == parse_formula("(forall x1 (forall x2 succ(x1) = succ(x2) -> x1 = x2))", sig));

  SUBCASE("0' + 0 = 0' from S3") {
    auto goal = eq(plus(succ(zero()), zero()), succ(zero()));
    const auto& s3 = *base.find("S3");
    Proof p{{{s3, ByHypothesis{"S3"}}, {imp(s3, goal), ByAxiom{}}, {goal, ByModusPonens{1, 2}}}};
    CHECK(check_proof(p, base, sig).accepted);
  }
}

TEST_CASE("ta_induction") {
  auto sig = arithmetic_signature();
  auto a = eq(plus(zero(), x(1)), x(1));
  auto s7 = ta_induction(a, 1);
  auto expected = forall_var(
      imp(eq(plus(zero(), zero()), zero()),
          imp(forall_var(imp(a, eq(plus(zero(), succ(x(1))), succ(x(1)))), 1), forall_var(a, 1))),
      1);
  CHECK(s7 == expected);
  CHECK(min_rank(s7) == 0);
  CHECK(s7 == parse_formula(
                  "(forall x1 (plus(zero, zero) = zero -> (forall x1 (plus(zero, x1) = x1 -> "
                  "plus(zero, succ(x1)) = succ(x1))) -> (forall x1 plus(zero, x1) = x1)))",
                  sig));

  CHECK_THROWS_AS(ta_induction(forall_var(a, 1), 1), std::invalid_argument);
  CHECK_THROWS_AS(ta_induction(a, 2), std::invalid_argument);
  CHECK_THROWS_AS(ta_induction(a, 0), std::invalid_argument);

  testing::GenOptions opts;
  opts.max_var = 3;
  testing::Generator gen(sig, 24, opts);
  for (int n = 0; n < 100; ++n) {
    auto b = gen.formula();
    if (min_rank(b) == 0) continue;
    auto i = 1 + gen.below(min_rank(b));
    CHECK(min_rank(ta_induction(b, i)) == 0);
  }

  Proof p{{{s7, ByInduction{a, 1}}}};
  CHECK(check_proof(p, ta_theory(), sig).accepted);
  CHECK(print_verdict(check_proof(p, ta_base(), sig)) == "REJECT line=1 reason=bad-induction");
}

TEST_CASE("theory and proof files") {
  auto sig = pq_sig();
  auto t = parse_theory("# sample\ntheory T\nA: (forall P(x1))\nB: (forall Q(x1))\n", sig);
  CHECK(t.name() == "T");
  CHECK(t.sentences().size() == 2);
  CHECK_FALSE(t.has_induction());
  CHECK(parse_theory("theory U\nschema induction\n", sig).has_induction());
  CHECK_THROWS_AS(parse_theory("A: (forall P(x1))", sig), ParseError);
  CHECK_THROWS_AS(parse_theory("", sig), ParseError);
  CHECK_THROWS(parse_theory("theory T\nA: P(x1)\n", sig));
  CHECK_THROWS(parse_theory("theory T\nA: (forall P(x1))\nA: (forall Q(x1))\n", sig));
  CHECK_THROWS_AS(parse_theory("theory T\nA (forall P(x1))\n", sig), ParseError);

  auto p = parse_proof(
      "1. (forall P(x1)) ; hyp A\n"
      "2. ((forall P(x1)) -> P(f(x1))) ; axiom\n"
      "3. P(f(x1)) ; mp 1 2\n",
      sig);
  REQUIRE(p.lines.size() == 3);
  CHECK(std::holds_alternative<ByHypothesis>(p.lines[0].justification));
  CHECK(std::holds_alternative<ByAxiom>(p.lines[1].justification));
  CHECK(std::get<ByModusPonens>(p.lines[2].justification).major == 2);
  CHECK(check_proof(p, t, sig).accepted);

  auto ind = parse_proof("1. P(c) ; ind(P(x1), x1)\n2. P(c) ; ind(P(x1), 1)\n", sig);
  CHECK(std::get<ByInduction>(ind.lines[0].justification).variable == 1);
  CHECK(std::get<ByInduction>(ind.lines[1].justification).variable == 1);

  CHECK_THROWS_AS(parse_proof("2. P(c) ; axiom\n", sig), ParseError);
  CHECK_THROWS_AS(parse_proof("1. P(c) axiom\n", sig), ParseError);
  CHECK_THROWS_AS(parse_proof("1. P(c) ; lemma\n", sig), ParseError);
  CHECK_THROWS_AS(parse_proof("1. P(c) ; mp 1\n", sig), ParseError);
  CHECK_THROWS_AS(parse_proof("1. R(c) ; axiom\n", sig), ParseError);
}
