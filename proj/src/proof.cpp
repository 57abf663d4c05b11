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

#include "folclone/proof.hpp"

#include <stdexcept>

#include "folclone/clone.hpp"

namespace folclone {

std::string_view schema_name(Schema s) {
  switch (s) {
    case Schema::kA1: return "A1";
    case Schema::kA2: return "A2";
    case Schema::kA3: return "A3";
    case Schema::kA4: return "A4";
    case Schema::kA5: return "A5";
    case Schema::kA6: return "A6";
    case Schema::kA7: return "A7";
    case Schema::kA8: return "A8";
  }
  return "?";
}

//------------------------------------------------------------------------------
// A5 anti-substitution

namespace {

// t with every variable index lowered by `depth`; fails when t mentions a
// variable bound at that depth or a parameter.
std::optional<Term> unshift(const Term& t, std::size_t depth) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      if (t.index() <= depth) return std::nullopt;
      return Term::var(t.index() - depth);
    case Term::Kind::kParam:
      return std::nullopt;
    case Term::Kind::kApp: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) {
        auto u = unshift(a, depth);
        if (!u) return std::nullopt;
        args.push_back(std::move(*u));
      }
      return Term::app(t.name(), std::move(args));
    }
  }
  return std::nullopt;
}

// Walks A and B in lockstep. Under `depth` binders the substitution
// [t, x1, x2, ...] reads: x_j -> x_j for j <= depth, x_{depth+1} -> t shifted
// up depth times, x_j -> x_{j-1} beyond.
class A5Matcher {
 public:
  bool match(const Formula& a, const Formula& b, std::size_t depth) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Formula::Kind::kAtom:
        if (a.predicate() != b.predicate() || a.args().size() != b.args().size()) return false;
        for (std::size_t k = 0; k < a.args().size(); ++k)
          if (!match(a.args()[k], b.args()[k], depth)) return false;
        return true;
      case Formula::Kind::kImplies:
        return match(a.lhs(), b.lhs(), depth) && match(a.rhs(), b.rhs(), depth);
      case Formula::Kind::kForall:
        return match(a.body(), b.body(), depth + 1);
    }
    return false;
  }

  std::optional<Term> witness() const { return witness_; }

 private:
  bool match(const Term& a, const Term& b, std::size_t depth) {
    switch (a.kind()) {
      case Term::Kind::kVar: {
        std::size_t j = a.index();
        if (j <= depth) return b.is_var() && b.index() == j;
        if (j > depth + 1) return b.is_var() && b.index() == j - 1;
        auto t = unshift(b, depth);
        if (!t) return false;
        if (witness_) return *witness_ == *t;
        witness_ = std::move(t);
        return true;
      }
      case Term::Kind::kParam:
        return a == b;
      case Term::Kind::kApp:
        if (!b.is_app() || a.name() != b.name() || a.args().size() != b.args().size()) return false;
        for (std::size_t k = 0; k < a.args().size(); ++k)
          if (!match(a.args()[k], b.args()[k], depth)) return false;
        return true;
    }
    return false;
  }

  std::optional<Term> witness_;
};

}  // namespace

std::optional<Term> match_a5(const Formula& f) {
  if (!f.is_implies() || !f.lhs().is_forall()) return std::nullopt;
  A5Matcher m;
  if (!m.match(f.lhs().body(), f.rhs(), 0)) return std::nullopt;
  return m.witness().value_or(Term::var(1));
}

//------------------------------------------------------------------------------
// Schema recognition

namespace {

bool is_neg(const Formula& f) { return f.is_implies() && f.rhs().is_false(); }

std::optional<std::size_t> var_index(const Term& t) {
  if (!t.is_var()) return std::nullopt;
  return t.index();
}

std::optional<AxiomTag> match_schemas(const Formula& g, const Signature& sig) {
  auto tag = [](Schema s, std::vector<Formula> parts) { return AxiomTag{s, 0, std::move(parts), {}, {}}; };

  if (g.is_implies()) {
    const Formula& lhs = g.lhs();
    const Formula& rhs = g.rhs();

    // A1: A -> (B -> A)
    if (rhs.is_implies() && rhs.rhs() == lhs) return tag(Schema::kA1, {lhs, rhs.lhs()});

    // A2: (A -> (B -> C)) -> ((A -> B) -> (A -> C))
    if (lhs.is_implies() && lhs.rhs().is_implies() && rhs.is_implies() && rhs.lhs().is_implies() &&
        rhs.rhs().is_implies()) {
      const Formula& a = lhs.lhs();
      const Formula& b = lhs.rhs().lhs();
      const Formula& c = lhs.rhs().rhs();
      if (rhs.lhs().lhs() == a && rhs.lhs().rhs() == b && rhs.rhs().lhs() == a && rhs.rhs().rhs() == c)
        return tag(Schema::kA2, {a, b, c});
    }

    // A3: ~~A -> A
    if (is_neg(lhs) && is_neg(lhs.lhs()) && lhs.lhs().lhs() == rhs) return tag(Schema::kA3, {rhs});

    // A4: forall(A -> B) -> (forall A -> forall B)
    if (lhs.is_forall() && lhs.body().is_implies() && rhs.is_implies() && rhs.lhs().is_forall() &&
        rhs.rhs().is_forall() && rhs.lhs().body() == lhs.body().lhs() && rhs.rhs().body() == lhs.body().rhs())
      return tag(Schema::kA4, {lhs.body().lhs(), lhs.body().rhs()});

    // A5: forall A -> A[t, x1, x2, ...]
    if (lhs.is_forall()) {
      if (auto t = match_a5(g)) {
        auto out = tag(Schema::kA5, {lhs.body()});
        out.witness = std::move(t);
        return out;
      }
    }

    // A6: A -> forall(A+)
    if (rhs.is_forall() && rhs.body() == shift_up(lhs)) return tag(Schema::kA6, {lhs});
  }

  if (!sig.with_equality()) return std::nullopt;

  auto eq_pair = [](const Formula& f) -> std::optional<std::pair<std::size_t, std::size_t>> {
    if (!f.is_atom() || f.predicate() != kEq || f.args().size() != 2) return std::nullopt;
    auto x = var_index(f.args()[0]);
    auto y = var_index(f.args()[1]);
    if (!x || !y) return std::nullopt;
    return std::pair{*x, *y};
  };

  // A7: x = x
  if (auto xy = eq_pair(g); xy && xy->first == xy->second) {
    auto out = tag(Schema::kA7, {});
    out.eq_vars = xy;
    return out;
  }

  // A8: x = y -> (A -> A[y/x])
  if (g.is_implies() && g.rhs().is_implies()) {
    if (auto xy = eq_pair(g.lhs())) {
      const Formula& a = g.rhs().lhs();
      if (g.rhs().rhs() == single_subst(a, Term::var(xy->second), xy->first)) {
        auto out = tag(Schema::kA8, {a});
        out.eq_vars = xy;
        return out;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<AxiomTag> is_axiom(const Formula& f, const Signature& sig) {
  if (has_params(f)) return std::nullopt;
  std::size_t stripped = 0;
  const Formula* g = &f;
  while (g->is_forall()) {
    g = &g->body();
    ++stripped;
  }
  auto tag = match_schemas(*g, sig);
  if (tag) tag->stripped = stripped;
  return tag;
}

Formula instantiate(const AxiomTag& tag) {
  auto part = [&](std::size_t k) -> const Formula& {
    if (k >= tag.parts.size()) throw std::invalid_argument("axiom tag is missing metavariables");
    return tag.parts[k];
  };
  auto eq = [](std::size_t x, std::size_t y) { return Formula::atom(std::string(kEq), {Term::var(x), Term::var(y)}); };
  using F = Formula;
  F body = F::falsum();
  switch (tag.schema) {
    case Schema::kA1:
      body = F::implies(part(0), F::implies(part(1), part(0)));
      break;
    case Schema::kA2:
      body = F::implies(F::implies(part(0), F::implies(part(1), part(2))),
                        F::implies(F::implies(part(0), part(1)), F::implies(part(0), part(2))));
      break;
    case Schema::kA3:
      body = F::implies(neg(neg(part(0))), part(0));
      break;
    case Schema::kA4:
      body = F::implies(F::forall(F::implies(part(0), part(1))), F::implies(F::forall(part(0)), F::forall(part(1))));
      break;
    case Schema::kA5:
      if (!tag.witness) throw std::invalid_argument("A5 tag without witness");
      body = F::implies(F::forall(part(0)), subst(part(0), Substitution::instantiate_front(*tag.witness)));
      break;
    case Schema::kA6:
      body = F::implies(part(0), F::forall(shift_up(part(0))));
      break;
    case Schema::kA7:
      if (!tag.eq_vars) throw std::invalid_argument("A7 tag without variable");
      body = eq(tag.eq_vars->first, tag.eq_vars->first);
      break;
    case Schema::kA8:
      if (!tag.eq_vars) throw std::invalid_argument("A8 tag without variables");
      body = F::implies(eq(tag.eq_vars->first, tag.eq_vars->second),
                        F::implies(part(0), single_subst(part(0), Term::var(tag.eq_vars->second), tag.eq_vars->first)));
      break;
  }
  return forall_n(body, tag.stripped);
}

std::string describe(const AxiomTag& tag) {
  std::string out(schema_name(tag.schema));
  out += " strip=" + std::to_string(tag.stripped);
  if (tag.witness) out += " t=" + print_term(*tag.witness);
  if (tag.schema == Schema::kA7 && tag.eq_vars) out += " x=" + std::to_string(tag.eq_vars->first);
  if (tag.schema == Schema::kA8 && tag.eq_vars)
    out += " x=" + std::to_string(tag.eq_vars->first) + " y=" + std::to_string(tag.eq_vars->second);
  return out;
}

//------------------------------------------------------------------------------
// Theory

void Theory::add(std::string name, Formula sentence) {
  if (find(name)) throw TheoryError("duplicate sentence name '" + name + "'");
  if (min_rank(sentence) != 0)
    throw TheoryError("'" + name + "' is not a sentence (rank " + std::to_string(min_rank(sentence)) + ")");
  if (has_params(sentence)) throw TheoryError("'" + name + "' mentions parameters");
  sentences_.emplace_back(std::move(name), std::move(sentence));
}

const Formula* Theory::find(std::string_view name) const {
  for (const auto& [n, f] : sentences_)
    if (n == name) return &f;
  return nullptr;
}

//------------------------------------------------------------------------------
// Checking

std::string_view reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::kNone: return "none";
    case RejectReason::kEmptyProof: return "empty-proof";
    case RejectReason::kIllFormed: return "ill-formed";
    case RejectReason::kBadAxiom: return "bad-axiom";
    case RejectReason::kUnknownHypothesis: return "unknown-hypothesis";
    case RejectReason::kHypothesisMismatch: return "hypothesis-mismatch";
    case RejectReason::kBadInduction: return "bad-induction";
    case RejectReason::kForwardReference: return "forward-reference";
    case RejectReason::kMpMismatch: return "mp-mismatch";
  }
  return "?";
}

std::string print_verdict(const Verdict& v) {
  if (v.accepted) return "ACCEPT";
  return "REJECT line=" + std::to_string(v.line) + " reason=" + std::string(reason_name(v.reason));
}

namespace {

Verdict reject(std::size_t line, RejectReason reason, std::string detail) {
  return Verdict{false, line, reason, std::move(detail)};
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Verdict check_proof(const Proof& p, const Theory& t, const Signature& sig) {
  if (p.lines.empty()) return reject(0, RejectReason::kEmptyProof, "no lines");
  for (std::size_t n = 1; n <= p.lines.size(); ++n) {
    const ProofLine& line = p.lines[n - 1];
    try {
      check_formula(line.formula, sig);
    } catch (const SignatureError& e) {
      return reject(n, RejectReason::kIllFormed, e.what());
    }
    if (has_params(line.formula)) return reject(n, RejectReason::kIllFormed, "parameters are not allowed");

    auto failure = std::visit(
        Overloaded{
            [&](const ByAxiom&) -> std::optional<Verdict> {
              if (!is_axiom(line.formula, sig)) return reject(n, RejectReason::kBadAxiom, "matches no axiom schema");
              return std::nullopt;
            },
            [&](const ByHypothesis& h) -> std::optional<Verdict> {
              const Formula* s = t.find(h.name);
              if (!s) return reject(n, RejectReason::kUnknownHypothesis, "no sentence '" + h.name + "'");
              if (!(*s == line.formula))
                return reject(n, RejectReason::kHypothesisMismatch, "line differs from '" + h.name + "'");
              return std::nullopt;
            },
            [&](const ByInduction& ind) -> std::optional<Verdict> {
              if (!t.has_induction())
                return reject(n, RejectReason::kBadInduction, "theory has no induction schema");
              try {
                check_formula(ind.formula, sig);
                if (has_params(ind.formula)) return reject(n, RejectReason::kBadInduction, "parameters in schema formula");
                if (!(ta_induction(ind.formula, ind.variable) == line.formula))
                  return reject(n, RejectReason::kBadInduction, "line is not the requested induction instance");
              } catch (const std::exception& e) {
                return reject(n, RejectReason::kBadInduction, e.what());
              }
              return std::nullopt;
            },
            [&](const ByModusPonens& mp) -> std::optional<Verdict> {
              if (mp.minor == 0 || mp.major == 0 || mp.minor >= n || mp.major >= n)
                return reject(n, RejectReason::kForwardReference, "modus ponens must cite earlier lines");
              const Formula& minor = p.lines[mp.minor - 1].formula;
              const Formula& major = p.lines[mp.major - 1].formula;
              if (!major.is_implies() || !(major.lhs() == minor) || !(major.rhs() == line.formula))
                return reject(n, RejectReason::kMpMismatch,
                              "line " + std::to_string(mp.major) + " is not (line " + std::to_string(mp.minor) +
                                  " -> this line)");
              return std::nullopt;
            },
        },
        line.justification);
    if (failure) return *failure;
  }
  return Verdict{true, 0, RejectReason::kNone, {}};
}

//------------------------------------------------------------------------------
// Arithmetic

namespace {

Term zero() { return Term::app("zero"); }
Term succ(Term t) { return Term::app("succ", {std::move(t)}); }
Term plus(Term a, Term b) { return Term::app("plus", {std::move(a), std::move(b)}); }
Term times(Term a, Term b) { return Term::app("times", {std::move(a), std::move(b)}); }
Formula eq(Term a, Term b) { return Formula::atom(std::string(kEq), {std::move(a), std::move(b)}); }
Term x(std::size_t i) { return Term::var(i); }

}  // namespace

Signature arithmetic_signature() {
  Signature sig(true);
  sig.add_function("zero", 0);
  sig.add_function("succ", 1);
  sig.add_function("plus", 2);
  sig.add_function("times", 2);
  return sig;
}

Theory ta_base() {
  Theory t("Ta");
  // x = x1, y = x2; the inner quantifier binds y first.
  t.add("S1", forall_var(neg(eq(zero(), succ(x(1)))), 1));
  t.add("S2", forall_var(forall_var(Formula::implies(eq(succ(x(1)), succ(x(2))), eq(x(1), x(2))), 2), 1));
  t.add("S3", forall_var(eq(plus(x(1), zero()), x(1)), 1));
  t.add("S4", forall_var(forall_var(eq(plus(x(1), succ(x(2))), succ(plus(x(1), x(2)))), 2), 1));
  t.add("S5", forall_var(eq(times(x(1), zero()), zero()), 1));
  t.add("S6", forall_var(forall_var(eq(times(x(1), succ(x(2))), plus(times(x(1), x(2)), x(1))), 2), 1));
  return t;
}

Theory ta_theory() {
  Theory t = ta_base();
  t.enable_induction();
  return t;
}

Formula ta_induction(const Formula& a, std::size_t i) {
  std::size_t n = min_rank(a);
  if (n == 0) throw std::invalid_argument("induction formula must have rank > 0");
  if (i == 0 || i > n)
    throw std::invalid_argument("induction variable x" + std::to_string(i) + " outside x1..x" + std::to_string(n));
  Formula base = single_subst(a, zero(), i);
  Formula step = forall_var(Formula::implies(a, single_subst(a, succ(x(i)), i)), i);
  Formula out = Formula::implies(base, Formula::implies(step, forall_var(a, i)));
  for (std::size_t k = 1; k <= n; ++k) out = forall_var(out, k);
  return out;
}

}  // namespace folclone
