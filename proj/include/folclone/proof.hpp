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

#ifndef FOLCLONE_PROOF_HPP_
#define FOLCLONE_PROOF_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "folclone/syntax.hpp"

namespace folclone {

//------------------------------------------------------------------------------
// Axiom schemas

enum class Schema { kA1 = 1, kA2, kA3, kA4, kA5, kA6, kA7, kA8 };

std::string_view schema_name(Schema s);

// Which schema a formula instantiates and with what. `parts` holds the
// formula metavariables in schema order (A, B, C); `witness` is the A5 term;
// `eq_vars` the (x, y) variable indices of A7/A8.
struct AxiomTag {
  Schema schema;
  std::size_t stripped = 0;
  std::vector<Formula> parts;
  std::optional<Term> witness;
  std::optional<std::pair<std::size_t, std::size_t>> eq_vars;
};

// Strips every outer quantifier, then tries A1..A8 in order. A7 and A8 are
// only tried when the signature has equality. Formulas with parameters are
// never axioms.
std::optional<AxiomTag> is_axiom(const Formula& f, const Signature& sig);

// Rebuilds the axiom instance a tag describes.
Formula instantiate(const AxiomTag& tag);

// For f = (forall A) -> B, a parameter-free t with A[t, x1, x2, ...] == B.
// When A does not depend on its first slot, x1 is returned. Returns nothing
// if f has another shape or no witness exists.
std::optional<Term> match_a5(const Formula& f);

// `A3 strip=0`, `A5 strip=1 t=f(x1)`, `A8 strip=0 x=1 y=2`.
std::string describe(const AxiomTag& tag);

//------------------------------------------------------------------------------
// Theories

struct TheoryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A named, finite list of parameter-free sentences, optionally extended by the
// arithmetic induction schema (checked on demand).
class Theory {
 public:
  explicit Theory(std::string name = "empty") : name_(std::move(name)) {}

  void add(std::string name, Formula sentence);
  void enable_induction() { induction_ = true; }

  const std::string& name() const { return name_; }
  bool has_induction() const { return induction_; }
  const std::vector<std::pair<std::string, Formula>>& sentences() const { return sentences_; }
  const Formula* find(std::string_view name) const;

 private:
  std::string name_;
  std::vector<std::pair<std::string, Formula>> sentences_;
  bool induction_ = false;
};

// `theory NAME` header, `NAME: FORMULA` lines, optional `schema induction`.
Theory parse_theory(std::string_view text, const Signature& sig);

//------------------------------------------------------------------------------
// Proofs

struct ByAxiom {};
struct ByHypothesis {
  std::string name;
};
struct ByInduction {
  Formula formula;
  std::size_t variable;
};
// Line `minor` is A, line `major` is (A -> this line). 1-based.
struct ByModusPonens {
  std::size_t minor;
  std::size_t major;
};

using Justification = std::variant<ByAxiom, ByHypothesis, ByInduction, ByModusPonens>;

struct ProofLine {
  Formula formula;
  Justification justification;
};

struct Proof {
  std::vector<ProofLine> lines;
};

// Lines `N. FORMULA ; axiom | hyp NAME | ind(FORMULA, i) | mp I J`, numbered
// consecutively from 1.
Proof parse_proof(std::string_view text, const Signature& sig);

enum class RejectReason {
  kNone,
  kEmptyProof,
  kIllFormed,
  kBadAxiom,
  kUnknownHypothesis,
  kHypothesisMismatch,
  kBadInduction,
  kForwardReference,
  kMpMismatch,
};

std::string_view reason_name(RejectReason r);

struct Verdict {
  bool accepted = false;
  std::size_t line = 0;  // first failing line, 1-based
  RejectReason reason = RejectReason::kNone;
  std::string detail;
};

// `ACCEPT` or `REJECT line=N reason=...`
std::string print_verdict(const Verdict& v);

// Accepts iff every line is an axiom, a theory member, an induction instance
// (when the theory carries the schema), or follows from two earlier lines by
// modus ponens. Acceptance certifies T |- last line.
Verdict check_proof(const Proof& p, const Theory& t, const Signature& sig);

//------------------------------------------------------------------------------
// Arithmetic

// with-equality; zero/0, succ/1, plus/2, times/2.
Signature arithmetic_signature();

// Sentences S1..S6.
Theory ta_base();
// ta_base() plus the induction schema.
Theory ta_theory();

// (forall x_n)...(forall x_1)(A[0/x_i] -> ((forall x_i)(A -> A[succ(x_i)/x_i]) -> (forall x_i)A))
// where n = min_rank(a) > 0 and 1 <= i <= n. Throws std::invalid_argument
// otherwise.
Formula ta_induction(const Formula& a, std::size_t i);

}  // namespace folclone

#endif  // FOLCLONE_PROOF_HPP_
