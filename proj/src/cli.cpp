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

#include "folclone/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "folclone/clone.hpp"
#include "folclone/proof.hpp"
#include "folclone/semantics.hpp"
#include "folclone/syntax.hpp"

namespace folclone {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string sig_path;
  std::string theory_path;
  std::string model_path;
  std::string env_text;
  bool env_given = false;
  std::size_t max_size = 3;
  std::uint64_t ceiling = kDefaultCeiling;
  std::vector<std::string> positional;
};

class Session {
 public:
  Session(const Options& opts, std::istream& in, std::ostream& out, std::ostream& err)
      : opts_(opts), in_(in), out_(out), err_(err) {}

  int parse() {
    auto e = expression(arg(0));
    out_ << (std::holds_alternative<Term>(e) ? print_term(std::get<Term>(e)) : print_formula(std::get<Formula>(e)))
         << '\n';
    return kExitOk;
  }

  int subst_cmd() {
    auto e = expression(arg(0));
    auto s = parse_substitution(arg(1), sig());
    if (auto* t = std::get_if<Term>(&e))
      out_ << print_term(subst(*t, s)) << '\n';
    else
      out_ << print_formula(subst(std::get<Formula>(e), s)) << '\n';
    return kExitOk;
  }

  int rank() {
    auto e = expression(arg(0));
    out_ << std::visit([](const auto& d) { return min_rank(d); }, e) << '\n';
    return kExitOk;
  }

  int freevars() {
    auto e = expression(arg(0));
    auto vars = std::visit([](const auto& d) { return free_vars(d); }, e);
    out_ << '{';
    bool first = true;
    for (auto v : vars) {
      out_ << (first ? "" : ", ") << v;
      first = false;
    }
    out_ << "}\n";
    return kExitOk;
  }

  int axiom() {
    auto f = parse_formula(arg(0), sig());
    auto tag = is_axiom(f, sig());
    if (!tag) {
      out_ << "NOT-AXIOM\n";
      return kExitNegative;
    }
    out_ << describe(*tag) << '\n';
    return kExitOk;
  }

  int check() {
    auto proof = parse_proof(file_arg(0), sig());
    auto verdict = check_proof(proof, theory(), sig());
    out_ << print_verdict(verdict) << '\n';
    if (!verdict.accepted) {
      err_ << "detail: " << verdict.detail << '\n';
      return kExitNegative;
    }
    return kExitOk;
  }

  int eval() {
    auto model = load_model();
    auto f = parse_formula(arg(0), sig());
    Env env = environment(model);
    out_ << (eval_formula(f, model.structure, env) ? "TRUE" : "FALSE") << '\n';
    return kExitOk;
  }

  int countermodel() {
    auto f = parse_formula(arg(0), sig());
    auto found = find_countermodel(sig(), theory(), f, opts_.max_size, opts_.ceiling);
    if (!found) {
      out_ << "NONE size<=" << opts_.max_size << '\n';
      return kExitOk;
    }
    out_ << print_model(found->structure, &found->env);
    return kExitNegative;
  }

  int audit() {
    auto model = load_model();
    Env env = environment(model);
    std::vector<Formula> samples;
    std::set<Term> terms;
    for (std::size_t k = 0; k < opts_.positional.size(); ++k) {
      samples.push_back(parse_formula(arg(k), sig()));
      collect_terms(samples.back(), terms);
    }
    if (samples.empty()) throw UsageError("audit needs at least one sample formula");
    std::vector<Term> term_list(terms.begin(), terms.end());
    auto report = induced_valuation_check(model.structure, env, samples, term_list);
    out_ << print_report(report);
    return report.passed() ? kExitOk : kExitNegative;
  }

 private:
  // Positional argument k; `-` reads standard input.
  std::string arg(std::size_t k) {
    if (k >= opts_.positional.size()) throw UsageError("missing positional argument " + std::to_string(k + 1));
    const auto& a = opts_.positional[k];
    if (a != "-") return a;
    if (!stdin_) {
      std::ostringstream buf;
      buf << in_.rdbuf();
      stdin_ = buf.str();
    }
    return *stdin_;
  }

  // Positional argument k names a file; `-` reads standard input.
  std::string file_arg(std::size_t k) {
    auto a = arg(k);
    return opts_.positional[k] == "-" ? a : read_file(a);
  }

  static std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
  }

  const Signature& sig() {
    if (!sig_) sig_ = parse_signature(read_file(opts_.sig_path));
    return *sig_;
  }

  Theory theory() {
    if (opts_.theory_path.empty()) return Theory();
    return parse_theory(read_file(opts_.theory_path), sig());
  }

  std::variant<Term, Formula> expression(const std::string& text) { return parse_expression(text, sig()); }

  Model load_model() {
    if (opts_.model_path.empty()) throw UsageError("--model is required");
    return parse_model(read_file(opts_.model_path), sig());
  }

  Env environment(const Model& m) {
    if (opts_.env_given) return parse_env(opts_.env_text, m.structure);
    return m.env.value_or(Env{});
  }

  static void collect_terms(const Term& t, std::set<Term>& out) {
    out.insert(t);
    for (const auto& a : t.args()) collect_terms(a, out);
  }

  static void collect_terms(const Formula& f, std::set<Term>& out) {
    switch (f.kind()) {
      case Formula::Kind::kAtom:
        for (const auto& a : f.args()) collect_terms(a, out);
        return;
      case Formula::Kind::kImplies:
        collect_terms(f.lhs(), out);
        collect_terms(f.rhs(), out);
        return;
      case Formula::Kind::kForall:
        collect_terms(f.body(), out);
        return;
    }
  }

  const Options& opts_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<Signature> sig_;
  std::optional<std::string> stdin_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"First-order logic kernel: substitution calculus, proof checking, finite models", "folclone"};
  app.require_subcommand(1);
  Options opts;

  struct Command {
    const char* name;
    const char* help;
    int (Session::*run)();
  };
  const Command commands[] = {
      {"parse", "print the canonical form of a term or formula", &Session::parse},
      {"subst", "apply a substitution [t1, ..., tn; +d] to a term or formula", &Session::subst_cmd},
      {"rank", "print the minimal rank", &Session::rank},
      {"freevars", "print the free variable indices", &Session::freevars},
      {"axiom", "identify the axiom schema a formula instantiates", &Session::axiom},
      {"check", "check a proof script against a theory", &Session::check},
      {"eval", "evaluate a formula in a finite model", &Session::eval},
      {"countermodel", "search for a finite countermodel", &Session::countermodel},
      {"audit", "audit the perfect-valuation conditions of a model", &Session::audit},
  };

  std::map<CLI::App*, const Command*> dispatch;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--sig", opts.sig_path, "signature file")->required();
    std::string name = c.name;
    if (name == "check" || name == "countermodel") sub->add_option("--theory", opts.theory_path, "theory file");
    if (name == "eval" || name == "audit") {
      sub->add_option("--model", opts.model_path, "model file")->required();
      sub->add_option("--env", opts.env_text, "environment, e.g. \"e1 e2\"");
    }
    if (name == "countermodel") {
      sub->add_option("--max-size", opts.max_size, "largest domain size")->check(CLI::PositiveNumber);
      sub->add_option("--ceiling", opts.ceiling, "largest number of structure/environment pairs");
    }
    sub->allow_extras();
    sub->footer("Positional arguments: formula, term, substitution, or proof file; - reads stdin.");
    dispatch[sub] = &c;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto* sub = app.get_subcommands().front();
  opts.positional = sub->remaining();
  for (const auto& a : opts.positional) {
    if (a.size() > 1 && a[0] == '-' && a[1] == '-') {
      err << "error: unknown option '" << a << "'\n";
      return kExitUsage;
    }
  }
  if (auto* env = sub->get_option_no_throw("--env")) opts.env_given = env->count() > 0;
  Session session(opts, in, out, err);
  try {
    return (session.*(dispatch.at(sub)->run))();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace folclone
