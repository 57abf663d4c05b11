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

// A second, deliberately naive evaluator. With `skip_last` set, quantifiers
// ignore the last domain element; that variant is the mutant the audit must
// catch.

#ifndef FOLCLONE_TESTS_SUPPORT_EVALUATOR_HPP_
#define FOLCLONE_TESTS_SUPPORT_EVALUATOR_HPP_

#include <stdexcept>
#include <vector>

#include "folclone/semantics.hpp"

namespace folclone::testing {

struct NaiveEvaluator {
  const Structure& s;
  bool skip_last = false;

  Element term(const Term& t, const std::vector<Element>& env) const {
    if (t.is_var()) {
      if (t.index() > env.size()) throw std::out_of_range("environment too short");
      return env[t.index() - 1];
    }
    if (t.is_param()) return s.element(t.name()).value();
    std::vector<Element> args;
    for (const auto& a : t.args()) args.push_back(term(a, env));
    return s.apply(t.name(), args);
  }

  bool formula(const Formula& f, const std::vector<Element>& env) const {
    switch (f.kind()) {
      case Formula::Kind::kAtom: {
        std::vector<Element> args;
        for (const auto& a : f.args()) args.push_back(term(a, env));
        return s.holds(f.predicate(), args);
      }
      case Formula::Kind::kImplies:
        return !formula(f.lhs(), env) || formula(f.rhs(), env);
      case Formula::Kind::kForall: {
        std::size_t n = skip_last && s.size() > 1 ? s.size() - 1 : s.size();
        for (Element m = 0; m < n; ++m) {
          std::vector<Element> inner{m};
          inner.insert(inner.end(), env.begin(), env.end());
          if (!formula(f.body(), inner)) return false;
        }
        return true;
      }
    }
    return false;
  }

  // Membership in the induced set, padding short environments with element 0.
  Membership membership(const Env& env) const {
    return [this, env](const Formula& f) {
      Env e = env;
      if (e.size() < max_var_index(f)) e.resize(max_var_index(f), 0);
      return formula(f, e);
    };
  }
};

}  // namespace folclone::testing

#endif  // FOLCLONE_TESTS_SUPPORT_EVALUATOR_HPP_
