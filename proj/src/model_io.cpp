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

#include <sstream>

#include "folclone/semantics.hpp"
#include "text_util.hpp"

namespace folclone {
namespace {

[[noreturn]] void fail_at(std::size_t lineno, const std::string& msg) {
  throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

std::vector<Element> resolve(const Structure& s, const std::vector<std::string>& names, std::size_t lineno) {
  std::vector<Element> out;
  out.reserve(names.size());
  for (const auto& n : names) {
    auto m = s.element(n);
    if (!m) fail_at(lineno, "'" + n + "' is not a domain element");
    out.push_back(*m);
  }
  return out;
}

struct Pending {
  std::size_t lineno;
  std::string keyword;
  std::string name;
  std::vector<std::string> tuple;
  std::string value;
};

}  // namespace

Model parse_model(std::string_view text, const Signature& sig) {
  std::optional<std::vector<std::string>> domain;
  std::optional<std::pair<std::size_t, std::vector<std::string>>> env_names;
  std::vector<Pending> entries;
  std::size_t lineno = 0;
  for (auto raw : detail::split_lines(text)) {
    ++lineno;
    auto line = detail::strip_comment(raw);
    if (line.empty()) continue;
    auto words = detail::split_words(line);
    if (words[0] == "domain") {
      if (domain) fail_at(lineno, "duplicate domain line");
      domain.emplace(words.begin() + 1, words.end());
      continue;
    }
    if (words[0] == "env") {
      if (env_names) fail_at(lineno, "duplicate env line");
      env_names.emplace(lineno, std::vector<std::string>(words.begin() + 1, words.end()));
      continue;
    }
    if (words[0] != "fn" && words[0] != "pred") fail_at(lineno, "expected 'domain', 'fn', 'pred' or 'env'");
    auto rest = detail::trim(line.substr(words[0].size()));
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) fail_at(lineno, "expected ':' after the symbol name");
    Pending p{lineno, words[0], std::string(detail::trim(rest.substr(0, colon))), {}, {}};
    auto body = rest.substr(colon + 1);
    if (p.keyword == "fn") {
      auto arrow = body.find("->");
      if (arrow == std::string_view::npos) fail_at(lineno, "expected '-> VALUE' in function entry");
      p.tuple = detail::split_words(body.substr(0, arrow));
      auto value = detail::split_words(body.substr(arrow + 2));
      if (value.size() != 1) fail_at(lineno, "expected exactly one value after '->'");
      p.value = value[0];
    } else {
      p.tuple = detail::split_words(body);
    }
    entries.push_back(std::move(p));
  }
  if (!domain) throw ParseError("model file has no 'domain' line");

  Structure s = [&] {
    try {
      return Structure(sig, *domain);
    } catch (const ModelError& e) {
      throw ParseError(e.what());
    }
  }();

  std::map<std::string, std::vector<std::uint8_t>, std::less<>> defined;
  for (const auto& [name, table] : s.function_tables()) defined[name].assign(table.values.size(), 0);
  for (const auto& p : entries) {
    auto args = resolve(s, p.tuple, p.lineno);
    try {
      if (p.keyword == "fn") {
        int arity = sig.function_arity(p.name);
        if (arity < 0) fail_at(p.lineno, "unknown function symbol '" + p.name + "'");
        if (static_cast<std::size_t>(arity) != args.size())
          fail_at(p.lineno, "function '" + p.name + "' expects " + std::to_string(arity) + " argument(s)");
        auto value = resolve(s, {p.value}, p.lineno)[0];
        auto& seen = defined[p.name][s.tuple_index(args)];
        if (seen && s.apply(p.name, args) != value) fail_at(p.lineno, "conflicting entry for '" + p.name + "'");
        seen = 1;
        s.set_function(p.name, args, value);
      } else {
        s.set_predicate(p.name, args, true);
      }
    } catch (const ModelError& e) {
      fail_at(p.lineno, e.what());
    }
  }
  for (const auto& [name, seen] : defined) {
    auto missing = std::find(seen.begin(), seen.end(), 0);
    if (missing != seen.end()) {
      auto tuple = s.tuple_at(static_cast<std::size_t>(missing - seen.begin()), s.function_tables().find(name)->second.arity);
      std::string where;
      for (auto m : tuple) where += " " + s.domain()[m];
      throw ParseError("function table for '" + name + "' is not total: missing" + (where.empty() ? " ()" : where));
    }
  }

  Model out{std::move(s), std::nullopt};
  if (env_names) out.env = resolve(out.structure, env_names->second, env_names->first);
  return out;
}

std::string print_model(const Structure& s, const Env* env) {
  std::ostringstream out;
  out << "domain";
  for (const auto& d : s.domain()) out << ' ' << d;
  out << '\n';
  auto tuple_text = [&](std::size_t idx, int arity) {
    std::string t;
    for (auto m : s.tuple_at(idx, arity)) t += " " + s.domain()[m];
    return t;
  };
  for (const auto& [name, table] : s.function_tables())
    for (std::size_t k = 0; k < table.values.size(); ++k)
      out << "fn " << name << ':' << tuple_text(k, table.arity) << " -> " << s.domain()[table.values[k]] << '\n';
  for (const auto& [name, table] : s.predicate_tables()) {
    if (name == kFalse || name == kEq) continue;
    for (std::size_t k = 0; k < table.members.size(); ++k)
      if (table.members[k]) out << "pred " << name << ':' << tuple_text(k, table.arity) << '\n';
  }
  if (env) {
    out << "env";
    for (auto m : *env) out << ' ' << s.domain()[m];
    out << '\n';
  }
  return out.str();
}

Env parse_env(std::string_view text, const Structure& s) {
  Env out;
  for (const auto& w : detail::split_words(text)) {
    auto m = s.element(w);
    if (!m) throw ParseError("'" + w + "' is not a domain element");
    out.push_back(*m);
  }
  return out;
}

}  // namespace folclone
