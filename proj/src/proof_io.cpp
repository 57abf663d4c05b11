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

// Readers for theory files and proof scripts.

#include <charconv>
#include <string>

#include "folclone/proof.hpp"
#include "text_util.hpp"

namespace folclone {
namespace {

[[noreturn]] void fail_at(std::size_t lineno, const std::string& msg) {
  throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

std::size_t parse_count(std::string_view s, std::size_t lineno, const char* what) {
  s = detail::trim(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    fail_at(lineno, std::string("expected ") + what + ", found '" + std::string(s) + "'");
  return v;
}

Justification parse_justification(std::string_view s, const Signature& sig, std::size_t lineno) {
  s = detail::trim(s);
  if (s == "axiom") return ByAxiom{};
  if (s.starts_with("ind(") || s.starts_with("ind (")) {
    auto open = s.find('(');
    if (s.back() != ')') fail_at(lineno, "unterminated ind(...)");
    auto inner = s.substr(open + 1, s.size() - open - 2);
    auto comma = inner.rfind(',');
    if (comma == std::string_view::npos) fail_at(lineno, "ind(FORMULA, i) needs an induction variable");
    auto var = detail::trim(inner.substr(comma + 1));
    if (var.starts_with('x')) var.remove_prefix(1);
    std::size_t i = parse_count(var, lineno, "induction variable index");
    try {
      return ByInduction{parse_formula(inner.substr(0, comma), sig), i};
    } catch (const ParseError& e) {
      fail_at(lineno, e.what());
    }
  }
  auto words = detail::split_words(s);
  if (words.size() == 2 && words[0] == "hyp") return ByHypothesis{words[1]};
  if (words.size() == 3 && words[0] == "mp")
    return ByModusPonens{parse_count(words[1], lineno, "line number"), parse_count(words[2], lineno, "line number")};
  fail_at(lineno, "unknown justification '" + std::string(s) + "'");
}

}  // namespace

Theory parse_theory(std::string_view text, const Signature& sig) {
  std::optional<Theory> theory;
  std::size_t lineno = 0;
  for (auto raw : detail::split_lines(text)) {
    ++lineno;
    auto line = detail::strip_comment(raw);
    if (line.empty()) continue;
    if (!theory) {
      auto words = detail::split_words(line);
      if (words.size() != 2 || words[0] != "theory") fail_at(lineno, "expected 'theory NAME' header");
      theory.emplace(words[1]);
      continue;
    }
    if (line == "schema induction") {
      theory->enable_induction();
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail_at(lineno, "expected 'NAME: FORMULA'");
    std::string name(detail::trim(line.substr(0, colon)));
    if (name.empty() || name.find_first_of(" \t") != std::string::npos) fail_at(lineno, "bad sentence name");
    try {
      theory->add(name, parse_formula(line.substr(colon + 1), sig));
    } catch (const ParseError& e) {
      fail_at(lineno, e.what());
    } catch (const TheoryError& e) {
      fail_at(lineno, e.what());
    }
  }
  if (!theory) throw ParseError("empty theory file (missing 'theory NAME' header)");
  return *theory;
}

Proof parse_proof(std::string_view text, const Signature& sig) {
  Proof proof;
  std::size_t lineno = 0;
  for (auto raw : detail::split_lines(text)) {
    ++lineno;
    auto line = detail::strip_comment(raw);
    if (line.empty()) continue;
    auto dot = line.find('.');
    auto semi = line.find(';');
    if (dot == std::string_view::npos || semi == std::string_view::npos || semi < dot)
      fail_at(lineno, "expected 'N. FORMULA ; JUSTIFICATION'");
    std::size_t number = parse_count(line.substr(0, dot), lineno, "line number");
    if (number != proof.lines.size() + 1)
      fail_at(lineno, "proof line numbered " + std::to_string(number) + ", expected " +
                          std::to_string(proof.lines.size() + 1));
    try {
      auto formula = parse_formula(line.substr(dot + 1, semi - dot - 1), sig);
      proof.lines.push_back({std::move(formula), parse_justification(line.substr(semi + 1), sig, lineno)});
    } catch (const ParseError& e) {
      std::string msg = e.what();
      if (msg.starts_with("line ")) throw;
      fail_at(lineno, msg);
    }
  }
  return proof;
}

}  // namespace folclone
