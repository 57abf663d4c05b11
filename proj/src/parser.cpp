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

// Recursive-descent reader for terms, formulas and substitutions.

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "folclone/clone.hpp"
#include "folclone/syntax.hpp"
#include "text_util.hpp"

namespace folclone {
namespace {

enum class Tok {
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kSemicolon,
  kArrow,
  kTilde,
  kEquals,
  kPlus,
  kMinus,
  kNumber,
  kVar,
  kParam,
  kName,
  kForall,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t value = 0;  // variable index or number
  std::size_t column = 0;
};

std::size_t to_index(std::string_view digits, std::size_t column) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError("number out of range at column " + std::to_string(column));
  return v;
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), 0, col});
      ++i;
    };
    switch (c) {
      case '(': single(Tok::kLParen); continue;
      case ')': single(Tok::kRParen); continue;
      case '[': single(Tok::kLBracket); continue;
      case ']': single(Tok::kRBracket); continue;
      case ',': single(Tok::kComma); continue;
      case ';': single(Tok::kSemicolon); continue;
      case '~': single(Tok::kTilde); continue;
      case '=': single(Tok::kEquals); continue;
      case '+': single(Tok::kPlus); continue;
      case '-':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          out.push_back({Tok::kArrow, "->", 0, col});
          i += 2;
        } else {
          single(Tok::kMinus);
        }
        continue;
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      auto digits = src.substr(i, j - i);
      out.push_back({Tok::kNumber, std::string(digits), to_index(digits, col), col});
      i = j;
      continue;
    }
    if (c == '$') {
      std::size_t j = i + 1;
      while (j < src.size() && detail::is_ident_char(src[j])) ++j;
      if (j == i + 1) throw ParseError("empty parameter name at column " + std::to_string(col));
      out.push_back({Tok::kParam, std::string(src.substr(i + 1, j - i - 1)), 0, col});
      i = j;
      continue;
    }
    if (detail::is_ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && detail::is_ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      i = j;
      if (word == "forall") {
        out.push_back({Tok::kForall, word, 0, col});
      } else if (word.size() >= 2 && word[0] == 'x' && std::isdigit(static_cast<unsigned char>(word[1]))) {
        if (!detail::looks_like_variable(word) || word[1] == '0')
          throw ParseError("malformed variable '" + word + "' at column " + std::to_string(col) +
                           " (expected x followed by a positive integer)");
        out.push_back({Tok::kVar, word, to_index(std::string_view(word).substr(1), col), col});
      } else {
        out.push_back({Tok::kName, word, 0, col});
      }
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "' at column " + std::to_string(col));
  }
  out.push_back({Tok::kEnd, "end of input", 0, src.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const Signature& sig) : toks_(lex(src)), sig_(sig) {}

  Term whole_term() {
    auto t = term();
    expect(Tok::kEnd, "end of input");
    return t;
  }

  Formula whole_formula() {
    auto f = implication();
    expect(Tok::kEnd, "end of input");
    return f;
  }

  std::variant<Term, Formula> whole_expression() {
    const Token& first = peek();
    bool term_start = first.kind == Tok::kVar || first.kind == Tok::kParam ||
                      (first.kind == Tok::kName && first.text != kFalse && !sig_.is_predicate(first.text));
    if (term_start) {
      auto t = term();
      if (peek().kind == Tok::kEnd) return t;
      auto lhs = equation_rest(std::move(t));
      if (peek().kind == Tok::kArrow) {
        next();
        lhs = Formula::implies(std::move(lhs), implication());
      }
      expect(Tok::kEnd, "end of input");
      return lhs;
    }
    return whole_formula();
  }

  Substitution whole_substitution() {
    expect(Tok::kLBracket, "'['");
    std::vector<Term> prefix;
    if (peek().kind != Tok::kSemicolon && peek().kind != Tok::kRBracket) {
      prefix.push_back(term());
      while (peek().kind == Tok::kComma) {
        next();
        prefix.push_back(term());
      }
    }
    std::optional<Substitution> out;
    if (peek().kind == Tok::kSemicolon) {
      next();
      if (peek().kind == Tok::kEquals) {
        next();
        out = Substitution::saturating(std::move(prefix), term());
      } else {
        long sign = 1;
        if (peek().kind == Tok::kPlus) {
          next();
        } else if (peek().kind == Tok::kMinus) {
          next();
          sign = -1;
        }
        const Token& n = expect(Tok::kNumber, "tail offset");
        long offset = sign * static_cast<long>(n.value);
        if (offset < -static_cast<long>(prefix.size()))
          throw ParseError("tail offset " + std::to_string(offset) + " leaves x" +
                           std::to_string(prefix.size() + 1) + " without a legal variable");
        out = Substitution(std::move(prefix), offset);
      }
    } else {
      out = Substitution(std::move(prefix), 0);
    }
    expect(Tok::kRBracket, "']'");
    expect(Tok::kEnd, "end of input");
    return *out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    return next();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg + " at column " + std::to_string(t.column) + ", found '" + t.text + "'");
  }

  std::vector<Term> arguments() {
    std::vector<Term> args;
    expect(Tok::kLParen, "'('");
    if (peek().kind == Tok::kRParen) {
      next();
      return args;
    }
    args.push_back(term());
    while (peek().kind == Tok::kComma) {
      next();
      args.push_back(term());
    }
    if (peek().kind != Tok::kRParen) fail("expected ',' or ')' (unbalanced parentheses?)");
    next();
    return args;
  }

  Term term() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kVar:
        next();
        return Term::var(t.value);
      case Tok::kParam:
        next();
        return Term::param(t.text);
      case Tok::kName: {
        int arity = sig_.function_arity(t.text);
        if (arity < 0) fail("unknown function symbol '" + t.text + "'");
        std::string name = next().text;
        std::vector<Term> args;
        if (peek().kind == Tok::kLParen) args = arguments();
        if (args.size() != static_cast<std::size_t>(arity))
          throw ParseError("function '" + name + "' expects " + std::to_string(arity) + " argument(s), got " +
                           std::to_string(args.size()));
        return Term::app(std::move(name), std::move(args));
      }
      default:
        fail("expected a term");
    }
  }

  Formula equation_rest(Term lhs) {
    if (peek().kind != Tok::kEquals) fail("expected '=' after term");
    if (!sig_.with_equality()) fail("'=' used without with-equality");
    next();
    auto rhs = term();
    return Formula::atom(std::string(kEq), {std::move(lhs), std::move(rhs)});
  }

  Formula implication() {
    auto lhs = unary();
    if (peek().kind != Tok::kArrow) return lhs;
    next();
    return Formula::implies(std::move(lhs), implication());
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::kTilde:
        next();
        return neg(unary());
      case Tok::kLParen: {
        next();
        Formula out = Formula::falsum();
        if (peek().kind == Tok::kForall) {
          next();
          if (peek().kind == Tok::kVar && peek(1).kind != Tok::kEquals) {
            std::size_t i = next().value;
            out = forall_var(implication(), i);
          } else {
            out = Formula::forall(implication());
          }
        } else {
          out = implication();
        }
        if (peek().kind != Tok::kRParen) fail("expected ')' (unbalanced parentheses?)");
        next();
        return out;
      }
      default:
        return atom();
    }
  }

  Formula atom() {
    const Token& t = peek();
    if (t.kind == Tok::kName) {
      if (t.text == kFalse) {
        next();
        if (peek().kind == Tok::kLParen && peek(1).kind == Tok::kRParen) {
          next();
          next();
        }
        return Formula::falsum();
      }
      int arity = sig_.predicate_arity(t.text);
      if (arity >= 0) {
        std::string name = next().text;
        std::vector<Term> args;
        if (peek().kind == Tok::kLParen) args = arguments();
        if (args.size() != static_cast<std::size_t>(arity))
          throw ParseError("predicate '" + name + "' expects " + std::to_string(arity) + " argument(s), got " +
                           std::to_string(args.size()));
        return Formula::atom(std::move(name), std::move(args));
      }
      if (!sig_.is_function(t.text)) fail("unknown predicate symbol '" + t.text + "'");
    } else if (t.kind != Tok::kVar && t.kind != Tok::kParam) {
      fail("expected a formula");
    }
    return equation_rest(term());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Signature& sig_;
};

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) { return Parser(text, sig).whole_term(); }

Formula parse_formula(std::string_view text, const Signature& sig) { return Parser(text, sig).whole_formula(); }

std::variant<Term, Formula> parse_expression(std::string_view text, const Signature& sig) {
  return Parser(text, sig).whole_expression();
}

Substitution parse_substitution(std::string_view text, const Signature& sig) {
  return Parser(text, sig).whole_substitution();
}

}  // namespace folclone
