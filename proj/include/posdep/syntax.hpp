// Copyright 2026 The posdep Authors. All Rights Reserved.
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

// Text syntax for formulas and theories.
//
//   theory  := formula ( ("." | NEWLINE) formula )*   separators may repeat
//   formula := impl ( "<->" impl )*                   left-assoc, desugared
//   impl    := disj ( "->" impl )?                    right-assoc
//   disj    := conj ( "|" conj )*
//   conj    := unary ( "&" unary )*
//   unary   := ("not" | "-" | "!") unary | "bot" | "false" | atom
//            | "(" formula ")"
//   atom    := [a-z][A-Za-z0-9_]*
//
// "%" starts a comment running to the end of the line. Newlines separate
// formulas only at the top level: inside parentheses and directly after a
// binary operator they are plain whitespace.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "posdep/errors.hpp"
#include "posdep/formula.hpp"

namespace posdep {

namespace detail {

enum class Tok { Atom, Bottom, Not, And, Or, Arrow, Iff, LParen, RParen, Dot, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Atom: return "atom '" + t.text + "'";
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(text.substr(i, len)), line, col});
    i += len;
    col += len;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      out.push_back({Tok::Newline, "\\n", line, col});
      ++i;
      ++line;
      col = 1;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
    } else if (c == '%') {
      while (i < text.size() && text[i] != '\n') {
        ++i;
        ++col;
      }
    } else if (text.substr(i, 3) == "<->") {
      push(Tok::Iff, 3);
    } else if (text.substr(i, 2) == "->") {
      push(Tok::Arrow, 2);
    } else if (c == '-' || c == '!') {
      push(Tok::Not, 1);
    } else if (c == '&') {
      push(Tok::And, 1);
    } else if (c == '|') {
      push(Tok::Or, 1);
    } else if (c == '(') {
      push(Tok::LParen, 1);
    } else if (c == ')') {
      push(Tok::RParen, 1);
    } else if (c == '.') {
      push(Tok::Dot, 1);
    } else if (c >= 'a' && c <= 'z') {
      std::size_t j = i;
      while (j < text.size() &&
             ((text[j] >= 'a' && text[j] <= 'z') || (text[j] >= 'A' && text[j] <= 'Z') ||
              (text[j] >= '0' && text[j] <= '9') || text[j] == '_'))
        ++j;
      std::string_view word = text.substr(i, j - i);
      Tok k = Tok::Atom;
      if (word == "not") k = Tok::Not;
      else if (word == "bot" || word == "false") k = Tok::Bottom;
      push(k, j - i);
    } else {
      throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Theory theory() {
    Theory t;
    skip_separators();
    while (peek().kind != Tok::End) {
      t.formulas.push_back(formula());
      const Token& next = peek();
      if (next.kind != Tok::Dot && next.kind != Tok::Newline && next.kind != Tok::End)
        fail(next, "expected '.', end of line or end of input");
      skip_separators();
    }
    return t;
  }

  Formula single() {
    skip_newlines();
    Formula f = formula();
    skip_newlines();
    if (peek().kind != Tok::End) fail(peek(), "expected end of input");
    return f;
  }

 private:
  const Token& peek() {
    if (depth_ > 0) skip_newlines();
    return tokens_[pos_];
  }
  const Token& advance() { return tokens_[pos_++]; }

  void skip_newlines() {
    while (tokens_[pos_].kind == Tok::Newline) ++pos_;
  }
  void skip_separators() {
    while (tokens_[pos_].kind == Tok::Newline || tokens_[pos_].kind == Tok::Dot) ++pos_;
  }

  [[noreturn]] void fail(const Token& at, const std::string& expected) {
    throw SyntaxError(at.line, at.column, expected + ", found " + describe(at));
  }

  Formula formula() {
    Formula acc = implication();
    while (peek().kind == Tok::Iff) {
      advance();
      skip_newlines();
      Formula rhs = implication();
      acc = Formula::iff(acc, rhs);
    }
    return acc;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind != Tok::Arrow) return lhs;
    advance();
    skip_newlines();
    return Formula::implies(lhs, implication());
  }

  Formula disjunction() {
    Formula acc = conjunction_();
    while (peek().kind == Tok::Or) {
      advance();
      skip_newlines();
      acc = Formula::disj(acc, conjunction_());
    }
    return acc;
  }

  Formula conjunction_() {
    Formula acc = unary();
    while (peek().kind == Tok::And) {
      advance();
      skip_newlines();
      acc = Formula::conj(acc, unary());
    }
    return acc;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
        advance();
        return Formula::negation(unary());
      case Tok::Bottom:
        advance();
        return Formula::bottom();
      case Tok::Atom:
        advance();
        return Formula::atom(Atom{t.text});
      case Tok::LParen: {
        advance();
        ++depth_;
        Formula f = formula();
        if (peek().kind != Tok::RParen) fail(peek(), "expected ')'");
        --depth_;
        advance();
        return f;
      }
      default:
        fail(t, "expected atom, 'bot', 'not' or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

// Binding strength used by the printer; higher binds tighter.
inline int precedence(const Formula& f) {
  if (f.is_negation()) return 4;
  switch (f.kind()) {
    case Connective::Implies: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    default: return 5;
  }
}

inline void print(const Formula& f, int min_prec, std::string& out) {
  int prec = precedence(f);
  bool wrap = prec < min_prec;
  if (wrap) out += '(';
  if (f.is_negation()) {
    out += "not ";
    print(f.lhs(), 4, out);
  } else {
    switch (f.kind()) {
      case Connective::Bottom:
        out += "bot";
        break;
      case Connective::Atom:
        out += f.atom_value().name;
        break;
      case Connective::Implies:
        print(f.lhs(), 2, out);
        out += " -> ";
        print(f.rhs(), 1, out);
        break;
      case Connective::Or:
        print(f.lhs(), 2, out);
        out += " | ";
        print(f.rhs(), 3, out);
        break;
      case Connective::And:
        print(f.lhs(), 3, out);
        out += " & ";
        print(f.rhs(), 4, out);
        break;
    }
  }
  if (wrap) out += ')';
}

}  // namespace detail

/// Parses one formula. Throws SyntaxError.
inline Formula parse_formula(std::string_view text) {
  return detail::Parser(text).single();
}

/// Parses a theory; empty or comment-only input yields the empty theory.
inline Theory parse_theory(std::string_view text) {
  return detail::Parser(text).theory();
}

/// Canonical text; reparses to an equal tree. F -> bot prints as "not F".
inline std::string print_formula(const Formula& f) {
  std::string out;
  detail::print(f, 0, out);
  return out;
}

/// One member per line, each terminated by ".".
inline std::string print_theory(const Theory& t) {
  std::string out;
  for (const Formula& f : t) {
    out += print_formula(f);
    out += ".\n";
  }
  return out;
}

inline std::string to_string(const AtomSet& atoms) {
  std::string out = "{";
  bool first = true;
  for (const Atom& a : atoms) {
    if (!first) out += ' ';
    out += a.name;
    first = false;
  }
  return out + "}";
}

}  // namespace posdep
