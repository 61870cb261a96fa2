// Copyright 2026 The tmtk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "support/dot_checker.hpp"

#include <cctype>
#include <vector>

namespace tmtk::test {

namespace {

enum class Tok { Id, LBrace, RBrace, LBracket, RBracket, Equals, Semi, Comma, Edge, End };

struct Token {
  Tok kind;
  std::string text;
};

struct LexState {
  std::string_view text;
  std::size_t pos = 0;
  std::optional<std::string> error;

  std::optional<Token> next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos >= text.size()) return Token{Tok::End, ""};
    char c = text[pos];
    switch (c) {
      case '{': ++pos; return Token{Tok::LBrace, "{"};
      case '}': ++pos; return Token{Tok::RBrace, "}"};
      case '[': ++pos; return Token{Tok::LBracket, "["};
      case ']': ++pos; return Token{Tok::RBracket, "]"};
      case '=': ++pos; return Token{Tok::Equals, "="};
      case ';': ++pos; return Token{Tok::Semi, ";"};
      case ',': ++pos; return Token{Tok::Comma, ","};
      default: break;
    }
    if (c == '-') {
      if (pos + 1 < text.size() && (text[pos + 1] == '>' || text[pos + 1] == '-')) {
        pos += 2;
        return Token{Tok::Edge, "->"};
      }
      error = "stray '-'";
      return std::nullopt;
    }
    if (c == '"') {
      ++pos;
      std::string value;
      while (pos < text.size() && text[pos] != '"') {
        if (text[pos] == '\\' && pos + 1 < text.size()) ++pos;
        value += text[pos++];
      }
      if (pos >= text.size()) {
        error = "unterminated quoted id";
        return std::nullopt;
      }
      ++pos;
      return Token{Tok::Id, value};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '#') {
      std::string value;
      while (pos < text.size()) {
        char d = text[pos];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.' ||
            d == '#') {
          value += d;
          ++pos;
        } else {
          break;
        }
      }
      return Token{Tok::Id, value};
    }
    error = std::string("unexpected character '") + c + "'";
    return std::nullopt;
  }
};

class Checker {
 public:
  explicit Checker(std::string_view text) {
    LexState lexer;
    lexer.text = text;
    while (true) {
      std::optional<Token> tok = lexer.next();
      if (!tok) {
        error_ = lexer.error;
        break;
      }
      tokens_.push_back(*tok);
      if (tok->kind == Tok::End) break;
    }
  }

  std::optional<std::string> check() {
    if (error_) return error_;
    if (!accept_keyword("digraph")) return fail("expected 'digraph'");
    if (peek().kind == Tok::Id) take();  // optional graph id
    if (std::optional<std::string> e = body()) return e;
    if (peek().kind != Tok::End) return fail("trailing tokens after graph body");
    return std::nullopt;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    take();
    return true;
  }

  bool accept_keyword(std::string_view word) {
    if (peek().kind == Tok::Id && peek().text == word) {
      take();
      return true;
    }
    return false;
  }

  std::optional<std::string> fail(const std::string& message) const { return message; }

  // '{' stmt* '}'
  std::optional<std::string> body() {
    if (!accept(Tok::LBrace)) return fail("expected '{'");
    while (!accept(Tok::RBrace)) {
      if (peek().kind == Tok::End) return fail("unterminated '{'");
      if (std::optional<std::string> e = statement()) return e;
    }
    return std::nullopt;
  }

  std::optional<std::string> statement() {
    if (accept_keyword("subgraph")) {
      if (peek().kind == Tok::Id) take();
      return body();
    }
    if (peek().kind == Tok::LBrace) return body();
    if (peek().kind != Tok::Id) return fail("expected a statement id");
    take();
    if (accept(Tok::Equals)) {  // name=value
      if (peek().kind != Tok::Id) return fail("expected a value after '='");
      take();
      accept(Tok::Semi);
      return std::nullopt;
    }
    while (accept(Tok::Edge)) {  // edge chain
      if (peek().kind != Tok::Id) return fail("expected an id after '->'");
      take();
    }
    if (peek().kind == Tok::LBracket) {
      if (std::optional<std::string> e = attr_list()) return e;
    }
    accept(Tok::Semi);
    return std::nullopt;
  }

  std::optional<std::string> attr_list() {
    if (!accept(Tok::LBracket)) return fail("expected '['");
    while (!accept(Tok::RBracket)) {
      if (peek().kind != Tok::Id) return fail("expected an attribute name");
      take();
      if (!accept(Tok::Equals)) return fail("expected '=' in attribute");
      if (peek().kind != Tok::Id) return fail("expected an attribute value");
      take();
      accept(Tok::Comma);
      accept(Tok::Semi);
      if (peek().kind == Tok::End) return fail("unterminated '['");
    }
    return std::nullopt;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::optional<std::string> error_;
};

}  // namespace

std::optional<std::string> dot_grammar_error(std::string_view text) {
  return Checker(text).check();
}

}  // namespace tmtk::test
