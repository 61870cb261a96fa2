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

#include "lexer.hpp"

namespace tmtk::detail {

namespace {

constexpr std::size_t kMaxLexErrors = 64;

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  LexResult run() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
        continue;
      }
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      SourceSpan here = span();
      switch (c) {
        case '{': push(TokKind::LBrace, "{", here); advance(); continue;
        case '}': push(TokKind::RBrace, "}", here); advance(); continue;
        case ':': push(TokKind::Colon, ":", here); advance(); continue;
        case ',': push(TokKind::Comma, ",", here); advance(); continue;
        case '.': push(TokKind::Dot, ".", here); advance(); continue;
        case '/': push(TokKind::Slash, "/", here); advance(); continue;
        case '"': lex_string(here); continue;
        case '-':
          if (peek(1) == '>') {
            push(TokKind::Arrow, "->", here);
            advance(); advance();
          } else if (peek(1) == '[') {
            push(TokKind::GuardOpen, "-[", here);
            advance(); advance();
          } else {
            error(here, "stray '-' (expected '->' or '-[')");
            advance();
          }
          continue;
        case '=':
          if (peek(1) == '>') {
            push(TokKind::FatArrow, "=>", here);
            advance(); advance();
          } else {
            error(here, "stray '=' (expected '=>')");
            advance();
          }
          continue;
        case ']':
          if (peek(1) == '-' && peek(2) == '>') {
            push(TokKind::GuardClose, "]->", here);
            advance(); advance(); advance();
          } else {
            error(here, "stray ']' (expected ']->')");
            advance();
          }
          continue;
        default:
          break;
      }
      if (is_ident_start(c)) {
        lex_ident(here);
      } else if (is_digit(c)) {
        lex_number(here);
      } else {
        error(here, "unexpected character");
        advance();
      }
    }
    result_.tokens.push_back(Token{TokKind::End, "", span()});
    return std::move(result_);
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  SourceSpan span() const { return SourceSpan{line_, column_}; }

  void advance() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void push(TokKind kind, std::string text, SourceSpan at) {
    result_.tokens.push_back(Token{kind, std::move(text), at});
  }

  void error(SourceSpan at, const std::string& message) {
    if (result_.errors.size() < kMaxLexErrors) {
      result_.errors.push_back(ParseError{"syntax-error", message, at});
    }
  }

  void lex_ident(SourceSpan at) {
    std::string word;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (is_ident_char(c)) {
        word += c;
        advance();
      } else if (c == '-' && is_ident_char(peek(1))) {
        word += c;
        advance();
      } else {
        break;
      }
    }
    push(TokKind::Ident, std::move(word), at);
  }

  void lex_number(SourceSpan at) {
    std::string digits;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      digits += text_[pos_];
      advance();
    }
    push(TokKind::Number, std::move(digits), at);
  }

  void lex_string(SourceSpan at) {
    advance();  // opening quote
    std::string contents;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '"') {
        advance();
        push(TokKind::String, std::move(contents), at);
        return;
      }
      if (c == '\n') break;
      if (c == '\\') {
        advance();
        if (pos_ >= text_.size()) break;
        contents += text_[pos_];  // \" and \\; other escapes pass through
        advance();
        continue;
      }
      contents += c;
      advance();
    }
    error(at, "unterminated string");
    push(TokKind::String, std::move(contents), at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  LexResult result_;
};

}  // namespace

LexResult lex(std::string_view text) { return Lexer(text).run(); }

}  // namespace tmtk::detail
