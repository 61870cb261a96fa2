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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tmtk/dsl.hpp"

namespace tmtk::detail {

enum class TokKind {
  Ident,
  String,
  Number,
  LBrace,
  RBrace,
  Colon,
  Comma,
  Dot,
  Slash,
  Arrow,       // ->
  FatArrow,    // =>
  GuardOpen,   // -[
  GuardClose,  // ]->
  End,
};

struct Token {
  TokKind kind = TokKind::End;
  std::string text;  // ident text, unescaped string contents, or digits
  SourceSpan span{};
};

struct LexResult {
  std::vector<Token> tokens;  // terminated by an End token
  std::vector<ParseError> errors;
};

// Tolerant tokenizer: bad bytes produce a diagnostic and are skipped, so
// lexing always terminates on arbitrary input. `#` comments run to EOL.
// Identifiers are [A-Za-z_][A-Za-z0-9_]* where a '-' is also accepted when
// followed by an identifier character (v-match), which keeps `a->b`
// unambiguous.
LexResult lex(std::string_view text);

}  // namespace tmtk::detail
