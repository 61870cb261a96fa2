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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmtk/levels.hpp"
#include "tmtk/span.hpp"

namespace tmtk {

// Concrete syntax, one construct per statement. `#` starts a comment.
//
//   model "<name>"
//   thimac <Name> [object] { stages: <kind>, ...  <nested thimac> ... }
//   flow    [<id>:] <path>.<stage> ->  <path>.<stage> [label "<text>"]
//   trigger [<id>:] <path>.<stage> =>  <path>.<stage> [label "<text>"]
//   event <id> [unique] { region: <ref>, ...  attach <path> -> <path> ... }
//   behavior { [start <id>]  <id> -> <id> | <id> -[yes]-> <id> | <id> -[no]-> <id> ... }
//
// Paths are slash-separated from a root name (Mug/Handle); `=>` mirrors the
// dashed trigger arrow. Region refs are thimac paths, <path>.<stage> pairs
// or arc ids; a bare name that matches an arc id refers to the arc.

/// One parse failure. `code` is syntax-error, unresolved-reference or
/// duplicate-declaration; `span` points inside the input.
struct ParseError {
  std::string code;
  std::string message;
  SourceSpan span{};

  friend bool operator==(const ParseError&, const ParseError&) = default;
};

struct ParseResult {
  std::optional<ModelBundle> bundle;
  std::vector<ParseError> errors;

  bool ok() const { return bundle.has_value(); }
};

/// Parses a `.tm` model text. Never throws; arbitrary input yields
/// diagnostics in bounded time.
ParseResult parse(std::string_view text);

/// Canonical text: declaration order, two-space indent, one construct per
/// line, explicit arc ids. Re-parses to an equal bundle and is idempotent.
std::string serialize(const ModelBundle& bundle);

/// A scripted run: where to start, scripted guard outcomes and uniqueness
/// keys per attempted firing, and scenario-marked detach effects.
struct Scenario {
  std::string name;
  std::string start;
  std::map<std::string, std::vector<bool>> guards;
  std::map<std::string, std::vector<std::string>> unique_keys;
  std::map<std::string, std::string> detaches;  // event id -> part type path
  int max_steps = 10000;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct ScenarioParseResult {
  std::optional<Scenario> scenario;
  std::vector<ParseError> errors;

  bool ok() const { return scenario.has_value(); }
};

// Scenario syntax (`.tms` files):
//
//   scenario "<name>"
//   start <event-id>
//   max_steps <positive-int>            (default 10000)
//   guard <event-id>: yes|no, ...
//   keys <event-id>: <key>, ...
//   detach <event-id>: <path>
//
// Event references are resolved when the scenario is bound to a bundle by
// the simulator, not at parse time.
ScenarioParseResult parse_scenario(std::string_view text);

}  // namespace tmtk
