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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmtk/dsl.hpp"
#include "tmtk/levels.hpp"
#include "tmtk/model.hpp"

namespace tmtk {

using TokenId = int;

/// A thing instance. Identity (`id`) never changes across a run; parts of
/// an object whole carry an attached_to link and share its location.
struct Token {
  TokenId id = 0;
  std::string type;      // thimac path whose create stage spawned it
  std::string location;  // thimac path
  std::optional<TokenId> attached_to;

  friend bool operator==(const Token&, const Token&) = default;
};

enum class Outcome { Executed, SkippedUnique, HaltedMaxSteps };
const char* to_string(Outcome outcome);

struct FiringRecord {
  int step = 0;  // 1-based, strictly increasing
  std::string event;
  Outcome outcome = Outcome::Executed;
  std::optional<std::string> key;
  std::optional<bool> guard_value;

  friend bool operator==(const FiringRecord&, const FiringRecord&) = default;
};

enum class HaltReason {
  Completed,            // no successor, or the key script ran out
  MaxSteps,             // budget exhausted; final record is the halt marker
  UniqueKeysExhausted,  // a unique event was reached past its key script
};
const char* to_string(HaltReason reason);

struct SimulationTrace {
  std::string scenario;
  std::vector<FiringRecord> records;
  std::vector<Token> final_tokens;
  HaltReason halt = HaltReason::Completed;

  friend bool operator==(const SimulationTrace&, const SimulationTrace&) = default;
};

/// Raised on scripting and token errors; `code()` is one of
/// guard-script-exhausted, start-missing, unresolved-reference,
/// unknown-token, unknown-destination, not-attached, token-attached,
/// attach-cycle.
class SimulationError : public std::runtime_error {
 public:
  SimulationError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Deterministic scripted execution of the behavior model from
/// scenario.start. Per fired event: a unique event consumes the next key
/// (a repeated key records skipped-unique and takes the unconditional
/// successor without effects; an exhausted key script ends the run);
/// guarded successors consume the next scripted guard value (error when
/// exhausted); region effects are creates, scenario detaches, one move per
/// cross-machine flow arc in the region, then attaches. The final budget
/// slot is reserved for the halted-max-steps marker, so records never
/// exceed max_steps. A pure function of (bundle, scenario).
SimulationTrace simulate(const ModelBundle& bundle, const Scenario& scenario);

/// Relocates a token and everything transitively attached to it. A part
/// that is itself attached moves only through its whole (token-attached).
void move_token(const StaticModel& model, std::vector<Token>& tokens,
                TokenId token, const std::string& destination);

/// Clears the part-of link; location is unchanged at detach time.
void detach_token(std::vector<Token>& tokens, TokenId token);

std::string trace_to_json(const SimulationTrace& trace);

/// Plain-text table, one row per record: instance (key), entity (event),
/// occurrence (per-event attempt), note.
std::string trace_to_table(const SimulationTrace& trace);

}  // namespace tmtk
