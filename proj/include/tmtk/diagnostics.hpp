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

#include <span>
#include <string>
#include <vector>

namespace tmtk {

enum class Severity { Error, Warning };

const char* to_string(Severity severity);

/// One well-formedness finding. `rule` is from the published catalog
/// (W1..W10); `subject` is a thimac path, arc id, stage ref or event id.
struct Diagnostic {
  std::string rule;
  Severity severity = Severity::Error;
  std::string subject;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Canonical order: numeric rule id, then subject, then message.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

bool has_errors(std::span<const Diagnostic> diagnostics);

/// `RULE severity subject: message`, one per line. Optional ANSI color.
std::string diagnostics_to_text(std::span<const Diagnostic> diagnostics,
                                bool color = false);

/// JSON array, same order as the text rendering.
std::string diagnostics_to_json(std::span<const Diagnostic> diagnostics);

}  // namespace tmtk
