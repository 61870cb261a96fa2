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

#include "tmtk/diagnostics.hpp"

#include <algorithm>
#include <tuple>

#include <nlohmann/json.hpp>

namespace tmtk {

namespace {

// W2 sorts after W1 and before W10.
int rule_number(const std::string& rule) {
  if (rule.size() < 2 || rule[0] != 'W') return 1000;
  int value = 0;
  for (std::size_t i = 1; i < rule.size(); ++i) {
    if (rule[i] < '0' || rule[i] > '9') return 1000;
    value = value * 10 + (rule[i] - '0');
  }
  return value;
}

}  // namespace

const char* to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::make_tuple(rule_number(a.rule), std::cref(a.subject),
                                            std::cref(a.message)) <
                            std::make_tuple(rule_number(b.rule), std::cref(b.subject),
                                            std::cref(b.message));
                   });
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string diagnostics_to_text(std::span<const Diagnostic> diagnostics, bool color) {
  std::string out;
  for (const Diagnostic& d : diagnostics) {
    if (color) {
      out += d.severity == Severity::Error ? "\x1b[31m" : "\x1b[33m";
    }
    out += d.rule;
    out += ' ';
    out += to_string(d.severity);
    if (color) out += "\x1b[0m";
    out += ' ';
    out += d.subject;
    out += ": ";
    out += d.message;
    out += '\n';
  }
  return out;
}

std::string diagnostics_to_json(std::span<const Diagnostic> diagnostics) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const Diagnostic& d : diagnostics) {
    array.push_back({{"rule", d.rule},
                     {"severity", to_string(d.severity)},
                     {"subject", d.subject},
                     {"message", d.message}});
  }
  return array.dump(2) + "\n";
}

}  // namespace tmtk
