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
#include <string>
#include <string_view>

namespace tmtk::test {

// Checks a DOT digraph against the grammar (graph, subgraph, node, edge and
// attribute statements). Returns a description of the first problem, or
// nullopt when the text is grammatical. Test-side only; no external layout
// tool is involved.
std::optional<std::string> dot_grammar_error(std::string_view text);

}  // namespace tmtk::test
