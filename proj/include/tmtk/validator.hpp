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

#include <vector>

#include "tmtk/diagnostics.hpp"
#include "tmtk/model.hpp"

namespace tmtk {

/// Static well-formedness rules:
///   W1  intra-machine flow follows the stage adjacency table
///   W2  cross-machine flow is transfer->transfer only
///   W3  trigger is not an exact self-loop
///   W4  reserved (always passes)
///   W5  containment is a forest with unique sibling names
///   W6  no arc connects a strict descendant of an object thimac to a
///       stage outside its subtree (arcs touching the whole's own stages
///       are exempt)
/// Diagnostics are sorted by rule, then subject. Empty means valid.
std::vector<Diagnostic> validate_static(const StaticModel& model);

}  // namespace tmtk
