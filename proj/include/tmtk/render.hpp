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

#include "tmtk/levels.hpp"

namespace tmtk {

enum class RenderLevel { Static, Events, Behavior };
enum class RankDir { LR, TB };

struct RenderOptions {
  RenderLevel level = RenderLevel::Static;
  std::optional<std::string> highlight;  // event id; events level only
  RankDir rankdir = RankDir::LR;
};

class RenderError : public std::runtime_error {
 public:
  RenderError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// DOT with one cluster per thimac (nested like the containment forest,
/// doubled border for object kind), one node per declared stage, solid
/// edges for flows and dashed ones for triggers. Declaration order, so the
/// output is byte-stable.
std::string render_static(const ModelBundle& bundle, const RenderOptions& opts = {});

/// Static rendering plus region annotations (tooltips listing the events
/// covering each element). A highlighted event's members are shaded.
/// Throws RenderError highlight-unknown-event.
std::string render_events(const ModelBundle& bundle, const RenderOptions& opts = {});

/// One node per event, one edge per behavior edge, yes/no edge labels.
std::string render_behavior(const ModelBundle& bundle, const RenderOptions& opts = {});

/// Dispatch on opts.level.
std::string render(const ModelBundle& bundle, const RenderOptions& opts);

}  // namespace tmtk
