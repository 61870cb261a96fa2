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
#include <vector>

#include "tmtk/diagnostics.hpp"
#include "tmtk/model.hpp"
#include "tmtk/span.hpp"

namespace tmtk {

/// A symbolic reference to a static-model element: a thimac path, a
/// `path.stage` pair, or an arc id. Stored by name so that it can dangle;
/// resolution is re-checked by the W7 rule.
struct ElementRef {
  enum class Kind { Thimac, Stage, Arc };

  Kind kind = Kind::Thimac;
  std::string path;                  // thimac path, or the arc id for Kind::Arc
  std::optional<StageKind> stage;    // set iff kind == Kind::Stage

  static ElementRef thimac(std::string path);
  static ElementRef stage_of(std::string path, StageKind stage);
  static ElementRef arc(std::string id);

  std::string to_string() const;     // "Mug/Handle", "Mug.transfer", "f1"

  friend bool operator==(const ElementRef&, const ElementRef&) = default;
  friend bool operator<(const ElementRef& a, const ElementRef& b);
};

/// True when the reference denotes an existing element of `model`.
bool resolves(const StaticModel& model, const ElementRef& ref);

/// Part-of annotation carried by an event: firing the event couples the
/// part token to the whole token.
struct AttachSpec {
  std::string part;    // thimac path of the part type
  std::string whole;   // thimac path of the whole type

  friend bool operator==(const AttachSpec&, const AttachSpec&) = default;
};

/// A region of the static model paired with (logical) time.
struct Event {
  std::string id;
  bool unique = false;
  std::vector<ElementRef> region;
  std::vector<AttachSpec> attaches;
  SourceSpan span{};

  // Span is source metadata, not structure.
  friend bool operator==(const Event& a, const Event& b) {
    return a.id == b.id && a.unique == b.unique && a.region == b.region &&
           a.attaches == b.attaches;
  }
};

struct EventsModel {
  std::vector<Event> events;

  const Event* find(std::string_view id) const;

  friend bool operator==(const EventsModel&, const EventsModel&) = default;
};

enum class EdgeGuard { Unconditional, Yes, No };

struct BehaviorEdge {
  std::string from;
  std::string to;
  EdgeGuard guard = EdgeGuard::Unconditional;

  friend bool operator==(const BehaviorEdge&, const BehaviorEdge&) = default;
};

/// Chronology graph over events; loops are allowed.
struct BehaviorModel {
  std::vector<BehaviorEdge> edges;
  std::optional<std::string> start;

  friend bool operator==(const BehaviorModel&, const BehaviorModel&) = default;
};

/// The unit of parsing, validation and simulation: a static model plus
/// optional events and behavior levels.
struct ModelBundle {
  StaticModel static_model;
  std::optional<EventsModel> events;
  std::optional<BehaviorModel> behavior;

  friend bool operator==(const ModelBundle&, const ModelBundle&) = default;
};

/// Events-level checks. W7: every region is non-empty and all of its
/// references (and attach paths) resolve. W8: every region is connected,
/// where elements relate by containment, arc incidence or stage-of-thimac
/// membership. W9 (warning): static elements covered by no region.
/// Returns [] when no events model is present.
std::vector<Diagnostic> check_events(const ModelBundle& bundle);

/// Behavior-level checks (W10): edge endpoints and start are declared
/// events; a yes-guarded edge leaves an event whose region includes a
/// process stage; with a declared start, every event is reachable.
std::vector<Diagnostic> check_behavior(const ModelBundle& bundle);

/// The union of all static elements covered by the event regions. A thimac
/// reference covers its whole subtree including stages; an arc is also
/// covered when both endpoint stages are. Sorted and deduplicated.
std::vector<ElementRef> region_union(const ModelBundle& bundle);

/// Every element of the static model, in the same normal form as
/// region_union (used by the W9 coverage rule).
std::vector<ElementRef> all_static_elements(const StaticModel& model);

}  // namespace tmtk
