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

#include <bitset>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tmtk {

/// The five machine actions. Arrive and accept are merged into receive.
enum class StageKind { Create, Process, Release, Transfer, Receive };

inline constexpr int kStageKindCount = 5;

/// Lower-case keyword used by the DSL and diagnostics ("create", ...).
const char* to_keyword(StageKind kind);
std::optional<StageKind> stage_from_keyword(std::string_view word);

/// Object thimacs control how their parts interact with the outside;
/// generic thimacs leave their parts free.
enum class ThimacKind { Generic, Object };

/// A set of stages, at most one per kind.
class StageSet {
 public:
  bool contains(StageKind kind) const { return bits_.test(index(kind)); }

  /// Returns false if the kind was already present.
  bool insert(StageKind kind) {
    if (contains(kind)) return false;
    bits_.set(index(kind));
    return true;
  }

  void erase(StageKind kind) { bits_.reset(index(kind)); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  /// Kinds in enum order (create, process, release, transfer, receive).
  std::vector<StageKind> kinds() const;

  friend bool operator==(const StageSet&, const StageSet&) = default;

 private:
  static std::size_t index(StageKind kind) { return static_cast<std::size_t>(kind); }
  std::bitset<kStageKindCount> bits_;
};

using ThimacId = int;

/// A named node of the containment forest together with its machine side
/// (the stage set). The thing side is realized at run time as tokens.
struct Thimac {
  ThimacId id = 0;
  std::string name;
  ThimacKind kind = ThimacKind::Generic;
  std::optional<ThimacId> parent;
  StageSet stages;

  friend bool operator==(const Thimac&, const Thimac&) = default;
};

/// A (thimac, stage) endpoint of an arc. Valid only while the referenced
/// thimac exists and declares the stage.
struct StageRef {
  ThimacId thimac = 0;
  StageKind stage = StageKind::Create;

  friend bool operator==(const StageRef&, const StageRef&) = default;
};

/// Solid arrow: a thing moving between stages.
struct FlowArc {
  std::string id;
  StageRef from;
  StageRef to;
  std::optional<std::string> label;

  friend bool operator==(const FlowArc&, const FlowArc&) = default;
};

/// Dashed arrow: non-sequential causation starting a new flow.
struct TriggerArc {
  std::string id;
  StageRef from;
  StageRef to;
  std::optional<std::string> label;

  friend bool operator==(const TriggerArc&, const TriggerArc&) = default;
};

/// Raised by construction operations; `code()` is a stable machine-readable
/// identifier such as "unknown-parent" or "duplicate-sibling-name".
class ModelError : public std::runtime_error {
 public:
  ModelError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// The complete time-free description: thimac forest plus arcs.
///
/// Mutable only during construction; once built (or parsed) it is treated
/// as immutable and may be shared across concurrent readers.
struct StaticModel {
  std::string name;
  std::vector<Thimac> thimacs;
  std::vector<FlowArc> flows;
  std::vector<TriggerArc> triggers;

  // -- construction -------------------------------------------------------

  /// Adds a thimac under `parent` (or as a root). Sibling names must be
  /// unique. Throws ModelError: unknown-parent, duplicate-sibling-name,
  /// invalid-name.
  ThimacId add_thimac(const std::string& name, std::optional<ThimacId> parent,
                      ThimacKind kind = ThimacKind::Generic);

  /// Declares a stage on a thimac, at most once per kind.
  /// Throws ModelError: unknown-thimac, duplicate-stage.
  void add_stage(ThimacId thimac, StageKind stage);

  /// Appends a flow arc. Auto-id fN (N = 1-based position among flows)
  /// unless `id` is given. Throws ModelError: unresolved-stage-ref,
  /// self-loop, duplicate-arc-id.
  std::string add_flow(StageRef from, StageRef to,
                       std::optional<std::string> label = std::nullopt,
                       std::optional<std::string> id = std::nullopt);

  /// As add_flow with auto-ids tN; rejects exact self-loops only
  /// (same thimac and same stage).
  std::string add_trigger(StageRef from, StageRef to,
                          std::optional<std::string> label = std::nullopt,
                          std::optional<std::string> id = std::nullopt);

  // -- queries -------------------------------------------------------------

  const Thimac* find(ThimacId id) const;
  std::vector<ThimacId> roots() const;
  std::vector<ThimacId> children(ThimacId id) const;

  /// Transitive children, excluding the thimac itself, sorted by id.
  /// Throws ModelError: unknown-thimac. Cycle-safe.
  std::vector<ThimacId> descendants(ThimacId id) const;

  std::optional<ThimacId> child_by_name(std::optional<ThimacId> parent,
                                        std::string_view name) const;

  /// Resolves a slash path such as "Mug/Handle" from a root name.
  std::optional<ThimacId> find_by_path(std::string_view path) const;

  /// Slash path of a thimac. Bounded against corrupted parent links; a
  /// detected cycle yields a "..."-prefixed best effort string.
  std::string path_of(ThimacId id) const;

  /// True when the referenced thimac exists and declares the stage.
  bool declares(StageRef ref) const;

  /// Path + stage resolution; throws ModelError unresolved-stage-ref.
  StageRef resolve_stage(std::string_view path, StageKind stage) const;

  const FlowArc* find_flow(std::string_view id) const;
  const TriggerArc* find_trigger(std::string_view id) const;
  bool arc_id_taken(std::string_view id) const;

  friend bool operator==(const StaticModel&, const StaticModel&) = default;
};

/// Legality of a flow arc between two stage kinds, within one machine or
/// across two. Total over all 5 x 2 x 5 combinations; the true set is:
/// intra-machine transfer->receive, receive->process, receive->release,
/// process->release, process->create, create->process, create->release,
/// release->transfer; cross-machine transfer->transfer only.
bool stage_adjacency(StageKind from, bool same_machine, StageKind to);

}  // namespace tmtk
