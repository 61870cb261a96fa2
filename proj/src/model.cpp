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

#include "tmtk/model.hpp"

#include <algorithm>
#include <unordered_set>

namespace tmtk {

namespace {

constexpr const char* kStageKeywords[kStageKindCount] = {
    "create", "process", "release", "transfer", "receive"};

std::string describe(StageKind kind) { return kStageKeywords[static_cast<int>(kind)]; }

}  // namespace

const char* to_keyword(StageKind kind) { return kStageKeywords[static_cast<int>(kind)]; }

std::optional<StageKind> stage_from_keyword(std::string_view word) {
  for (int i = 0; i < kStageKindCount; ++i) {
    if (word == kStageKeywords[i]) return static_cast<StageKind>(i);
  }
  return std::nullopt;
}

std::vector<StageKind> StageSet::kinds() const {
  std::vector<StageKind> out;
  for (int i = 0; i < kStageKindCount; ++i) {
    if (bits_.test(i)) out.push_back(static_cast<StageKind>(i));
  }
  return out;
}

ThimacId StaticModel::add_thimac(const std::string& name,
                                 std::optional<ThimacId> parent, ThimacKind kind) {
  if (name.empty()) throw ModelError("invalid-name", "thimac name must be non-empty");
  if (parent && !find(*parent)) {
    throw ModelError("unknown-parent", "parent thimac does not exist");
  }
  if (child_by_name(parent, name)) {
    throw ModelError("duplicate-sibling-name",
                     "a sibling named '" + name + "' already exists");
  }
  Thimac t;
  t.id = static_cast<ThimacId>(thimacs.size());
  t.name = name;
  t.kind = kind;
  t.parent = parent;
  thimacs.push_back(std::move(t));
  return thimacs.back().id;
}

void StaticModel::add_stage(ThimacId thimac, StageKind stage) {
  if (!find(thimac)) throw ModelError("unknown-thimac", "thimac does not exist");
  if (!thimacs[thimac].stages.insert(stage)) {
    throw ModelError("duplicate-stage", "stage '" + describe(stage) +
                                            "' already declared on '" +
                                            thimacs[thimac].name + "'");
  }
}

std::string StaticModel::add_flow(StageRef from, StageRef to,
                                  std::optional<std::string> label,
                                  std::optional<std::string> id) {
  if (!declares(from) || !declares(to)) {
    throw ModelError("unresolved-stage-ref", "flow endpoint does not resolve");
  }
  if (from == to) throw ModelError("self-loop", "flow endpoints must differ");
  std::string arc_id = id ? *id : "f" + std::to_string(flows.size() + 1);
  if (arc_id_taken(arc_id)) {
    throw ModelError("duplicate-arc-id", "arc id '" + arc_id + "' already used");
  }
  flows.push_back(FlowArc{arc_id, from, to, std::move(label)});
  return arc_id;
}

std::string StaticModel::add_trigger(StageRef from, StageRef to,
                                     std::optional<std::string> label,
                                     std::optional<std::string> id) {
  if (!declares(from) || !declares(to)) {
    throw ModelError("unresolved-stage-ref", "trigger endpoint does not resolve");
  }
  if (from == to) {
    throw ModelError("self-loop", "trigger may not loop on a single stage");
  }
  std::string arc_id = id ? *id : "t" + std::to_string(triggers.size() + 1);
  if (arc_id_taken(arc_id)) {
    throw ModelError("duplicate-arc-id", "arc id '" + arc_id + "' already used");
  }
  triggers.push_back(TriggerArc{arc_id, from, to, std::move(label)});
  return arc_id;
}

const Thimac* StaticModel::find(ThimacId id) const {
  if (id < 0 || id >= static_cast<ThimacId>(thimacs.size())) return nullptr;
  return &thimacs[id];
}

std::vector<ThimacId> StaticModel::roots() const {
  std::vector<ThimacId> out;
  for (const Thimac& t : thimacs) {
    if (!t.parent) out.push_back(t.id);
  }
  return out;
}

std::vector<ThimacId> StaticModel::children(ThimacId id) const {
  std::vector<ThimacId> out;
  for (const Thimac& t : thimacs) {
    if (t.parent && *t.parent == id) out.push_back(t.id);
  }
  return out;
}

std::vector<ThimacId> StaticModel::descendants(ThimacId id) const {
  if (!find(id)) throw ModelError("unknown-thimac", "thimac does not exist");
  std::vector<ThimacId> out;
  std::unordered_set<ThimacId> seen{id};
  std::vector<ThimacId> frontier{id};
  while (!frontier.empty()) {
    ThimacId current = frontier.back();
    frontier.pop_back();
    for (ThimacId child : children(current)) {
      if (seen.insert(child).second) {
        out.push_back(child);
        frontier.push_back(child);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ThimacId> StaticModel::child_by_name(std::optional<ThimacId> parent,
                                                   std::string_view name) const {
  for (const Thimac& t : thimacs) {
    if (t.parent == parent && t.name == name) return t.id;
  }
  return std::nullopt;
}

std::optional<ThimacId> StaticModel::find_by_path(std::string_view path) const {
  std::optional<ThimacId> current;
  std::size_t begin = 0;
  bool first = true;
  while (begin <= path.size()) {
    std::size_t end = path.find('/', begin);
    std::string_view segment = path.substr(
        begin, end == std::string_view::npos ? std::string_view::npos : end - begin);
    if (segment.empty()) return std::nullopt;
    std::optional<ThimacId> next = child_by_name(first ? std::nullopt : current, segment);
    if (!next) return std::nullopt;
    current = next;
    first = false;
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return current;
}

std::string StaticModel::path_of(ThimacId id) const {
  const Thimac* t = find(id);
  if (!t) return "<unknown>";
  std::vector<const Thimac*> chain{t};
  std::size_t limit = thimacs.size();
  while (chain.back()->parent && chain.size() <= limit) {
    const Thimac* parent = find(*chain.back()->parent);
    if (!parent) break;
    chain.push_back(parent);
  }
  std::string path = chain.size() > limit ? "..." : "";
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    if (!path.empty()) path += '/';
    path += (*it)->name;
  }
  return path;
}

bool StaticModel::declares(StageRef ref) const {
  const Thimac* t = find(ref.thimac);
  return t && t->stages.contains(ref.stage);
}

StageRef StaticModel::resolve_stage(std::string_view path, StageKind stage) const {
  std::optional<ThimacId> id = find_by_path(path);
  if (!id || !thimacs[*id].stages.contains(stage)) {
    throw ModelError("unresolved-stage-ref", "'" + std::string(path) + "." +
                                                 describe(stage) + "' does not resolve");
  }
  return StageRef{*id, stage};
}

const FlowArc* StaticModel::find_flow(std::string_view id) const {
  for (const FlowArc& arc : flows) {
    if (arc.id == id) return &arc;
  }
  return nullptr;
}

const TriggerArc* StaticModel::find_trigger(std::string_view id) const {
  for (const TriggerArc& arc : triggers) {
    if (arc.id == id) return &arc;
  }
  return nullptr;
}

bool StaticModel::arc_id_taken(std::string_view id) const {
  return find_flow(id) != nullptr || find_trigger(id) != nullptr;
}

bool stage_adjacency(StageKind from, bool same_machine, StageKind to) {
  using enum StageKind;
  if (!same_machine) return from == Transfer && to == Transfer;
  switch (from) {
    case Transfer:
      return to == Receive;
    case Receive:
      return to == Process || to == Release;
    case Process:
      return to == Release || to == Create;
    case Create:
      return to == Process || to == Release;
    case Release:
      return to == Transfer;
  }
  return false;
}

}  // namespace tmtk
