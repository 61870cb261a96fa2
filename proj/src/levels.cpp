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

#include "tmtk/levels.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace tmtk {

ElementRef ElementRef::thimac(std::string path) {
  return {Kind::Thimac, std::move(path), std::nullopt};
}

ElementRef ElementRef::stage_of(std::string path, StageKind stage) {
  return {Kind::Stage, std::move(path), stage};
}

ElementRef ElementRef::arc(std::string id) {
  return {Kind::Arc, std::move(id), std::nullopt};
}

std::string ElementRef::to_string() const {
  if (kind == Kind::Stage) return path + "." + to_keyword(*stage);
  return path;
}

bool operator<(const ElementRef& a, const ElementRef& b) {
  int sa = a.stage ? static_cast<int>(*a.stage) : -1;
  int sb = b.stage ? static_cast<int>(*b.stage) : -1;
  return std::tie(a.kind, a.path, sa) < std::tie(b.kind, b.path, sb);
}

bool resolves(const StaticModel& model, const ElementRef& ref) {
  switch (ref.kind) {
    case ElementRef::Kind::Thimac:
      return model.find_by_path(ref.path).has_value();
    case ElementRef::Kind::Stage: {
      std::optional<ThimacId> id = model.find_by_path(ref.path);
      return id && model.thimacs[*id].stages.contains(*ref.stage);
    }
    case ElementRef::Kind::Arc:
      return model.find_flow(ref.path) != nullptr || model.find_trigger(ref.path) != nullptr;
  }
  return false;
}

const Event* EventsModel::find(std::string_view id) const {
  for (const Event& e : events) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

namespace {

bool is_ancestor(const StaticModel& model, ThimacId ancestor, ThimacId node) {
  std::size_t limit = model.thimacs.size();
  std::optional<ThimacId> current = model.thimacs[node].parent;
  for (std::size_t i = 0; current && i < limit; ++i) {
    if (*current == ancestor) return true;
    const Thimac* t = model.find(*current);
    if (!t) break;
    current = t->parent;
  }
  return false;
}

bool related_by_containment(const StaticModel& model, ThimacId a, ThimacId b) {
  return a == b || is_ancestor(model, a, b) || is_ancestor(model, b, a);
}

// Resolved view of a region element, for the W8 connectivity relation.
struct Anchor {
  ElementRef::Kind kind = ElementRef::Kind::Thimac;
  ThimacId thimac = -1;                    // Thimac/Stage
  std::optional<StageKind> stage;          // Stage
  std::optional<StageRef> from, to;        // Arc endpoints
};

bool anchors_related(const StaticModel& model, const Anchor& a, const Anchor& b) {
  using Kind = ElementRef::Kind;
  if (a.kind == Kind::Arc && b.kind != Kind::Arc) return anchors_related(model, b, a);

  if (a.kind != Kind::Arc && b.kind == Kind::Arc) {
    for (const std::optional<StageRef>& end : {b.from, b.to}) {
      if (!end) continue;
      if (a.kind == Kind::Stage &&
          (end->thimac == a.thimac && end->stage == *a.stage)) {
        return true;
      }
      if (a.kind == Kind::Stage && end->thimac == a.thimac) return true;
      if (a.kind == Kind::Thimac && related_by_containment(model, a.thimac, end->thimac)) {
        return true;
      }
    }
    return false;
  }
  if (a.kind == Kind::Arc && b.kind == Kind::Arc) {
    for (const std::optional<StageRef>& ea : {a.from, a.to}) {
      for (const std::optional<StageRef>& eb : {b.from, b.to}) {
        if (ea && eb && ea->thimac == eb->thimac) return true;
      }
    }
    return false;
  }
  // Thimac/Stage vs Thimac/Stage: containment and membership.
  if (a.kind == Kind::Thimac && b.kind == Kind::Thimac) {
    return related_by_containment(model, a.thimac, b.thimac);
  }
  if (a.kind == Kind::Stage && b.kind == Kind::Stage) {
    return a.thimac == b.thimac;
  }
  ThimacId box = a.kind == Kind::Thimac ? a.thimac : b.thimac;
  ThimacId owner = a.kind == Kind::Stage ? a.thimac : b.thimac;
  return box == owner || is_ancestor(model, box, owner);
}

std::optional<Anchor> resolve_anchor(const StaticModel& model, const ElementRef& ref) {
  Anchor anchor;
  anchor.kind = ref.kind;
  switch (ref.kind) {
    case ElementRef::Kind::Thimac: {
      std::optional<ThimacId> id = model.find_by_path(ref.path);
      if (!id) return std::nullopt;
      anchor.thimac = *id;
      return anchor;
    }
    case ElementRef::Kind::Stage: {
      std::optional<ThimacId> id = model.find_by_path(ref.path);
      if (!id || !model.thimacs[*id].stages.contains(*ref.stage)) return std::nullopt;
      anchor.thimac = *id;
      anchor.stage = ref.stage;
      return anchor;
    }
    case ElementRef::Kind::Arc: {
      if (const FlowArc* f = model.find_flow(ref.path)) {
        anchor.from = f->from;
        anchor.to = f->to;
        return anchor;
      }
      if (const TriggerArc* t = model.find_trigger(ref.path)) {
        anchor.from = t->from;
        anchor.to = t->to;
        return anchor;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool region_connected(const StaticModel& model, const Event& event) {
  std::vector<Anchor> anchors;
  for (const ElementRef& ref : event.region) {
    if (std::optional<Anchor> a = resolve_anchor(model, ref)) anchors.push_back(*a);
  }
  if (anchors.size() <= 1) return true;

  std::vector<std::size_t> component(anchors.size());
  std::iota(component.begin(), component.end(), 0);
  auto find_root = [&](std::size_t i) {
    while (component[i] != i) i = component[i] = component[component[i]];
    return i;
  };
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    for (std::size_t j = i + 1; j < anchors.size(); ++j) {
      if (anchors_related(model, anchors[i], anchors[j])) {
        component[find_root(i)] = find_root(j);
      }
    }
  }
  std::size_t root = find_root(0);
  for (std::size_t i = 1; i < anchors.size(); ++i) {
    if (find_root(i) != root) return false;
  }
  return true;
}

// Expanded coverage: a thimac reference covers its subtree and every stage
// inside it; an arc is covered when referenced or when both endpoints are.
std::set<ElementRef> covered_elements(const ModelBundle& bundle) {
  std::set<ElementRef> covered;
  if (!bundle.events) return covered;
  const StaticModel& model = bundle.static_model;

  auto cover_stage = [&](ThimacId id, StageKind kind) {
    covered.insert(ElementRef::stage_of(model.path_of(id), kind));
  };
  auto cover_thimac_box = [&](ThimacId id) {
    covered.insert(ElementRef::thimac(model.path_of(id)));
    for (StageKind kind : model.thimacs[id].stages.kinds()) cover_stage(id, kind);
  };

  for (const Event& event : bundle.events->events) {
    for (const ElementRef& ref : event.region) {
      if (!resolves(model, ref)) continue;
      switch (ref.kind) {
        case ElementRef::Kind::Thimac: {
          ThimacId id = *model.find_by_path(ref.path);
          cover_thimac_box(id);
          for (ThimacId inner : model.descendants(id)) cover_thimac_box(inner);
          break;
        }
        case ElementRef::Kind::Stage:
          covered.insert(ElementRef::stage_of(ref.path, *ref.stage));
          break;
        case ElementRef::Kind::Arc:
          covered.insert(ElementRef::arc(ref.path));
          break;
      }
    }
  }

  auto endpoints_covered = [&](const StageRef& from, const StageRef& to) {
    return covered.count(ElementRef::stage_of(model.path_of(from.thimac), from.stage)) &&
           covered.count(ElementRef::stage_of(model.path_of(to.thimac), to.stage));
  };
  for (const FlowArc& arc : model.flows) {
    if (endpoints_covered(arc.from, arc.to)) covered.insert(ElementRef::arc(arc.id));
  }
  for (const TriggerArc& arc : model.triggers) {
    if (endpoints_covered(arc.from, arc.to)) covered.insert(ElementRef::arc(arc.id));
  }
  return covered;
}

}  // namespace

std::vector<ElementRef> all_static_elements(const StaticModel& model) {
  std::set<ElementRef> all;
  for (const Thimac& t : model.thimacs) {
    std::string path = model.path_of(t.id);
    all.insert(ElementRef::thimac(path));
    for (StageKind kind : t.stages.kinds()) all.insert(ElementRef::stage_of(path, kind));
  }
  for (const FlowArc& arc : model.flows) all.insert(ElementRef::arc(arc.id));
  for (const TriggerArc& arc : model.triggers) all.insert(ElementRef::arc(arc.id));
  return {all.begin(), all.end()};
}

std::vector<ElementRef> region_union(const ModelBundle& bundle) {
  std::set<ElementRef> covered = covered_elements(bundle);
  return {covered.begin(), covered.end()};
}

std::vector<Diagnostic> check_events(const ModelBundle& bundle) {
  std::vector<Diagnostic> out;
  if (!bundle.events) return out;
  const StaticModel& model = bundle.static_model;

  for (const Event& event : bundle.events->events) {
    if (event.region.empty()) {
      out.push_back({"W7", Severity::Error, event.id, "event region is empty"});
    }
    for (const ElementRef& ref : event.region) {
      if (!resolves(model, ref)) {
        out.push_back({"W7", Severity::Error, event.id,
                       "region element '" + ref.to_string() + "' does not resolve"});
      }
    }
    for (const AttachSpec& attach : event.attaches) {
      for (const std::string& path : {attach.part, attach.whole}) {
        if (!model.find_by_path(path)) {
          out.push_back({"W7", Severity::Error, event.id,
                         "attach element '" + path + "' does not resolve"});
        }
      }
    }
    if (!event.region.empty() && !region_connected(model, event)) {
      out.push_back({"W8", Severity::Error, event.id, "event region is not connected"});
    }
  }

  std::set<ElementRef> covered = covered_elements(bundle);
  for (const ElementRef& element : all_static_elements(model)) {
    if (!covered.count(element)) {
      out.push_back({"W9", Severity::Warning, element.to_string(),
                     "static element is covered by no event region"});
    }
  }

  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> check_behavior(const ModelBundle& bundle) {
  std::vector<Diagnostic> out;
  if (!bundle.behavior) return out;
  const BehaviorModel& behavior = *bundle.behavior;

  std::set<std::string> declared;
  if (bundle.events) {
    for (const Event& e : bundle.events->events) declared.insert(e.id);
  }

  auto require_declared = [&](const std::string& id, const std::string& role) {
    if (!declared.count(id)) {
      out.push_back({"W10", Severity::Error, id, role + " references undeclared event '" + id + "'"});
      return false;
    }
    return true;
  };

  for (const BehaviorEdge& edge : behavior.edges) {
    bool ok = require_declared(edge.from, "behavior edge");
    ok = require_declared(edge.to, "behavior edge") && ok;
    if (ok && edge.guard == EdgeGuard::Yes) {
      const Event* from = bundle.events->find(edge.from);
      bool has_process = false;
      for (const ElementRef& ref : from->region) {
        if (ref.kind == ElementRef::Kind::Stage && ref.stage == StageKind::Process &&
            resolves(bundle.static_model, ref)) {
          has_process = true;
        }
        if (ref.kind == ElementRef::Kind::Arc) {
          const FlowArc* f = bundle.static_model.find_flow(ref.path);
          const TriggerArc* t = bundle.static_model.find_trigger(ref.path);
          StageKind ends[2];
          int n = 0;
          if (f) {
            ends[n++] = f->from.stage;
            ends[n++] = f->to.stage;
          } else if (t) {
            ends[n++] = t->from.stage;
            ends[n++] = t->to.stage;
          }
          for (int i = 0; i < n; ++i) {
            if (ends[i] == StageKind::Process) has_process = true;
          }
        }
      }
      if (!has_process) {
        out.push_back({"W10", Severity::Error, edge.from,
                       "yes-guarded edge from '" + edge.from +
                           "' requires a process stage in its region"});
      }
    }
  }

  if (behavior.start) {
    if (require_declared(*behavior.start, "behavior start")) {
      std::set<std::string> reached{*behavior.start};
      std::vector<std::string> frontier{*behavior.start};
      while (!frontier.empty()) {
        std::string current = frontier.back();
        frontier.pop_back();
        for (const BehaviorEdge& edge : behavior.edges) {
          if (edge.from == current && reached.insert(edge.to).second) {
            frontier.push_back(edge.to);
          }
        }
      }
      for (const std::string& id : declared) {
        if (!reached.count(id)) {
          out.push_back({"W10", Severity::Error, id,
                         "event '" + id + "' is unreachable from start '" +
                             *behavior.start + "'"});
        }
      }
    }
  }

  sort_diagnostics(out);
  return out;
}

}  // namespace tmtk
