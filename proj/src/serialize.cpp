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

#include <string>

#include "tmtk/dsl.hpp"

namespace tmtk {

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void emit_thimac(const StaticModel& model, ThimacId id, int depth, std::string& out) {
  const Thimac& t = model.thimacs[id];
  std::string indent(depth * 2, ' ');
  out += indent + "thimac " + t.name;
  if (t.kind == ThimacKind::Object) out += " object";
  out += " {\n";
  if (!t.stages.empty()) {
    out += indent + "  stages: ";
    bool first = true;
    for (StageKind kind : t.stages.kinds()) {
      if (!first) out += ", ";
      out += to_keyword(kind);
      first = false;
    }
    out += '\n';
  }
  for (ThimacId child : model.children(id)) emit_thimac(model, child, depth + 1, out);
  out += indent + "}\n";
}

std::string stage_path(const StaticModel& model, const StageRef& ref) {
  return model.path_of(ref.thimac) + "." + to_keyword(ref.stage);
}

}  // namespace

std::string serialize(const ModelBundle& bundle) {
  const StaticModel& model = bundle.static_model;
  std::string out = "model " + quoted(model.name) + "\n";

  for (ThimacId root : model.roots()) emit_thimac(model, root, 0, out);

  for (const FlowArc& arc : model.flows) {
    out += "flow " + arc.id + ": " + stage_path(model, arc.from) + " -> " +
           stage_path(model, arc.to);
    if (arc.label) out += " label " + quoted(*arc.label);
    out += '\n';
  }
  for (const TriggerArc& arc : model.triggers) {
    out += "trigger " + arc.id + ": " + stage_path(model, arc.from) + " => " +
           stage_path(model, arc.to);
    if (arc.label) out += " label " + quoted(*arc.label);
    out += '\n';
  }

  if (bundle.events) {
    for (const Event& event : bundle.events->events) {
      out += "event " + event.id;
      if (event.unique) out += " unique";
      out += " {\n";
      if (!event.region.empty()) {
        out += "  region: ";
        bool first = true;
        for (const ElementRef& ref : event.region) {
          if (!first) out += ", ";
          out += ref.to_string();
          first = false;
        }
        out += '\n';
      }
      for (const AttachSpec& attach : event.attaches) {
        out += "  attach " + attach.part + " -> " + attach.whole + "\n";
      }
      out += "}\n";
    }
  }

  if (bundle.behavior) {
    out += "behavior {\n";
    if (bundle.behavior->start) out += "  start " + *bundle.behavior->start + "\n";
    for (const BehaviorEdge& edge : bundle.behavior->edges) {
      out += "  " + edge.from;
      switch (edge.guard) {
        case EdgeGuard::Unconditional: out += " -> "; break;
        case EdgeGuard::Yes: out += " -[yes]-> "; break;
        case EdgeGuard::No: out += " -[no]-> "; break;
      }
      out += edge.to + "\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace tmtk
