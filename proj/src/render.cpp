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

#include "tmtk/render.hpp"

#include <map>
#include <string>
#include <vector>

namespace tmtk {

namespace {

constexpr const char* kShadeFill = "#dddddd";
constexpr const char* kShadeEdge = "#888888";

std::string sanitized(std::string_view text) {
  std::string out;
  for (char c : text) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    out += ok ? c : '_';
  }
  if (out.empty() || (out[0] >= '0' && out[0] <= '9')) out.insert(out.begin(), '_');
  return out;
}

std::string quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string node_id(const StaticModel& model, const StageRef& ref) {
  return sanitized(model.path_of(ref.thimac)) + "__" + to_keyword(ref.stage);
}

// Event-membership annotations keyed by element. Empty for the static level.
struct Annotations {
  std::map<std::string, std::vector<std::string>> members;  // element key -> event ids
  std::map<std::string, bool> shaded;                       // element key -> highlight

  void note(const std::string& key, const std::string& event, bool highlight) {
    members[key].push_back(event);
    if (highlight) shaded[key] = true;
  }
  const std::vector<std::string>* events_of(const std::string& key) const {
    auto it = members.find(key);
    return it == members.end() ? nullptr : &it->second;
  }
  bool is_shaded(const std::string& key) const {
    auto it = shaded.find(key);
    return it != shaded.end() && it->second;
  }
};

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out += ',';
    out += item;
  }
  return out;
}

void emit_cluster(const StaticModel& model, ThimacId id, int depth,
                  const Annotations& notes, std::string& out) {
  const Thimac& t = model.thimacs[id];
  std::string path = model.path_of(id);
  std::string indent(depth * 2, ' ');
  out += indent + "subgraph cluster_" + sanitized(path) + " {\n";
  out += indent + "  label=" + quoted(t.name) + ";\n";
  if (t.kind == ThimacKind::Object) out += indent + "  peripheries=2;\n";
  if (const auto* events = notes.events_of(path)) {
    out += indent + "  tooltip=" + quoted(joined(*events)) + ";\n";
  }
  if (notes.is_shaded(path)) {
    out += indent + "  style=filled;\n";
    out += indent + "  fillcolor=" + quoted(kShadeFill) + ";\n";
  }
  for (StageKind kind : t.stages.kinds()) {
    std::string stage_key = path + "." + to_keyword(kind);
    std::string node = sanitized(path) + "__" + to_keyword(kind);
    out += indent + "  " + node + " [label=" + quoted(to_keyword(kind));
    if (const auto* events = notes.events_of(stage_key)) {
      out += ", tooltip=" + quoted(joined(*events));
    }
    if (notes.is_shaded(stage_key)) {
      out += ", style=filled, fillcolor=" + quoted(kShadeFill);
    }
    out += "];\n";
  }
  for (ThimacId child : model.children(id)) {
    emit_cluster(model, child, depth + 1, notes, out);
  }
  out += indent + "}\n";
}

void emit_edges(const StaticModel& model, const Annotations& notes, std::string& out) {
  auto emit = [&](const std::string& id, const StageRef& from, const StageRef& to,
                  const std::optional<std::string>& label, bool dashed) {
    out += "  " + node_id(model, from) + " -> " + node_id(model, to);
    std::vector<std::string> attrs;
    if (dashed) attrs.push_back("style=dashed");
    if (label) attrs.push_back("label=" + quoted(*label));
    if (const auto* events = notes.events_of(id)) {
      attrs.push_back("tooltip=" + quoted(joined(*events)));
    }
    if (notes.is_shaded(id)) attrs.push_back("color=" + quoted(kShadeEdge));
    if (!attrs.empty()) {
      out += " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) {
        if (i) out += ", ";
        out += attrs[i];
      }
      out += "]";
    }
    out += ";\n";
  };
  for (const FlowArc& arc : model.flows) emit(arc.id, arc.from, arc.to, arc.label, false);
  for (const TriggerArc& arc : model.triggers)
    emit(arc.id, arc.from, arc.to, arc.label, true);
}

std::string render_model(const ModelBundle& bundle, const RenderOptions& opts,
                         const Annotations& notes) {
  const StaticModel& model = bundle.static_model;
  std::string out = "digraph " + quoted(model.name) + " {\n";
  out += std::string("  rankdir=") + (opts.rankdir == RankDir::LR ? "LR" : "TB") + ";\n";
  if (!model.thimacs.empty()) out += "  node [shape=box];\n";
  for (ThimacId root : model.roots()) emit_cluster(model, root, 1, notes, out);
  emit_edges(model, notes, out);
  out += "}\n";
  return out;
}

}  // namespace

std::string render_static(const ModelBundle& bundle, const RenderOptions& opts) {
  return render_model(bundle, opts, Annotations{});
}

std::string render_events(const ModelBundle& bundle, const RenderOptions& opts) {
  Annotations notes;
  if (opts.highlight &&
      (!bundle.events || !bundle.events->find(*opts.highlight))) {
    throw RenderError("highlight-unknown-event",
                      "no event named '" + *opts.highlight + "'");
  }
  if (bundle.events) {
    for (const Event& event : bundle.events->events) {
      bool highlight = opts.highlight && event.id == *opts.highlight;
      for (const ElementRef& ref : event.region) {
        if (!resolves(bundle.static_model, ref)) continue;
        notes.note(ref.to_string(), event.id, highlight);
      }
    }
  }
  return render_model(bundle, opts, notes);
}

std::string render_behavior(const ModelBundle& bundle, const RenderOptions& opts) {
  if (!bundle.behavior) {
    throw RenderError("level-absent", "the bundle declares no behavior model");
  }
  std::string out = "digraph " + quoted(bundle.static_model.name) + " {\n";
  out += std::string("  rankdir=") + (opts.rankdir == RankDir::LR ? "LR" : "TB") + ";\n";
  if (bundle.events) {
    for (const Event& event : bundle.events->events) {
      out += "  " + sanitized(event.id) + " [label=" + quoted(event.id) + "];\n";
    }
  }
  for (const BehaviorEdge& edge : bundle.behavior->edges) {
    out += "  " + sanitized(edge.from) + " -> " + sanitized(edge.to);
    if (edge.guard == EdgeGuard::Yes) out += " [label=\"yes\"]";
    if (edge.guard == EdgeGuard::No) out += " [label=\"no\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string render(const ModelBundle& bundle, const RenderOptions& opts) {
  if (opts.highlight && opts.level != RenderLevel::Events) {
    throw RenderError("highlight-invalid", "highlight applies to the events level only");
  }
  switch (opts.level) {
    case RenderLevel::Static: return render_static(bundle, opts);
    case RenderLevel::Events: return render_events(bundle, opts);
    case RenderLevel::Behavior: return render_behavior(bundle, opts);
  }
  throw RenderError("level-invalid", "unknown render level");
}

}  // namespace tmtk
