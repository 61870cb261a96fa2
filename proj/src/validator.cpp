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

#include "tmtk/validator.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tmtk {

namespace {

void check_flow_legality(const StaticModel& model, std::vector<Diagnostic>& out) {
  for (const FlowArc& arc : model.flows) {
    if (!model.declares(arc.from) || !model.declares(arc.to)) continue;  // W5 territory
    bool same = arc.from.thimac == arc.to.thimac;
    if (stage_adjacency(arc.from.stage, same, arc.to.stage)) continue;
    std::string detail = std::string(to_keyword(arc.from.stage)) + " -> " +
                         to_keyword(arc.to.stage);
    if (same) {
      out.push_back({"W1", Severity::Error, arc.id,
                     "illegal flow " + detail + " within '" +
                         model.path_of(arc.from.thimac) + "'"});
    } else {
      out.push_back({"W2", Severity::Error, arc.id,
                     "cross-machine flow must be transfer -> transfer, got " + detail});
    }
  }
}

void check_trigger_self_loops(const StaticModel& model, std::vector<Diagnostic>& out) {
  for (const TriggerArc& arc : model.triggers) {
    if (arc.from == arc.to) {
      out.push_back({"W3", Severity::Error, arc.id,
                     "trigger loops on '" + model.path_of(arc.from.thimac) + "." +
                         to_keyword(arc.from.stage) + "'"});
    }
  }
}

// Forest shape and sibling-name uniqueness, re-checked after parse so that
// in-memory corruption is caught too.
void check_forest(const StaticModel& model, std::vector<Diagnostic>& out) {
  enum class Mark { Unvisited, InProgress, Ok, Cyclic };
  std::vector<Mark> marks(model.thimacs.size(), Mark::Unvisited);

  for (const Thimac& t : model.thimacs) {
    if (marks[t.id] != Mark::Unvisited) continue;
    std::vector<ThimacId> path;
    ThimacId current = t.id;
    Mark verdict = Mark::Ok;
    while (true) {
      if (marks[current] == Mark::Ok) break;
      if (marks[current] == Mark::Cyclic || marks[current] == Mark::InProgress) {
        verdict = Mark::Cyclic;
        break;
      }
      marks[current] = Mark::InProgress;
      path.push_back(current);
      const Thimac& node = model.thimacs[current];
      if (!node.parent) break;
      if (!model.find(*node.parent)) {
        out.push_back({"W5", Severity::Error, node.name,
                       "parent link of '" + node.name + "' does not resolve"});
        break;
      }
      current = *node.parent;
    }
    for (ThimacId id : path) marks[id] = verdict;
    if (verdict == Mark::Cyclic) {
      out.push_back({"W5", Severity::Error, model.thimacs[t.id].name,
                     "containment of '" + model.thimacs[t.id].name +
                         "' forms a cycle, not a forest"});
    }
  }

  std::map<std::pair<std::optional<ThimacId>, std::string>, int> names;
  for (const Thimac& t : model.thimacs) names[{t.parent, t.name}]++;
  for (const auto& [key, count] : names) {
    if (count < 2) continue;
    std::string where = key.first ? "'" + model.path_of(*key.first) + "'" : "the roots";
    out.push_back({"W5", Severity::Error, key.second,
                   std::to_string(count) + " siblings named '" + key.second +
                       "' under " + where});
  }
}

// Encapsulation of object thimacs: a strict descendant may not exchange
// flows or triggers with anything outside the whole's subtree; the whole's
// own stages are the interface and stay exempt.
void check_object_encapsulation(const StaticModel& model, std::vector<Diagnostic>& out) {
  for (const Thimac& whole : model.thimacs) {
    if (whole.kind != ThimacKind::Object) continue;
    std::vector<ThimacId> inside_list;
    try {
      inside_list = model.descendants(whole.id);
    } catch (const ModelError&) {
      continue;
    }
    std::set<ThimacId> inside(inside_list.begin(), inside_list.end());
    auto is_descendant = [&](ThimacId id) { return inside.count(id) > 0; };
    auto in_subtree = [&](ThimacId id) { return id == whole.id || inside.count(id) > 0; };

    auto check_arc = [&](const std::string& id, const StageRef& from, const StageRef& to,
                         const char* what) {
      bool leak = (is_descendant(from.thimac) && !in_subtree(to.thimac)) ||
                  (is_descendant(to.thimac) && !in_subtree(from.thimac));
      if (leak) {
        out.push_back({"W6", Severity::Error, id,
                       std::string(what) + " bypasses object thimac '" +
                           model.path_of(whole.id) + "'"});
      }
    };
    for (const FlowArc& arc : model.flows) check_arc(arc.id, arc.from, arc.to, "flow");
    for (const TriggerArc& arc : model.triggers)
      check_arc(arc.id, arc.from, arc.to, "trigger");
  }
}

}  // namespace

std::vector<Diagnostic> validate_static(const StaticModel& model) {
  std::vector<Diagnostic> out;
  check_flow_legality(model, out);
  check_trigger_self_loops(model, out);
  // W4 reserved.
  check_forest(model, out);
  check_object_encapsulation(model, out);
  sort_diagnostics(out);
  return out;
}

}  // namespace tmtk
