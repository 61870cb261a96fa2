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

#include <random>
#include <string>
#include <vector>

#include "tmtk/dsl.hpp"
#include "tmtk/levels.hpp"
#include "tmtk/model.hpp"

namespace tmtk::test {

// Structurally valid random bundles for the round-trip property. Names are
// drawn from a pool that cannot collide with auto arc ids.
inline ModelBundle random_bundle(std::mt19937& rng) {
  static const std::vector<std::string> kNames = {
      "Alpha", "Beta",  "Gamma", "Delta", "Epsilon", "Zeta", "Eta",
      "Theta", "Iota",  "Kappa", "Lam",   "Mu",      "Nu",   "Xi",
      "Omega", "Shell", "Core",  "Unit",  "Whole",   "Part"};
  auto pick = [&](int bound) { return std::uniform_int_distribution<int>(0, bound - 1)(rng); };
  auto chance = [&](int percent) { return pick(100) < percent; };

  ModelBundle bundle;
  StaticModel& model = bundle.static_model;
  model.name = "generated-" + std::to_string(pick(1000));

  int thimac_count = 1 + pick(8);
  for (int i = 0; i < thimac_count; ++i) {
    std::optional<ThimacId> parent;
    if (!model.thimacs.empty() && chance(50)) {
      parent = static_cast<ThimacId>(pick(static_cast<int>(model.thimacs.size())));
    }
    const std::string& name = kNames[pick(static_cast<int>(kNames.size()))];
    if (model.child_by_name(parent, name)) continue;  // keep siblings unique
    ThimacId id = model.add_thimac(name, parent,
                                   chance(30) ? ThimacKind::Object : ThimacKind::Generic);
    for (int s = 0; s < kStageKindCount; ++s) {
      if (chance(55)) model.thimacs[id].stages.insert(static_cast<StageKind>(s));
    }
  }

  std::vector<StageRef> stage_refs;
  for (const Thimac& t : model.thimacs) {
    for (StageKind kind : t.stages.kinds()) stage_refs.push_back({t.id, kind});
  }

  auto random_label = [&]() -> std::optional<std::string> {
    if (!chance(40)) return std::nullopt;
    static const std::vector<std::string> kLabels = {
        "thing", "value", "a b", "x\"y", "back\\slash", "uml-flow"};
    return kLabels[pick(static_cast<int>(kLabels.size()))];
  };

  if (stage_refs.size() >= 2) {
    int arcs = pick(10);
    for (int i = 0; i < arcs; ++i) {
      StageRef from = stage_refs[pick(static_cast<int>(stage_refs.size()))];
      StageRef to = stage_refs[pick(static_cast<int>(stage_refs.size()))];
      if (from == to) continue;
      std::optional<std::string> id;
      if (chance(25)) id = "arc" + std::to_string(i);
      try {
        if (chance(70)) {
          model.add_flow(from, to, random_label(), id);
        } else {
          model.add_trigger(from, to, random_label(), id);
        }
      } catch (const ModelError&) {
        // duplicate explicit id; skip
      }
    }
  }

  if (chance(70)) {
    EventsModel events;
    int event_count = 1 + pick(6);
    for (int i = 0; i < event_count; ++i) {
      Event event;
      event.id = "ev" + std::to_string(i);
      event.unique = chance(25);
      int region_size = pick(5);
      for (int r = 0; r < region_size; ++r) {
        switch (pick(3)) {
          case 0: {
            ThimacId id = static_cast<ThimacId>(pick(static_cast<int>(model.thimacs.size())));
            event.region.push_back(ElementRef::thimac(model.path_of(id)));
            break;
          }
          case 1: {
            if (stage_refs.empty()) break;
            StageRef ref = stage_refs[pick(static_cast<int>(stage_refs.size()))];
            event.region.push_back(
                ElementRef::stage_of(model.path_of(ref.thimac), ref.stage));
            break;
          }
          default: {
            if (model.flows.empty()) break;
            event.region.push_back(
                ElementRef::arc(model.flows[pick(static_cast<int>(model.flows.size()))].id));
            break;
          }
        }
      }
      if (chance(20) && model.thimacs.size() >= 2) {
        ThimacId part = static_cast<ThimacId>(pick(static_cast<int>(model.thimacs.size())));
        ThimacId whole = static_cast<ThimacId>(pick(static_cast<int>(model.thimacs.size())));
        event.attaches.push_back({model.path_of(part), model.path_of(whole)});
      }
      events.events.push_back(std::move(event));
    }
    bundle.events = std::move(events);

    if (chance(70)) {
      BehaviorModel behavior;
      const auto& events_list = bundle.events->events;
      auto random_event = [&]() {
        return events_list[pick(static_cast<int>(events_list.size()))].id;
      };
      for (const Event& event : events_list) {
        if (chance(60)) {
          behavior.edges.push_back({event.id, random_event(), EdgeGuard::Unconditional});
        }
        if (chance(25)) {
          behavior.edges.push_back({event.id, random_event(), EdgeGuard::Yes});
          behavior.edges.push_back({event.id, random_event(), EdgeGuard::No});
        }
      }
      if (chance(60)) behavior.start = random_event();
      bundle.behavior = std::move(behavior);
    }
  }
  return bundle;
}

// Byte soup for the fuzz property: a mix of random printable fragments,
// grammar keywords and raw bytes.
inline std::string random_garbage(std::mt19937& rng, std::size_t max_len) {
  auto pick = [&](int bound) { return std::uniform_int_distribution<int>(0, bound - 1)(rng); };
  static const std::vector<std::string> kFragments = {
      "model",  "thimac", "flow",    "trigger", "event", "behavior", "stages:",
      "region:", "{",     "}",       "->",      "=>",    "-[yes]->", "\"",
      "label",  "#",      "\n",      "a.b",     "A/B",   ",",        ".",
      "unique", "attach", "start",   "create",  "process", "release",
      "transfer", "receive"};
  std::string out;
  std::size_t target = 1 + pick(static_cast<int>(max_len));
  while (out.size() < target) {
    if (pick(100) < 70) {
      out += kFragments[pick(static_cast<int>(kFragments.size()))];
      out += ' ';
    } else {
      out += static_cast<char>(pick(256));
    }
  }
  return out;
}

}  // namespace tmtk::test
