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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "tmtk/model.hpp"

using namespace tmtk;

namespace {

// The full legal-arc table, frozen independently of the implementation.
// Intra-machine pairs first, then the single cross-machine pair.
const std::set<std::tuple<StageKind, bool, StageKind>>& legal_arcs() {
  using enum StageKind;
  static const std::set<std::tuple<StageKind, bool, StageKind>> table = {
      {Transfer, true, Receive},
      {Receive, true, Process},
      {Receive, true, Release},
      {Process, true, Release},
      {Process, true, Create},
      {Create, true, Process},
      {Create, true, Release},
      {Release, true, Transfer},
      {Transfer, false, Transfer},
  };
  return table;
}

std::string code_of(const ModelError& e) { return e.code(); }

}  // namespace

TEST_CASE("add_thimac roots and children") {
  StaticModel model;
  ThimacId customer = model.add_thimac("Customer", std::nullopt);
  CHECK(model.thimacs.size() == 1);
  CHECK(model.thimacs[customer].stages.empty());
  CHECK(model.path_of(customer) == "Customer");

  ThimacId mug = model.add_thimac("Mug", std::nullopt, ThimacKind::Object);
  ThimacId handle = model.add_thimac("Handle", mug);
  CHECK(model.path_of(handle) == "Mug/Handle");
  CHECK(model.find_by_path("Mug/Handle") == handle);
}

TEST_CASE("add_thimac rejects duplicates and unknown parents") {
  StaticModel model;
  ThimacId mug = model.add_thimac("Mug", std::nullopt, ThimacKind::Object);
  model.add_thimac("Handle", mug);
  CHECK_THROWS_WITH_AS(model.add_thimac("Handle", mug), doctest::Contains("Handle"),
                       ModelError);
  try {
    model.add_thimac("Handle", mug);
  } catch (const ModelError& e) {
    CHECK(code_of(e) == "duplicate-sibling-name");
  }
  try {
    model.add_thimac("Lid", 99);
  } catch (const ModelError& e) {
    CHECK(code_of(e) == "unknown-parent");
  }
  // Same name under different parents is fine.
  ThimacId order = model.add_thimac("Order", std::nullopt);
  CHECK_NOTHROW(model.add_thimac("Record", order));
  CHECK_NOTHROW(model.add_thimac("Record", mug));
}

TEST_CASE("add_stage") {
  StaticModel model;
  ThimacId customer = model.add_thimac("Customer", std::nullopt);
  model.add_stage(customer, StageKind::Create);
  CHECK(model.thimacs[customer].stages.contains(StageKind::Create));

  try {
    model.add_stage(customer, StageKind::Create);
    FAIL("expected duplicate-stage");
  } catch (const ModelError& e) {
    CHECK(code_of(e) == "duplicate-stage");
  }

  ThimacId order = model.add_thimac("Order", std::nullopt);
  for (int i = 0; i < kStageKindCount; ++i) {
    model.add_stage(order, static_cast<StageKind>(i));
  }
  CHECK(model.thimacs[order].stages.size() == 5);

  try {
    model.add_stage(42, StageKind::Create);
    FAIL("expected unknown-thimac");
  } catch (const ModelError& e) {
    CHECK(code_of(e) == "unknown-thimac");
  }
}

TEST_CASE("add_flow auto ids and errors") {
  StaticModel model;
  ThimacId employee = model.add_thimac("Employee", std::nullopt);
  model.add_stage(employee, StageKind::Release);
  model.add_stage(employee, StageKind::Transfer);

  std::string id = model.add_flow({employee, StageKind::Release},
                                  {employee, StageKind::Transfer});
  CHECK(id == "f1");

  try {
    model.add_flow({employee, StageKind::Create}, {employee, StageKind::Transfer});
    FAIL("expected unresolved-stage-ref");
  } catch (const ModelError& e) {
    CHECK(code_of(e) == "unresolved-stage-ref");
  }
  try {
    model.add_flow({employee, StageKind::Release}, {employee, StageKind::Release});
    FAIL("expected self-loop");
  } catch (const ModelError& e) {
    CHECK(code_of(e) == "self-loop");
  }
}

TEST_CASE("add_trigger cross-thimac and self-loop rule") {
  StaticModel model;
  ThimacId tuple = model.add_thimac("Tuple", std::nullopt);
  model.add_stage(tuple, StageKind::Process);
  model.add_stage(tuple, StageKind::Create);
  ThimacId order = model.add_thimac("Order", std::nullopt);
  model.add_stage(order, StageKind::Process);

  CHECK(model.add_trigger({tuple, StageKind::Process}, {tuple, StageKind::Create}) == "t1");
  // Cross-thimac triggering is open (same stage kind included).
  CHECK(model.add_trigger({tuple, StageKind::Process}, {order, StageKind::Process}) == "t2");
  try {
    model.add_trigger({tuple, StageKind::Process}, {tuple, StageKind::Process});
    FAIL("expected self-loop");
  } catch (const ModelError& e) {
    CHECK(code_of(e) == "self-loop");
  }
}

TEST_CASE("stage_adjacency matches the frozen table over all 50 combinations") {
  int legal = 0;
  for (int f = 0; f < kStageKindCount; ++f) {
    for (bool same : {true, false}) {
      for (int t = 0; t < kStageKindCount; ++t) {
        auto from = static_cast<StageKind>(f);
        auto to = static_cast<StageKind>(t);
        bool expected = legal_arcs().count({from, same, to}) > 0;
        CAPTURE(f);
        CAPTURE(same);
        CAPTURE(t);
        CHECK(stage_adjacency(from, same, to) == expected);
        if (expected) ++legal;
      }
    }
  }
  CHECK(legal == 9);
  // Spot checks straight from the stage descriptions.
  CHECK(stage_adjacency(StageKind::Release, true, StageKind::Transfer));
  CHECK(stage_adjacency(StageKind::Transfer, false, StageKind::Transfer));
  CHECK_FALSE(stage_adjacency(StageKind::Receive, true, StageKind::Create));
}

TEST_CASE("descendants") {
  StaticModel model;
  ThimacId a = model.add_thimac("A", std::nullopt);
  ThimacId b = model.add_thimac("B", a);
  ThimacId c = model.add_thimac("C", b);
  ThimacId leaf = model.add_thimac("Leaf", std::nullopt);

  CHECK(model.descendants(leaf).empty());
  CHECK(model.descendants(a) == std::vector<ThimacId>{b, c});
  CHECK(model.descendants(b) == std::vector<ThimacId>{c});
  try {
    model.descendants(99);
    FAIL("expected unknown-thimac");
  } catch (const ModelError& e) {
    CHECK(code_of(e) == "unknown-thimac");
  }
}

TEST_CASE("forest property: parent walks terminate within thimac count") {
  std::mt19937 rng(7);
  for (int round = 0; round < 50; ++round) {
    StaticModel model;
    int n = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < n; ++i) {
      std::optional<ThimacId> parent;
      if (!model.thimacs.empty() && rng() % 2) {
        parent = static_cast<ThimacId>(rng() % model.thimacs.size());
      }
      try {
        model.add_thimac("N" + std::to_string(i), parent);
      } catch (const ModelError&) {
      }
    }
    for (const Thimac& t : model.thimacs) {
      std::size_t steps = 0;
      std::optional<ThimacId> current = t.parent;
      while (current) {
        ++steps;
        REQUIRE(steps <= model.thimacs.size());
        current = model.thimacs[*current].parent;
      }
    }
  }
}

TEST_CASE("arc ids are stable across identical rebuilds") {
  auto build = [] {
    StaticModel model;
    ThimacId a = model.add_thimac("A", std::nullopt);
    model.add_stage(a, StageKind::Release);
    model.add_stage(a, StageKind::Transfer);
    model.add_stage(a, StageKind::Process);
    ThimacId b = model.add_thimac("B", std::nullopt);
    model.add_stage(b, StageKind::Transfer);
    model.add_flow({a, StageKind::Release}, {a, StageKind::Transfer});
    model.add_flow({a, StageKind::Transfer}, {b, StageKind::Transfer}, "thing");
    model.add_trigger({a, StageKind::Process}, {b, StageKind::Transfer});
    return model;
  };
  StaticModel first = build();
  StaticModel second = build();
  CHECK(first == second);
  CHECK(first.flows[0].id == "f1");
  CHECK(first.flows[1].id == "f2");
  CHECK(first.triggers[0].id == "t1");

  // Ids are a bijection onto arcs.
  std::set<std::string> ids;
  for (const FlowArc& arc : first.flows) ids.insert(arc.id);
  for (const TriggerArc& arc : first.triggers) ids.insert(arc.id);
  CHECK(ids.size() == first.flows.size() + first.triggers.size());
}

TEST_CASE("no operation leaves a dangling stage ref") {
  StaticModel model;
  ThimacId a = model.add_thimac("A", std::nullopt);
  model.add_stage(a, StageKind::Create);
  model.add_stage(a, StageKind::Process);
  ThimacId b = model.add_thimac("B", a);
  model.add_stage(b, StageKind::Process);
  model.add_flow({a, StageKind::Create}, {a, StageKind::Process});
  model.add_trigger({a, StageKind::Process}, {b, StageKind::Process});
  for (const FlowArc& arc : model.flows) {
    CHECK(model.declares(arc.from));
    CHECK(model.declares(arc.to));
  }
  for (const TriggerArc& arc : model.triggers) {
    CHECK(model.declares(arc.from));
    CHECK(model.declares(arc.to));
  }
}
