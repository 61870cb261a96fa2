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

#include "tmtk/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef TMTK_FIXTURE_DIR
#define TMTK_FIXTURE_DIR "fixtures"
#endif

namespace tmtk {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CorpusError("io-error", "cannot read '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const FixtureEntry* find_entry(const std::string& name) {
  static const std::vector<FixtureEntry> entries = list_fixtures();
  for (const FixtureEntry& entry : entries) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

}  // namespace

std::filesystem::path fixture_root() {
  if (const char* env = std::getenv("TM_FIXTURE_DIR"); env && *env) return env;
  return TMTK_FIXTURE_DIR;
}

std::vector<FixtureEntry> list_fixtures() {
  return {
      {"cake",
       "cake.tm",
       {"cake.cut.tms"},
       "othimac cake and its separated left half (Figs. 29-31)"},
      {"cat",
       "cat.tm",
       {"cat.accident.tms"},
       "cat identity preserved across tail loss (Figs. 35-36)"},
      {"customer-order-item",
       "customer-order-item.tm",
       {"customer-order-item.delete-item.tms",
        "customer-order-item.customer-orders.tms"},
       "customer/order/item case study, modules A-F (Figs. 10-15)"},
      {"employee-company",
       "employee-company.tm",
       {"employee-company.assignments.tms"},
       "employee-company association with unique work event (Figs. 17-21)"},
      {"mug-handle",
       "mug-handle.tm",
       {"mug-handle.move.tms"},
       "mug whose handle moves with the whole (Fig. 27)"},
      {"stereo-remote",
       "stereo-remote.tm",
       {"stereo-remote.move.tms"},
       "stereo system whose remote moves freely (Fig. 28)"},
      {"table",
       "table.tm",
       {"table.construction.tms"},
       "table assembled from a top and four legs (Figs. 23-25)"},
      {"tuple",
       "tuple.tm",
       {},
       "tuple created by processing attribute values (Fig. 6)"},
  };
}

ModelBundle load_fixture(const std::string& name) {
  const FixtureEntry* entry = find_entry(name);
  if (!entry) throw CorpusError("unknown-fixture", "no fixture named '" + name + "'");
  std::string text = read_file(fixture_root() / entry->model_path);
  ParseResult result = parse(text);
  if (!result.ok()) {
    std::string detail;
    if (!result.errors.empty()) detail = result.errors.front().message;
    throw CorpusError("fixture-parse", "fixture '" + name + "' failed to parse: " + detail);
  }
  return std::move(*result.bundle);
}

Scenario load_scenario(const std::string& fixture, const std::string& scenario) {
  const FixtureEntry* entry = find_entry(fixture);
  if (!entry) throw CorpusError("unknown-fixture", "no fixture named '" + fixture + "'");
  std::string file = fixture + "." + scenario + ".tms";
  for (const std::string& candidate : entry->scenario_paths) {
    if (candidate == file) {
      std::string text = read_file(fixture_root() / candidate);
      ScenarioParseResult result = parse_scenario(text);
      if (!result.ok()) {
        std::string detail;
        if (!result.errors.empty()) detail = result.errors.front().message;
        throw CorpusError("fixture-parse",
                          "scenario '" + file + "' failed to parse: " + detail);
      }
      return std::move(*result.scenario);
    }
  }
  throw CorpusError("unknown-fixture",
                    "fixture '" + fixture + "' has no scenario '" + scenario + "'");
}

}  // namespace tmtk
