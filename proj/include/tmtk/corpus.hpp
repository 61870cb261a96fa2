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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmtk/dsl.hpp"
#include "tmtk/levels.hpp"

namespace tmtk {

/// One checked-in example model, with the figure citation it encodes.
struct FixtureEntry {
  std::string name;
  std::string model_path;                   // relative to fixture_root()
  std::vector<std::string> scenario_paths;  // relative to fixture_root()
  std::string provenance;
};

class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Directory holding the .tm/.tms fixture files. Overridable with the
/// TM_FIXTURE_DIR environment variable.
std::filesystem::path fixture_root();

/// The eight fixtures, sorted by name.
std::vector<FixtureEntry> list_fixtures();

/// Parses a fixture by name. Throws CorpusError: unknown-fixture, io-error,
/// fixture-parse.
ModelBundle load_fixture(const std::string& name);

/// Parses `fixtures/<fixture>.<scenario>.tms`.
Scenario load_scenario(const std::string& fixture, const std::string& scenario);

}  // namespace tmtk
