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

#include "tmtk/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "tmtk/diagnostics.hpp"
#include "tmtk/dsl.hpp"
#include "tmtk/levels.hpp"
#include "tmtk/render.hpp"
#include "tmtk/simulator.hpp"
#include "tmtk/validator.hpp"

namespace tmtk {

namespace {

constexpr int kOk = 0;
constexpr int kModelDiagnostics = 1;
constexpr int kUsage = 2;

bool color_enabled(bool out_is_tty) {
  const char* env = std::getenv("TM_COLOR");
  std::string_view mode = env ? env : "auto";
  if (mode == "always") return true;
  if (mode == "never") return false;
  return out_is_tty;
}

std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "cannot read '" << path << "'\n";
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print_parse_errors(const std::string& path, const std::vector<ParseError>& errors,
                        std::ostream& out) {
  for (const ParseError& e : errors) {
    out << path << ":" << e.span.line << ":" << e.span.column << " " << e.code << ": "
        << e.message << "\n";
  }
}

std::optional<ModelBundle> load_model(const std::string& path, std::ostream& out,
                                      std::ostream& err) {
  std::optional<std::string> text = read_file(path, err);
  if (!text) return std::nullopt;
  ParseResult result = parse(*text);
  if (!result.ok()) {
    print_parse_errors(path, result.errors, out);
    return std::nullopt;
  }
  return std::move(result.bundle);
}

// Static rules first; level checks only run once the level below is clean,
// mirroring their preconditions.
std::vector<Diagnostic> full_validate(const ModelBundle& bundle) {
  std::vector<Diagnostic> diags = validate_static(bundle.static_model);
  if (!has_errors(diags)) {
    std::vector<Diagnostic> events = check_events(bundle);
    bool events_clean = !has_errors(events);
    diags.insert(diags.end(), events.begin(), events.end());
    if (events_clean) {
      std::vector<Diagnostic> behavior = check_behavior(bundle);
      diags.insert(diags.end(), behavior.begin(), behavior.end());
    }
  }
  sort_diagnostics(diags);
  return diags;
}

int cmd_validate(const std::string& path, bool strict, bool json, std::ostream& out,
                 std::ostream& err, bool color) {
  std::optional<ModelBundle> bundle = load_model(path, out, err);
  if (!bundle) return kUsage;
  std::vector<Diagnostic> diags = full_validate(*bundle);
  if (strict) {
    for (Diagnostic& d : diags) {
      if (d.rule == "W9") d.severity = Severity::Error;
    }
  }
  out << (json ? diagnostics_to_json(diags) : diagnostics_to_text(diags, color));
  return has_errors(diags) ? kModelDiagnostics : kOk;
}

int cmd_simulate(const std::string& model_path, const std::string& scenario_path,
                 const std::string& trace_path, bool table, std::ostream& out,
                 std::ostream& err, bool color) {
  std::optional<ModelBundle> bundle = load_model(model_path, out, err);
  if (!bundle) return kUsage;
  std::optional<std::string> scenario_text = read_file(scenario_path, err);
  if (!scenario_text) return kUsage;
  ScenarioParseResult scenario = parse_scenario(*scenario_text);
  if (!scenario.ok()) {
    print_parse_errors(scenario_path, scenario.errors, out);
    return kUsage;
  }
  std::vector<Diagnostic> diags = full_validate(*bundle);
  if (has_errors(diags)) {
    out << diagnostics_to_text(diags, color);
    return kModelDiagnostics;
  }
  SimulationTrace trace;
  try {
    trace = simulate(*bundle, *scenario.scenario);
  } catch (const SimulationError& e) {
    out << "error " << e.code() << ": " << e.what() << "\n";
    return kModelDiagnostics;
  }
  if (!trace_path.empty()) {
    std::ofstream file(trace_path, std::ios::binary);
    if (!file) {
      err << "cannot write '" << trace_path << "'\n";
      return kUsage;
    }
    file << trace_to_json(trace);
  }
  if (table) {
    out << trace_to_table(trace);
  } else if (trace_path.empty()) {
    out << trace_to_json(trace);
  }
  return kOk;
}

int cmd_render(const std::string& model_path, const std::string& level,
               const std::string& highlight, const std::string& rankdir,
               const std::string& output_path, std::ostream& out, std::ostream& err,
               bool color) {
  std::optional<ModelBundle> bundle = load_model(model_path, out, err);
  if (!bundle) return kUsage;
  std::vector<Diagnostic> diags = full_validate(*bundle);
  if (has_errors(diags)) {
    out << diagnostics_to_text(diags, color);
    return kModelDiagnostics;
  }
  RenderOptions opts;
  opts.level = level == "static"   ? RenderLevel::Static
               : level == "events" ? RenderLevel::Events
                                   : RenderLevel::Behavior;
  opts.rankdir = rankdir == "TB" ? RankDir::TB : RankDir::LR;
  if (!highlight.empty()) opts.highlight = highlight;
  if (opts.level == RenderLevel::Events && !bundle->events) {
    out << "error level-absent: the model declares no events\n";
    return kModelDiagnostics;
  }
  if (opts.level == RenderLevel::Behavior && !bundle->behavior) {
    out << "error level-absent: the model declares no behavior\n";
    return kModelDiagnostics;
  }
  std::string dot;
  try {
    dot = render(*bundle, opts);
  } catch (const RenderError& e) {
    out << "error " << e.code() << ": " << e.what() << "\n";
    return kModelDiagnostics;
  }
  if (!output_path.empty()) {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      err << "cannot write '" << output_path << "'\n";
      return kUsage;
    }
    file << dot;
  } else {
    out << dot;
  }
  return kOk;
}

int cmd_fmt(const std::string& path, bool write, std::ostream& out, std::ostream& err) {
  std::optional<std::string> text = read_file(path, err);
  if (!text) return kUsage;
  ParseResult result = parse(*text);
  if (!result.ok()) {
    print_parse_errors(path, result.errors, out);
    return kUsage;
  }
  std::string canonical = serialize(*result.bundle);
  if (write) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "cannot write '" << path << "'\n";
      return kUsage;
    }
    file << canonical;
  } else {
    out << canonical;
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool out_is_tty) {
  bool color = color_enabled(out_is_tty);

  CLI::App app{"Thinging Machine model toolkit"};
  app.name("tm");
  app.require_subcommand(1);

  std::string model_path, scenario_path, trace_path, output_path;
  std::string level, highlight, rankdir = "LR";
  bool strict = false, json = false, table = false, write = false;

  CLI::App* validate = app.add_subcommand("validate", "check a model's well-formedness");
  validate->add_option("model", model_path, "model file (.tm)")->required();
  validate->add_flag("--strict", strict, "treat coverage warnings (W9) as errors");
  validate->add_flag("--json", json, "emit diagnostics as a JSON array");

  CLI::App* simulate = app.add_subcommand("simulate", "run a scenario over a model");
  simulate->add_option("model", model_path, "model file (.tm)")->required();
  simulate->add_option("scenario", scenario_path, "scenario file (.tms)")->required();
  simulate->add_option("--trace", trace_path, "write the JSON trace to a file");
  simulate->add_flag("--table", table, "print the occurrence table");

  CLI::App* render = app.add_subcommand("render", "emit a DOT diagram");
  render->add_option("model", model_path, "model file (.tm)")->required();
  render->add_option("--level", level, "static, events or behavior")
      ->required()
      ->check(CLI::IsMember({"static", "events", "behavior"}));
  render->add_option("--highlight", highlight, "shade one event's region (events level)");
  render->add_option("--rankdir", rankdir, "layout direction")
      ->check(CLI::IsMember({"LR", "TB"}));
  render->add_option("-o,--output", output_path, "write DOT to a file");

  CLI::App* fmt = app.add_subcommand("fmt", "canonically format a model file");
  fmt->add_option("model", model_path, "model file (.tm)")->required();
  fmt->add_flag("--write", write, "rewrite the file in place");

  std::vector<const char*> argv;
  argv.push_back("tm");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  if (!highlight.empty() && level != "events") {
    err << "--highlight requires --level events\n";
    return kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(model_path, strict, json, out, err, color);
    if (simulate->parsed()) {
      return cmd_simulate(model_path, scenario_path, trace_path, table, out, err, color);
    }
    if (render->parsed()) {
      return cmd_render(model_path, level, highlight, rankdir, output_path, out, err,
                        color);
    }
    if (fmt->parsed()) return cmd_fmt(model_path, write, out, err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  err << "no command given\n";
  return kUsage;
}

}  // namespace tmtk
