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

#include "tmtk/simulator.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

namespace tmtk {

namespace {

Token* find_token(std::vector<Token>& tokens, TokenId id) {
  for (Token& t : tokens) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

// The part moves wherever the whole moves: relocating a token drags every
// token transitively attached to it.
void relocate(std::vector<Token>& tokens, TokenId id, const std::string& destination) {
  std::set<TokenId> moving{id};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Token& t : tokens) {
      if (t.attached_to && moving.count(*t.attached_to) && moving.insert(t.id).second) {
        grew = true;
      }
    }
  }
  for (Token& t : tokens) {
    if (moving.count(t.id)) t.location = destination;
  }
}

std::string normalized(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c >= 'A' && c <= 'Z') out += static_cast<char>(c - 'A' + 'a');
    else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) out += c;
  }
  return out;
}

std::string last_segment(const std::string& path) {
  std::size_t slash = path.rfind('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

class Run {
 public:
  Run(const ModelBundle& bundle, const Scenario& scenario)
      : bundle_(bundle), model_(bundle.static_model), scenario_(scenario) {}

  SimulationTrace execute() {
    bind();
    SimulationTrace trace;
    trace.scenario = scenario_.name;

    std::string current = scenario_.start;
    while (true) {
      // The final budget slot is reserved for the halt marker.
      if (static_cast<int>(trace.records.size()) >= scenario_.max_steps - 1) {
        trace.records.push_back(FiringRecord{
            static_cast<int>(trace.records.size()) + 1, current,
            Outcome::HaltedMaxSteps, std::nullopt, std::nullopt});
        trace.halt = HaltReason::MaxSteps;
        break;
      }
      const Event& event = *bundle_.events->find(current);
      int step = static_cast<int>(trace.records.size()) + 1;

      if (event.unique) {
        const std::vector<std::string>* keys = nullptr;
        if (auto it = scenario_.unique_keys.find(event.id);
            it != scenario_.unique_keys.end()) {
          keys = &it->second;
        }
        std::size_t& cursor = key_cursor_[event.id];
        if (!keys || cursor >= keys->size()) {
          // The attempt script is complete; the run ends here.
          trace.halt = HaltReason::UniqueKeysExhausted;
          break;
        }
        const std::string& key = (*keys)[cursor++];
        if (!executed_keys_[event.id].insert(key).second) {
          trace.records.push_back(
              FiringRecord{step, event.id, Outcome::SkippedUnique, key, std::nullopt});
          // Control continues without effects, via the unconditional edge.
          auto next = unconditional_.find(event.id);
          if (next == unconditional_.end()) {
            trace.halt = HaltReason::Completed;
            break;
          }
          current = next->second;
          continue;
        }
        last_key_ = key;
      } else {
        last_key_.reset();
      }

      std::optional<bool> guard_value;
      std::optional<std::string> successor;
      bool guarded = yes_.count(event.id) || no_.count(event.id);
      if (guarded) {
        guard_value = next_guard(event.id);
        const auto& branch = *guard_value ? yes_ : no_;
        if (auto it = branch.find(event.id); it != branch.end()) {
          successor = it->second;
        }
      }
      if (!successor) {
        if (auto it = unconditional_.find(event.id); it != unconditional_.end()) {
          successor = it->second;
        }
      }

      trace.records.push_back(
          FiringRecord{step, event.id, Outcome::Executed, last_key_, guard_value});
      apply_effects(event);

      if (!successor) {
        trace.halt = HaltReason::Completed;
        break;
      }
      current = *successor;
    }

    trace.final_tokens = tokens_;
    return trace;
  }

 private:
  void bind() {
    if (!bundle_.events || !bundle_.events->find(scenario_.start)) {
      throw SimulationError("start-missing", "scenario start '" + scenario_.start +
                                                 "' is not a declared event");
    }
    auto require_event = [&](const std::string& id, const char* what) {
      if (!bundle_.events->find(id)) {
        throw SimulationError("unresolved-reference",
                              std::string(what) + " references undeclared event '" +
                                  id + "'");
      }
    };
    for (const auto& [id, values] : scenario_.guards) require_event(id, "guard script");
    for (const auto& [id, keys] : scenario_.unique_keys) require_event(id, "key script");
    for (const auto& [id, path] : scenario_.detaches) {
      require_event(id, "detach mark");
      if (!model_.find_by_path(path)) {
        throw SimulationError("unresolved-reference",
                              "detach part '" + path + "' is not a thimac");
      }
    }
    if (bundle_.behavior) {
      for (const BehaviorEdge& edge : bundle_.behavior->edges) {
        auto& slot = edge.guard == EdgeGuard::Unconditional ? unconditional_
                     : edge.guard == EdgeGuard::Yes         ? yes_
                                                            : no_;
        slot.emplace(edge.from, edge.to);  // first declaration wins
      }
    }
  }

  bool next_guard(const std::string& event) {
    auto it = scenario_.guards.find(event);
    std::size_t& cursor = guard_cursor_[event];
    if (it == scenario_.guards.end() || cursor >= it->second.size()) {
      throw SimulationError("guard-script-exhausted",
                            "no scripted guard value left for event '" + event + "'");
    }
    return it->second[cursor++];
  }

  // Effect order within one firing: creates, scenario detaches, one move per
  // cross-machine flow arc of the region, attaches.
  void apply_effects(const Event& event) {
    for (const ElementRef& ref : event.region) {
      if (ref.kind == ElementRef::Kind::Stage && ref.stage == StageKind::Create &&
          resolves(model_, ref)) {
        tokens_.push_back(Token{next_token_id_++, ref.path, ref.path, std::nullopt});
      }
    }

    if (auto it = scenario_.detaches.find(event.id); it != scenario_.detaches.end()) {
      Token* part = nullptr;
      for (Token& t : tokens_) {
        if (t.type == it->second && t.attached_to) {
          part = &t;
          break;
        }
      }
      if (!part) {
        throw SimulationError("not-attached", "no attached token of type '" +
                                                  it->second + "' to detach at event '" +
                                                  event.id + "'");
      }
      part->attached_to.reset();
    }

    std::set<std::string> region_arcs;
    for (const ElementRef& ref : event.region) {
      if (ref.kind == ElementRef::Kind::Arc) region_arcs.insert(ref.path);
    }
    for (const FlowArc& arc : model_.flows) {
      if (!region_arcs.count(arc.id)) continue;
      if (arc.from.thimac == arc.to.thimac) continue;
      chain_move(arc);
    }

    for (const AttachSpec& attach : event.attaches) apply_attach(attach);
  }

  // A release->transfer->transfer->receive chain collapses to one move per
  // cross-machine arc: the flowing token leaves the source thimac for the
  // receiving one. Attached parts never flow on their own.
  void chain_move(const FlowArc& arc) {
    std::string source = model_.path_of(arc.from.thimac);
    std::string destination = model_.path_of(arc.to.thimac);
    Token* chosen = nullptr;
    bool chosen_matches = false;
    for (Token& t : tokens_) {
      if (t.location != source || t.attached_to) continue;
      bool matches =
          arc.label && normalized(*arc.label) == normalized(last_segment(t.type));
      if (!chosen || (matches && !chosen_matches)) {
        chosen = &t;
        chosen_matches = matches;
      }
    }
    if (chosen) relocate(tokens_, chosen->id, destination);
  }

  void apply_attach(const AttachSpec& attach) {
    Token* part = nullptr;
    for (Token& t : tokens_) {
      if (t.type == attach.part && !t.attached_to) {
        part = &t;
        break;
      }
    }
    Token* whole = nullptr;
    for (Token& t : tokens_) {
      if (t.type == attach.whole && (!part || t.id != part->id)) {
        whole = &t;
        break;
      }
    }
    if (!part || !whole) return;  // nothing to couple yet
    for (std::optional<TokenId> link = whole->attached_to; link;) {
      if (*link == part->id) {
        throw SimulationError("attach-cycle", "attaching '" + attach.part + "' to '" +
                                                  attach.whole + "' would form a cycle");
      }
      Token* next = find_token(tokens_, *link);
      link = next ? next->attached_to : std::nullopt;
    }
    part->attached_to = whole->id;
    relocate(tokens_, part->id, whole->location);
  }

  const ModelBundle& bundle_;
  const StaticModel& model_;
  const Scenario& scenario_;

  std::map<std::string, std::string> unconditional_, yes_, no_;
  std::map<std::string, std::size_t> guard_cursor_, key_cursor_;
  std::map<std::string, std::set<std::string>> executed_keys_;
  std::optional<std::string> last_key_;
  std::vector<Token> tokens_;
  TokenId next_token_id_ = 1;
};

}  // namespace

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Executed: return "executed";
    case Outcome::SkippedUnique: return "skipped-unique";
    case Outcome::HaltedMaxSteps: return "halted-max-steps";
  }
  return "?";
}

const char* to_string(HaltReason reason) {
  switch (reason) {
    case HaltReason::Completed: return "completed";
    case HaltReason::MaxSteps: return "halted-max-steps";
    case HaltReason::UniqueKeysExhausted: return "unique-keys-exhausted";
  }
  return "?";
}

SimulationTrace simulate(const ModelBundle& bundle, const Scenario& scenario) {
  return Run(bundle, scenario).execute();
}

void move_token(const StaticModel& model, std::vector<Token>& tokens, TokenId token,
                const std::string& destination) {
  Token* t = find_token(tokens, token);
  if (!t) throw SimulationError("unknown-token", "no token with that id");
  if (!model.find_by_path(destination)) {
    throw SimulationError("unknown-destination",
                          "destination '" + destination + "' is not a thimac");
  }
  if (t->attached_to) {
    throw SimulationError("token-attached",
                          "an attached part moves only through its whole");
  }
  relocate(tokens, token, destination);
}

void detach_token(std::vector<Token>& tokens, TokenId token) {
  Token* t = find_token(tokens, token);
  if (!t) throw SimulationError("unknown-token", "no token with that id");
  if (!t->attached_to) throw SimulationError("not-attached", "token is not attached");
  t->attached_to.reset();
}

std::string trace_to_json(const SimulationTrace& trace) {
  nlohmann::ordered_json j;
  j["scenario"] = trace.scenario;
  j["halt"] = to_string(trace.halt);
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const FiringRecord& r : trace.records) {
    nlohmann::ordered_json record{
        {"step", r.step}, {"event", r.event}, {"outcome", to_string(r.outcome)}};
    if (r.key) record["key"] = *r.key;
    if (r.guard_value) record["guard"] = *r.guard_value;
    records.push_back(std::move(record));
  }
  j["records"] = std::move(records);
  nlohmann::ordered_json tokens = nlohmann::ordered_json::array();
  for (const Token& t : trace.final_tokens) {
    nlohmann::ordered_json token{
        {"id", t.id}, {"type", t.type}, {"location", t.location}};
    if (t.attached_to) token["attached_to"] = *t.attached_to;
    tokens.push_back(std::move(token));
  }
  j["final_tokens"] = std::move(tokens);
  return j.dump(2) + "\n";
}

std::string trace_to_table(const SimulationTrace& trace) {
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"instance", "entity", "occurrence", "note"});
  std::map<std::string, int> attempts;
  for (const FiringRecord& r : trace.records) {
    int attempt = ++attempts[r.event];
    std::string note;
    if (r.outcome == Outcome::SkippedUnique) {
      note = "Not executed because " + r.key.value_or("?") + " already occurred in " +
             r.event;
    } else if (r.outcome == Outcome::HaltedMaxSteps) {
      note = "Halted: max steps reached";
    }
    rows.push_back({r.key.value_or("-"), r.event,
                    r.event + "_" + std::to_string(attempt), std::move(note)});
  }
  std::array<std::size_t, 4> widths{};
  for (const auto& row : rows) {
    for (int i = 0; i < 4; ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (int i = 0; i < 4; ++i) {
      if (row[i].empty() && i == 3) break;
      if (i > 0) line += "  ";
      line += row[i];
      if (i < 3) line.append(widths[i] - row[i].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace tmtk
