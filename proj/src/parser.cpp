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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lexer.hpp"
#include "tmtk/dsl.hpp"

namespace tmtk {

namespace {

using detail::LexResult;
using detail::TokKind;
using detail::Token;

constexpr std::size_t kMaxParseErrors = 100;

// ---------------------------------------------------------------------------
// Raw (unresolved) statement forms collected in the first pass.

struct RawStageRef {
  std::string path;
  StageKind stage = StageKind::Create;
  SourceSpan span{};
};

struct RawThimac {
  std::string name;
  bool object = false;
  std::vector<std::pair<StageKind, SourceSpan>> stages;
  bool stages_seen = false;
  std::vector<RawThimac> children;
  SourceSpan span{};
};

struct RawArc {
  bool is_flow = true;
  std::optional<std::string> id;
  RawStageRef from;
  RawStageRef to;
  std::optional<std::string> label;
  SourceSpan span{};
};

struct RawRef {
  std::string path;  // may be a single name that denotes an arc id
  std::optional<StageKind> stage;
  SourceSpan span{};
};

struct RawAttach {
  std::string part;
  std::string whole;
  SourceSpan span{};
};

struct RawEvent {
  std::string id;
  bool unique = false;
  bool region_seen = false;
  std::vector<RawRef> region;
  std::vector<RawAttach> attaches;
  SourceSpan span{};
};

struct RawEdge {
  std::string from;
  std::string to;
  EdgeGuard guard = EdgeGuard::Unconditional;
  SourceSpan span{};
};

struct RawBehavior {
  std::vector<RawEdge> edges;
  std::optional<std::string> start;
  SourceSpan start_span{};
  SourceSpan span{};
};

struct RawFile {
  std::optional<std::string> model_name;
  SourceSpan model_span{};
  std::vector<RawThimac> thimacs;
  std::vector<RawArc> arcs;
  std::vector<RawEvent> events;
  std::optional<RawBehavior> behavior;
};

bool is_top_keyword(const Token& tok) {
  if (tok.kind != TokKind::Ident) return false;
  return tok.text == "model" || tok.text == "thimac" || tok.text == "flow" ||
         tok.text == "trigger" || tok.text == "event" || tok.text == "behavior";
}

// ---------------------------------------------------------------------------

class ModelParser {
 public:
  ModelParser(std::vector<Token> tokens, std::vector<ParseError> errors)
      : tokens_(std::move(tokens)), errors_(std::move(errors)) {}

  std::pair<RawFile, std::vector<ParseError>> run() {
    while (!at(TokKind::End)) {
      if (!parse_statement()) sync_to_top();
    }
    return {std::move(file_), std::move(errors_)};
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  bool at(TokKind kind) const { return peek().kind == kind; }

  bool at_keyword(std::string_view word) const {
    return at(TokKind::Ident) && peek().text == word;
  }

  Token take() {
    Token tok = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return tok;
  }

  bool accept(TokKind kind) {
    if (!at(kind)) return false;
    take();
    return true;
  }

  void error(SourceSpan at, const std::string& code, const std::string& message) {
    if (errors_.size() < kMaxParseErrors) errors_.push_back({code, message, at});
  }

  bool expect(TokKind kind, const std::string& what, Token* out = nullptr) {
    if (at(kind)) {
      Token tok = take();
      if (out) *out = tok;
      return true;
    }
    error(peek().span, "syntax-error", "expected " + what);
    return false;
  }

  void sync_to_top() {
    int depth = 0;
    while (!at(TokKind::End)) {
      if (depth == 0 && is_top_keyword(peek())) return;
      TokKind kind = peek().kind;
      if (kind == TokKind::LBrace) ++depth;
      if (kind == TokKind::RBrace && depth > 0) --depth;
      take();
    }
  }

  bool parse_statement() {
    const Token& tok = peek();
    if (tok.kind != TokKind::Ident) {
      error(tok.span, "syntax-error", "expected a statement keyword");
      return false;
    }
    if (tok.text == "model") return parse_model();
    if (tok.text == "thimac") {
      RawThimac thimac;
      if (!parse_thimac(thimac)) return false;
      file_.thimacs.push_back(std::move(thimac));
      return true;
    }
    if (tok.text == "flow" || tok.text == "trigger") return parse_arc(tok.text == "flow");
    if (tok.text == "event") return parse_event();
    if (tok.text == "behavior") return parse_behavior();
    error(tok.span, "syntax-error", "unknown keyword '" + tok.text + "'");
    return false;
  }

  bool parse_model() {
    Token kw = take();
    Token name;
    if (!expect(TokKind::String, "a quoted model name", &name)) return false;
    if (file_.model_name) {
      error(kw.span, "duplicate-declaration", "model name already declared");
      return true;
    }
    file_.model_name = name.text;
    file_.model_span = kw.span;
    return true;
  }

  bool parse_thimac(RawThimac& out) {
    Token kw = take();  // 'thimac'
    out.span = kw.span;
    Token name;
    if (!expect(TokKind::Ident, "a thimac name", &name)) return false;
    out.name = name.text;
    if (at_keyword("object")) {
      take();
      out.object = true;
    }
    if (!expect(TokKind::LBrace, "'{'")) return false;
    while (!at(TokKind::RBrace)) {
      if (at(TokKind::End)) {
        error(kw.span, "syntax-error", "unterminated thimac block");
        return false;
      }
      if (at_keyword("stages")) {
        Token stages_kw = take();
        if (!expect(TokKind::Colon, "':' after stages")) return false;
        if (out.stages_seen) {
          error(stages_kw.span, "duplicate-declaration",
                "stages already declared for '" + out.name + "'");
        }
        out.stages_seen = true;
        do {
          Token stage;
          if (!expect(TokKind::Ident, "a stage keyword", &stage)) return false;
          std::optional<StageKind> kind = stage_from_keyword(stage.text);
          if (!kind) {
            error(stage.span, "syntax-error", "unknown stage '" + stage.text + "'");
            return false;
          }
          out.stages.emplace_back(*kind, stage.span);
        } while (accept(TokKind::Comma));
        continue;
      }
      if (at_keyword("thimac")) {
        RawThimac child;
        if (!parse_thimac(child)) return false;
        out.children.push_back(std::move(child));
        continue;
      }
      error(peek().span, "syntax-error",
            "expected 'stages:', a nested thimac, or '}'");
      return false;
    }
    take();  // '}'
    return true;
  }

  bool parse_stage_path(RawStageRef& out) {
    Token first;
    if (!expect(TokKind::Ident, "a thimac path", &first)) return false;
    out.span = first.span;
    out.path = first.text;
    while (accept(TokKind::Slash)) {
      Token segment;
      if (!expect(TokKind::Ident, "a path segment", &segment)) return false;
      out.path += '/';
      out.path += segment.text;
    }
    if (!expect(TokKind::Dot, "'.' before the stage")) return false;
    Token stage;
    if (!expect(TokKind::Ident, "a stage keyword", &stage)) return false;
    std::optional<StageKind> kind = stage_from_keyword(stage.text);
    if (!kind) {
      error(stage.span, "syntax-error", "unknown stage '" + stage.text + "'");
      return false;
    }
    out.stage = *kind;
    return true;
  }

  bool parse_arc(bool is_flow) {
    Token kw = take();
    RawArc arc;
    arc.is_flow = is_flow;
    arc.span = kw.span;
    if (at(TokKind::Ident) && peek(1).kind == TokKind::Colon) {
      arc.id = take().text;
      take();  // ':'
    }
    if (!parse_stage_path(arc.from)) return false;
    TokKind arrow = is_flow ? TokKind::Arrow : TokKind::FatArrow;
    if (!expect(arrow, is_flow ? "'->'" : "'=>'")) return false;
    if (!parse_stage_path(arc.to)) return false;
    if (at_keyword("label")) {
      take();
      Token label;
      if (!expect(TokKind::String, "a quoted label", &label)) return false;
      arc.label = label.text;
    }
    file_.arcs.push_back(std::move(arc));
    return true;
  }

  bool parse_ref(RawRef& out) {
    Token first;
    if (!expect(TokKind::Ident, "an element reference", &first)) return false;
    out.span = first.span;
    out.path = first.text;
    while (accept(TokKind::Slash)) {
      Token segment;
      if (!expect(TokKind::Ident, "a path segment", &segment)) return false;
      out.path += '/';
      out.path += segment.text;
    }
    if (accept(TokKind::Dot)) {
      Token stage;
      if (!expect(TokKind::Ident, "a stage keyword", &stage)) return false;
      std::optional<StageKind> kind = stage_from_keyword(stage.text);
      if (!kind) {
        error(stage.span, "syntax-error", "unknown stage '" + stage.text + "'");
        return false;
      }
      out.stage = *kind;
    }
    return true;
  }

  bool parse_path(std::string& out, SourceSpan& span) {
    Token first;
    if (!expect(TokKind::Ident, "a thimac path", &first)) return false;
    span = first.span;
    out = first.text;
    while (accept(TokKind::Slash)) {
      Token segment;
      if (!expect(TokKind::Ident, "a path segment", &segment)) return false;
      out += '/';
      out += segment.text;
    }
    return true;
  }

  bool parse_event() {
    Token kw = take();
    RawEvent event;
    Token id;
    if (!expect(TokKind::Ident, "an event id", &id)) return false;
    event.id = id.text;
    event.span = id.span;
    if (at_keyword("unique")) {
      take();
      event.unique = true;
    }
    if (!expect(TokKind::LBrace, "'{'")) return false;
    while (!at(TokKind::RBrace)) {
      if (at(TokKind::End)) {
        error(kw.span, "syntax-error", "unterminated event block");
        return false;
      }
      if (at_keyword("region")) {
        Token region_kw = take();
        if (!expect(TokKind::Colon, "':' after region")) return false;
        if (event.region_seen) {
          error(region_kw.span, "duplicate-declaration",
                "region already declared for event '" + event.id + "'");
        }
        event.region_seen = true;
        do {
          RawRef ref;
          if (!parse_ref(ref)) return false;
          event.region.push_back(std::move(ref));
        } while (accept(TokKind::Comma));
        continue;
      }
      if (at_keyword("attach")) {
        take();
        RawAttach attach;
        if (!parse_path(attach.part, attach.span)) return false;
        if (!expect(TokKind::Arrow, "'->' between part and whole")) return false;
        SourceSpan ignored;
        if (!parse_path(attach.whole, ignored)) return false;
        event.attaches.push_back(std::move(attach));
        continue;
      }
      error(peek().span, "syntax-error", "expected 'region:', 'attach', or '}'");
      return false;
    }
    take();  // '}'
    file_.events.push_back(std::move(event));
    return true;
  }

  bool parse_behavior() {
    Token kw = take();
    if (file_.behavior) {
      error(kw.span, "duplicate-declaration", "behavior already declared");
    }
    RawBehavior behavior;
    behavior.span = kw.span;
    if (!expect(TokKind::LBrace, "'{'")) return false;
    while (!at(TokKind::RBrace)) {
      if (at(TokKind::End)) {
        error(kw.span, "syntax-error", "unterminated behavior block");
        return false;
      }
      if (at_keyword("start")) {
        Token start_kw = take();
        Token id;
        if (!expect(TokKind::Ident, "an event id after start", &id)) return false;
        if (behavior.start) {
          error(start_kw.span, "duplicate-declaration", "start already declared");
        } else {
          behavior.start = id.text;
          behavior.start_span = id.span;
        }
        continue;
      }
      RawEdge edge;
      Token from;
      if (!expect(TokKind::Ident, "an event id", &from)) return false;
      edge.from = from.text;
      edge.span = from.span;
      if (accept(TokKind::Arrow)) {
        edge.guard = EdgeGuard::Unconditional;
      } else if (accept(TokKind::GuardOpen)) {
        Token guard;
        if (!expect(TokKind::Ident, "'yes' or 'no'", &guard)) return false;
        if (guard.text == "yes") {
          edge.guard = EdgeGuard::Yes;
        } else if (guard.text == "no") {
          edge.guard = EdgeGuard::No;
        } else {
          error(guard.span, "syntax-error", "guard must be 'yes' or 'no'");
          return false;
        }
        if (!expect(TokKind::GuardClose, "']->'")) return false;
      } else {
        error(peek().span, "syntax-error", "expected '->' or '-[' in behavior edge");
        return false;
      }
      Token to;
      if (!expect(TokKind::Ident, "a target event id", &to)) return false;
      edge.to = to.text;
      behavior.edges.push_back(std::move(edge));
    }
    take();  // '}'
    if (!file_.behavior) file_.behavior = std::move(behavior);
    return true;
  }

  std::vector<Token> tokens_;
  std::vector<ParseError> errors_;
  std::size_t pos_ = 0;
  RawFile file_;
};

// ---------------------------------------------------------------------------
// Second pass: name resolution and bundle construction.

class Builder {
 public:
  explicit Builder(const RawFile& file) : file_(file) {}

  std::pair<std::optional<ModelBundle>, std::vector<ParseError>> run() {
    ModelBundle bundle;
    if (file_.model_name) {
      bundle.static_model.name = *file_.model_name;
    } else {
      error({1, 1}, "syntax-error", "missing model declaration");
    }
    for (const RawThimac& raw : file_.thimacs) {
      build_thimac(bundle.static_model, raw, std::nullopt);
    }
    build_arcs(bundle.static_model);
    build_events(bundle);
    build_behavior(bundle);
    if (!errors_.empty()) return {std::nullopt, std::move(errors_)};
    return {std::move(bundle), {}};
  }

 private:
  void error(SourceSpan at, const std::string& code, const std::string& message) {
    if (errors_.size() < kMaxParseErrors) errors_.push_back({code, message, at});
  }

  void build_thimac(StaticModel& model, const RawThimac& raw,
                    std::optional<ThimacId> parent) {
    ThimacId id;
    try {
      id = model.add_thimac(raw.name, parent,
                            raw.object ? ThimacKind::Object : ThimacKind::Generic);
    } catch (const ModelError& e) {
      error(raw.span, "duplicate-declaration", e.what());
      return;
    }
    for (const auto& [kind, span] : raw.stages) {
      try {
        model.add_stage(id, kind);
      } catch (const ModelError& e) {
        error(span, "duplicate-declaration", e.what());
      }
    }
    for (const RawThimac& child : raw.children) build_thimac(model, child, id);
  }

  std::optional<StageRef> resolve(const StaticModel& model, const RawStageRef& raw) {
    std::optional<ThimacId> id = model.find_by_path(raw.path);
    if (!id || !model.thimacs[*id].stages.contains(raw.stage)) {
      error(raw.span, "unresolved-reference",
            "'" + raw.path + "." + to_keyword(raw.stage) + "' does not resolve");
      return std::nullopt;
    }
    return StageRef{*id, raw.stage};
  }

  void build_arcs(StaticModel& model) {
    int flow_count = 0;
    int trigger_count = 0;
    for (const RawArc& raw : file_.arcs) {
      int ordinal = raw.is_flow ? ++flow_count : ++trigger_count;
      std::optional<StageRef> from = resolve(model, raw.from);
      std::optional<StageRef> to = resolve(model, raw.to);
      if (!from || !to) continue;
      std::string id =
          raw.id ? *raw.id : (raw.is_flow ? "f" : "t") + std::to_string(ordinal);
      if (model.arc_id_taken(id)) {
        error(raw.span, "duplicate-declaration", "arc id '" + id + "' already used");
        continue;
      }
      // Self-loops and stage-adjacency legality are the validator's job.
      if (raw.is_flow) {
        model.flows.push_back(FlowArc{id, *from, *to, raw.label});
      } else {
        model.triggers.push_back(TriggerArc{id, *from, *to, raw.label});
      }
    }
  }

  void build_events(ModelBundle& bundle) {
    if (file_.events.empty()) return;
    EventsModel events;
    std::set<std::string> ids;
    for (const RawEvent& raw : file_.events) {
      if (!ids.insert(raw.id).second) {
        error(raw.span, "duplicate-declaration",
              "event '" + raw.id + "' already declared");
        continue;
      }
      Event event;
      event.id = raw.id;
      event.unique = raw.unique;
      event.span = raw.span;
      for (const RawRef& ref : raw.region) {
        event.region.push_back(resolve_ref(bundle.static_model, ref));
      }
      for (const RawAttach& attach : raw.attaches) {
        for (const std::string& path : {attach.part, attach.whole}) {
          if (!bundle.static_model.find_by_path(path)) {
            error(attach.span, "unresolved-reference",
                  "attach path '" + path + "' does not resolve");
          }
        }
        event.attaches.push_back(AttachSpec{attach.part, attach.whole});
      }
      events.events.push_back(std::move(event));
    }
    bundle.events = std::move(events);
  }

  ElementRef resolve_ref(const StaticModel& model, const RawRef& raw) {
    if (raw.stage) {
      ElementRef ref = ElementRef::stage_of(raw.path, *raw.stage);
      if (!resolves(model, ref)) {
        error(raw.span, "unresolved-reference",
              "'" + ref.to_string() + "' does not resolve");
      }
      return ref;
    }
    // A bare single name that matches an arc id denotes the arc.
    if (raw.path.find('/') == std::string::npos && model.arc_id_taken(raw.path)) {
      return ElementRef::arc(raw.path);
    }
    ElementRef ref = ElementRef::thimac(raw.path);
    if (!resolves(model, ref)) {
      error(raw.span, "unresolved-reference",
            "'" + raw.path + "' names neither a thimac nor an arc");
    }
    return ref;
  }

  void build_behavior(ModelBundle& bundle) {
    if (!file_.behavior) return;
    const RawBehavior& raw = *file_.behavior;
    BehaviorModel behavior;
    auto declared = [&](const std::string& id) {
      return bundle.events && bundle.events->find(id) != nullptr;
    };
    std::map<std::pair<std::string, EdgeGuard>, int> slots;
    for (const RawEdge& edge : raw.edges) {
      for (const std::string& end : {edge.from, edge.to}) {
        if (!declared(end)) {
          error(edge.span, "unresolved-reference",
                "behavior edge references undeclared event '" + end + "'");
        }
      }
      if (++slots[{edge.from, edge.guard}] > 1) {
        const char* slot = edge.guard == EdgeGuard::Unconditional ? "an unconditional"
                           : edge.guard == EdgeGuard::Yes         ? "a yes-guarded"
                                                                  : "a no-guarded";
        error(edge.span, "duplicate-declaration",
              "event '" + edge.from + "' already has " + slot + " successor");
        continue;
      }
      behavior.edges.push_back(BehaviorEdge{edge.from, edge.to, edge.guard});
    }
    if (raw.start) {
      if (!declared(*raw.start)) {
        error(raw.start_span, "unresolved-reference",
              "behavior start references undeclared event '" + *raw.start + "'");
      }
      behavior.start = raw.start;
    }
    bundle.behavior = std::move(behavior);
  }

  const RawFile& file_;
  std::vector<ParseError> errors_;
};

}  // namespace

ParseResult parse(std::string_view text) {
  LexResult lexed = detail::lex(text);
  ModelParser parser(std::move(lexed.tokens), std::move(lexed.errors));
  auto [file, errors] = parser.run();
  if (!errors.empty()) return {std::nullopt, std::move(errors)};
  auto [bundle, build_errors] = Builder(file).run();
  return {std::move(bundle), std::move(build_errors)};
}

// ---------------------------------------------------------------------------
// Scenario files.

namespace {

class ScenarioParser {
 public:
  ScenarioParser(std::vector<Token> tokens, std::vector<ParseError> errors)
      : tokens_(std::move(tokens)), errors_(std::move(errors)) {}

  ScenarioParseResult run() {
    Scenario scenario;
    if (at_keyword("scenario")) {
      take();
      Token name;
      if (expect(TokKind::String, "a quoted scenario name", &name)) {
        scenario.name = name.text;
      }
    } else {
      error(peek().span, "syntax-error", "expected 'scenario \"<name>\"'");
    }

    bool start_seen = false;
    bool max_steps_seen = false;
    while (!at(TokKind::End) && errors_.size() < kMaxParseErrors) {
      Token tok = peek();
      if (tok.kind != TokKind::Ident) {
        error(tok.span, "syntax-error", "expected a scenario statement");
        take();
        continue;
      }
      if (tok.text == "start") {
        take();
        Token id;
        if (!expect(TokKind::Ident, "an event id after start", &id)) continue;
        if (start_seen) {
          error(tok.span, "duplicate-declaration", "start already declared");
        } else {
          scenario.start = id.text;
          start_seen = true;
        }
      } else if (tok.text == "max_steps") {
        take();
        Token number;
        if (!expect(TokKind::Number, "a positive integer", &number)) continue;
        if (max_steps_seen) {
          error(tok.span, "duplicate-declaration", "max_steps already declared");
          continue;
        }
        max_steps_seen = true;
        long value = 0;
        for (char c : number.text) {
          value = value * 10 + (c - '0');
          if (value > 1000000000L) break;
        }
        if (value < 1 || value > 1000000000L) {
          error(number.span, "syntax-error", "max_steps must be in [1, 10^9]");
        } else {
          scenario.max_steps = static_cast<int>(value);
        }
      } else if (tok.text == "guard") {
        take();
        Token id;
        if (!expect(TokKind::Ident, "an event id after guard", &id)) continue;
        if (!expect(TokKind::Colon, "':' after the event id")) continue;
        if (scenario.guards.count(id.text)) {
          error(tok.span, "duplicate-declaration",
                "guards for '" + id.text + "' already declared");
        }
        std::vector<bool> values;
        bool ok = true;
        do {
          Token value;
          if (!expect(TokKind::Ident, "'yes' or 'no'", &value)) {
            ok = false;
            break;
          }
          if (value.text == "yes") {
            values.push_back(true);
          } else if (value.text == "no") {
            values.push_back(false);
          } else {
            error(value.span, "syntax-error", "guard value must be 'yes' or 'no'");
            ok = false;
            break;
          }
        } while (accept(TokKind::Comma));
        if (ok) scenario.guards.emplace(id.text, std::move(values));
      } else if (tok.text == "keys") {
        take();
        Token id;
        if (!expect(TokKind::Ident, "an event id after keys", &id)) continue;
        if (!expect(TokKind::Colon, "':' after the event id")) continue;
        if (scenario.unique_keys.count(id.text)) {
          error(tok.span, "duplicate-declaration",
                "keys for '" + id.text + "' already declared");
        }
        std::vector<std::string> keys;
        bool ok = true;
        do {
          Token key = peek();
          if (key.kind == TokKind::Ident || key.kind == TokKind::Number ||
              key.kind == TokKind::String) {
            keys.push_back(take().text);
          } else {
            error(key.span, "syntax-error", "expected a key");
            ok = false;
            break;
          }
        } while (accept(TokKind::Comma));
        if (ok) scenario.unique_keys.emplace(id.text, std::move(keys));
      } else if (tok.text == "detach") {
        take();
        Token id;
        if (!expect(TokKind::Ident, "an event id after detach", &id)) continue;
        if (!expect(TokKind::Colon, "':' after the event id")) continue;
        std::string path;
        if (!parse_path(path)) continue;
        if (scenario.detaches.count(id.text)) {
          error(tok.span, "duplicate-declaration",
                "detach for '" + id.text + "' already declared");
        } else {
          scenario.detaches.emplace(id.text, std::move(path));
        }
      } else {
        error(tok.span, "syntax-error", "unknown scenario keyword '" + tok.text + "'");
        take();
      }
    }

    if (!start_seen) {
      error(peek().span, "syntax-error", "scenario must declare a start event");
    }
    if (!errors_.empty()) return {std::nullopt, std::move(errors_)};
    return {std::move(scenario), {}};
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at(TokKind kind) const { return peek().kind == kind; }
  bool at_keyword(std::string_view word) const {
    return at(TokKind::Ident) && peek().text == word;
  }
  Token take() {
    Token tok = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return tok;
  }
  bool accept(TokKind kind) {
    if (!at(kind)) return false;
    take();
    return true;
  }
  void error(SourceSpan at, const std::string& code, const std::string& message) {
    if (errors_.size() < kMaxParseErrors) errors_.push_back({code, message, at});
  }
  bool expect(TokKind kind, const std::string& what, Token* out = nullptr) {
    if (at(kind)) {
      Token tok = take();
      if (out) *out = tok;
      return true;
    }
    error(peek().span, "syntax-error", "expected " + what);
    return false;
  }
  bool parse_path(std::string& out) {
    Token first;
    if (!expect(TokKind::Ident, "a thimac path", &first)) return false;
    out = first.text;
    while (accept(TokKind::Slash)) {
      Token segment;
      if (!expect(TokKind::Ident, "a path segment", &segment)) return false;
      out += '/';
      out += segment.text;
    }
    return true;
  }

  std::vector<Token> tokens_;
  std::vector<ParseError> errors_;
  std::size_t pos_ = 0;
};

}  // namespace

ScenarioParseResult parse_scenario(std::string_view text) {
  LexResult lexed = detail::lex(text);
  return ScenarioParser(std::move(lexed.tokens), std::move(lexed.errors)).run();
}

}  // namespace tmtk
