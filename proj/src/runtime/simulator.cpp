// Copyright 2026 The hmiforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hmiforge/runtime/simulator.hpp"

#include <algorithm>

namespace hmiforge {

std::string_view to_string(InputEvent event) {
  switch (event) {
    case InputEvent::up:
      return "up";
    case InputEvent::down:
      return "down";
    case InputEvent::select:
      return "select";
    case InputEvent::back:
      return "back";
  }
  return "back";
}

std::optional<InputEvent> parse_event(std::string_view keyword) {
  for (InputEvent e : {InputEvent::up, InputEvent::down, InputEvent::select, InputEvent::back}) {
    if (to_string(e) == keyword) return e;
  }
  return std::nullopt;
}

std::optional<std::vector<InputEvent>> parse_trace(std::string_view text, std::size_t* bad_line) {
  std::vector<InputEvent> events;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    auto event = parse_event(line);
    if (!event) {
      if (bad_line) *bad_line = line_no;
      return std::nullopt;
    }
    events.push_back(*event);
  }
  return events;
}

SimState init_session(const HmiProgram& program) {
  Diagnostics problems = validate_program(program);
  if (!problems.empty()) {
    Diagnostic d = make_error(codes::kBadProgram,
                              "program '" + program.name + "' violates its invariants: " +
                                  problems.front().message);
    d.related = std::move(problems);
    throw DiagnosticError(std::move(d));
  }
  SimState s;
  s.nav_stack.push_back(program.start);
  for (const auto& [name, box] : program.statusboxes) s.status[name] = box.init;
  return s;
}

namespace {

// Applies a target fired from menu mode (or from a dialog already closed).
std::string fire(SimState& s, const ProgramTarget& target, const HmiProgram& program,
                 std::vector<Effect>& effects) {
  switch (target.kind) {
    case TargetKind::menu:
      s.nav_stack.push_back(target.name);
      s.cursor = 0;
      return "pushed:" + target.name;
    case TargetKind::dialog:
      s.mode = Mode::dialog;
      s.active_dialog = target.name;
      s.dialog_cursor = 0;
      return "opened:" + target.name;
    case TargetKind::action: {
      const auto& bound = program.bindings.at(target.name);
      for (const auto& e : bound) {
        s.status[e.statusbox] = e.value;
        effects.push_back(e);
      }
      return "action:" + target.name;
    }
    case TargetKind::back:
      if (s.nav_stack.size() <= 1) return "noop";
      {
        std::string popped = s.nav_stack.back();
        s.nav_stack.pop_back();
        s.cursor = 0;
        return "popped:" + popped;
      }
  }
  return "noop";
}

std::size_t wrap(std::size_t index, std::size_t size, InputEvent dir) {
  return dir == InputEvent::down ? (index + 1) % size : (index + size - 1) % size;
}

}  // namespace

StepOutcome step(const SimState& state, InputEvent event, const HmiProgram& program) {
  StepOutcome out{state, {}, "noop"};
  SimState& s = out.state;
  ++s.step_count;

  if (s.mode == Mode::menu) {
    const auto entries = program.screens.at(s.screen()).entries();
    switch (event) {
      case InputEvent::up:
      case InputEvent::down:
        s.cursor = wrap(s.cursor, entries.size(), event);
        out.transition = "cursor:" + std::to_string(s.cursor);
        break;
      case InputEvent::select:
        out.transition = fire(s, entries[s.cursor]->target, program, out.effects);
        break;
      case InputEvent::back:
        out.transition = fire(s, ProgramTarget{TargetKind::back, {}}, program, out.effects);
        break;
    }
    return out;
  }

  const std::string dialog_name = *s.active_dialog;
  const ProgramDialog& dialog = program.dialogs.at(dialog_name);
  auto close = [&] {
    s.mode = Mode::menu;
    s.active_dialog.reset();
    s.dialog_cursor = 0;
  };
  switch (event) {
    case InputEvent::up:
    case InputEvent::down:
      s.dialog_cursor = wrap(s.dialog_cursor, dialog.buttons.size(), event);
      out.transition = "button:" + std::to_string(s.dialog_cursor);
      break;
    case InputEvent::back:
      close();
      out.transition = "closed:" + dialog_name;
      break;
    case InputEvent::select: {
      const ProgramTarget& target = dialog.buttons[s.dialog_cursor].target;
      close();
      out.transition = "closed:" + dialog_name + "+" + fire(s, target, program, out.effects);
      break;
    }
  }
  return out;
}

TraceRun run_trace(const HmiProgram& program, std::span<const InputEvent> trace) {
  TraceRun run{init_session(program), {}};
  run.transcript.reserve(trace.size());
  for (InputEvent e : trace) {
    StepOutcome o = step(run.final_state, e, program);
    run.final_state = o.state;
    run.transcript.push_back(std::move(o));
  }
  return run;
}

ViewModel render_view(const SimState& state, const HmiProgram& program) {
  ViewModel view;
  view.title = state.screen();
  view.config = program.configuration;
  const Screen& screen = program.screens.at(state.screen());
  std::size_t entry_index = 0;
  for (const auto& item : screen.items) {
    if (const auto* e = std::get_if<ProgramEntry>(&item)) {
      const bool here = state.mode == Mode::menu && entry_index == state.cursor;
      view.lines.push_back(ViewLine{e->label, ViewLine::Kind::entry, here});
      ++entry_index;
    } else {
      const std::string& box = std::get<ProgramStatus>(item).statusbox;
      view.lines.push_back(ViewLine{program.statusboxes.at(box).label + ": " + state.status.at(box),
                                    ViewLine::Kind::status, false});
    }
  }
  if (state.mode == Mode::dialog) {
    const ProgramDialog& d = program.dialogs.at(*state.active_dialog);
    DialogView dv{d.text, {}};
    for (std::size_t i = 0; i < d.buttons.size(); ++i) {
      dv.buttons.push_back(ViewButton{d.buttons[i].label, i == state.dialog_cursor});
    }
    view.dialog = std::move(dv);
  }
  return view;
}

std::vector<std::string> state_violations(const SimState& s, const HmiProgram& program) {
  std::vector<std::string> v;
  if (s.nav_stack.empty()) {
    v.push_back("navigation stack is empty");
    return v;
  }
  if (s.nav_stack.front() != program.start) v.push_back("stack bottom is not the start screen");
  for (const auto& name : s.nav_stack) {
    if (!program.screens.count(name)) v.push_back("stack holds unknown screen '" + name + "'");
  }
  if (auto it = program.screens.find(s.screen()); it != program.screens.end()) {
    if (s.cursor >= it->second.entries().size()) v.push_back("cursor past the last entry");
  }
  if ((s.mode == Mode::dialog) != s.active_dialog.has_value()) {
    v.push_back("dialog mode and active dialog disagree");
  }
  if (s.active_dialog) {
    auto it = program.dialogs.find(*s.active_dialog);
    if (it == program.dialogs.end()) {
      v.push_back("active dialog '" + *s.active_dialog + "' is unknown");
    } else if (s.dialog_cursor >= it->second.buttons.size()) {
      v.push_back("dialog cursor past the last button");
    }
  }
  bool keys_match = s.status.size() == program.statusboxes.size();
  for (const auto& [name, value] : s.status) keys_match = keys_match && program.statusboxes.count(name);
  if (!keys_match) v.push_back("status keys differ from the program's status boxes");
  return v;
}

nlohmann::json to_json(const ViewModel& view) {
  auto lines = nlohmann::json::array();
  for (const auto& l : view.lines) {
    lines.push_back({{"text", l.text},
                     {"kind", l.kind == ViewLine::Kind::entry ? "entry" : "status"},
                     {"highlighted", l.highlighted}});
  }
  nlohmann::json dialog = nullptr;
  if (view.dialog) {
    auto buttons = nlohmann::json::array();
    for (const auto& b : view.dialog->buttons) {
      buttons.push_back({{"label", b.label}, {"highlighted", b.highlighted}});
    }
    dialog = {{"text", view.dialog->text}, {"buttons", std::move(buttons)}};
  }
  return {{"title", view.title},
          {"lines", std::move(lines)},
          {"dialog", std::move(dialog)},
          {"config", view.config}};
}

nlohmann::json to_json(const SimState& s) {
  return {{"navStack", s.nav_stack},
          {"cursor", s.cursor},
          {"mode", s.mode == Mode::menu ? "menu" : "dialog"},
          {"activeDialog", s.active_dialog ? nlohmann::json(*s.active_dialog) : nlohmann::json()},
          {"dialogCursor", s.dialog_cursor},
          {"status", s.status},
          {"stepCount", s.step_count}};
}

}  // namespace hmiforge
