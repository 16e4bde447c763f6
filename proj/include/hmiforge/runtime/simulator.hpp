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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hmiforge/gen/program.hpp"

namespace hmiforge {

/// The four keys of the simulated HMI.
enum class InputEvent { up, down, select, back };

std::string_view to_string(InputEvent event);
std::optional<InputEvent> parse_event(std::string_view keyword);

/// One event keyword per line; blank lines are skipped. On an unknown
/// keyword returns nullopt and sets `bad_line` (1-based).
std::optional<std::vector<InputEvent>> parse_trace(std::string_view text, std::size_t* bad_line);

enum class Mode { menu, dialog };

struct SimState {
  std::vector<std::string> nav_stack;  // bottom is the start screen
  std::size_t cursor = 0;              // index into the top screen's entries
  Mode mode = Mode::menu;
  std::optional<std::string> active_dialog;
  std::size_t dialog_cursor = 0;
  std::map<std::string, std::string> status;
  std::size_t step_count = 0;

  const std::string& screen() const { return nav_stack.back(); }

  friend bool operator==(const SimState&, const SimState&) = default;
};

struct StepOutcome {
  SimState state;
  std::vector<Effect> effects;  // non-empty only when an action fired
  std::string transition;       // e.g. `pushed:Settings`, `cursor:1`, `noop`
};

struct ViewLine {
  enum class Kind { entry, status };

  std::string text;
  Kind kind = Kind::entry;
  bool highlighted = false;

  friend bool operator==(const ViewLine&, const ViewLine&) = default;
};

struct ViewButton {
  std::string label;
  bool highlighted = false;

  friend bool operator==(const ViewButton&, const ViewButton&) = default;
};

struct DialogView {
  std::string text;
  std::vector<ViewButton> buttons;

  friend bool operator==(const DialogView&, const DialogView&) = default;
};

struct ViewModel {
  std::string title;
  std::vector<ViewLine> lines;
  std::optional<DialogView> dialog;
  std::vector<std::string> config;

  friend bool operator==(const ViewModel&, const ViewModel&) = default;
};

/// Fresh session: start screen, cursor 0, menu mode, status boxes at their
/// initial values. Throws DiagnosticError(E_BAD_PROGRAM) if the program
/// breaks its invariants.
SimState init_session(const HmiProgram& program);

/// One deterministic transition. Menu mode: up/down wrap over the entries,
/// select fires the highlighted entry's target, back pops (no-op at the
/// bottom). Dialog mode: up/down cycle the buttons, back closes the dialog,
/// select fires the button's target after closing the dialog (a dialog
/// target replaces the dialog instead). step_count always grows by one.
StepOutcome step(const SimState& state, InputEvent event, const HmiProgram& program);

struct TraceRun {
  SimState final_state;
  std::vector<StepOutcome> transcript;
};

TraceRun run_trace(const HmiProgram& program, std::span<const InputEvent> trace);

ViewModel render_view(const SimState& state, const HmiProgram& program);

/// Invariant violations of `state` with respect to `program`; empty when
/// the state is valid.
std::vector<std::string> state_violations(const SimState& state, const HmiProgram& program);

nlohmann::json to_json(const ViewModel& view);
nlohmann::json to_json(const SimState& state);

}  // namespace hmiforge
