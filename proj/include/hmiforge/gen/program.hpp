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

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hmiforge/core/diagnostic.hpp"
#include "hmiforge/gen/manifest.hpp"
#include "hmiforge/menu/menu_model.hpp"

namespace hmiforge {

inline constexpr std::string_view kProgramFormatVersion = "1";

struct ProgramTarget {
  TargetKind kind = TargetKind::back;
  std::string name;

  friend bool operator==(const ProgramTarget&, const ProgramTarget&) = default;
};

struct ProgramEntry {
  std::string label;
  ProgramTarget target;

  friend bool operator==(const ProgramEntry&, const ProgramEntry&) = default;
};

struct ProgramStatus {
  std::string statusbox;

  friend bool operator==(const ProgramStatus&, const ProgramStatus&) = default;
};

using ScreenItem = std::variant<ProgramEntry, ProgramStatus>;

/// A menu after pruning: no presence conditions, every target resolved.
struct Screen {
  std::string name;
  std::vector<ScreenItem> items;

  /// Selectable items in order (status lines excluded).
  std::vector<const ProgramEntry*> entries() const;

  friend bool operator==(const Screen&, const Screen&) = default;
};

struct ProgramButton {
  std::string label;
  ProgramTarget target;

  friend bool operator==(const ProgramButton&, const ProgramButton&) = default;
};

struct ProgramDialog {
  std::string name;
  std::string text;
  std::vector<ProgramButton> buttons;

  friend bool operator==(const ProgramDialog&, const ProgramDialog&) = default;
};

struct ProgramStatusBox {
  std::string name;
  std::string label;
  std::string init;

  friend bool operator==(const ProgramStatusBox&, const ProgramStatusBox&) = default;
};

/// The generated artifact: the HMI library's configuration for one product
/// variant. Closed-world: every reference resolves inside the program.
struct HmiProgram {
  std::string name;
  std::vector<std::string> configuration;  // sorted
  std::string start;
  std::map<std::string, Screen> screens;
  std::map<std::string, ProgramDialog> dialogs;
  std::map<std::string, ProgramStatusBox> statusboxes;
  std::map<std::string, std::vector<Effect>> bindings;

  friend bool operator==(const HmiProgram&, const HmiProgram&) = default;
};

/// E_BAD_PROGRAM for each broken program invariant (unknown start, dangling
/// target, unbound action, screen without entries, dialog without buttons,
/// unknown status box).
Diagnostics validate_program(const HmiProgram& program);

nlohmann::json to_json(const ProgramTarget& target);
nlohmann::json to_json(const Effect& effect);
nlohmann::json to_json(const HmiProgram& program);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string emit_program(const HmiProgram& program);

/// Inverse of to_json. Throws DiagnosticError(E_BAD_PROGRAM) on malformed
/// input; does not run validate_program.
HmiProgram program_from_json(const nlohmann::json& json);
HmiProgram parse_program(std::string_view text);

}  // namespace hmiforge
