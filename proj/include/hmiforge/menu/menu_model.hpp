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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hmiforge/core/diagnostic.hpp"
#include "hmiforge/core/traverse.hpp"
#include "hmiforge/feature/feature_expr.hpp"

namespace hmiforge {

enum class TargetKind { menu, dialog, action, back };

std::string_view keyword(TargetKind kind);

struct Target {
  TargetKind kind = TargetKind::back;
  std::string name;  // empty for back
  SourceSpan span;

  /// `menu Settings`, `action reset`, `back`
  std::string to_string() const;
};

struct Entry {
  std::string label;
  std::optional<FeatureExpr> presence;
  Target target;
  SourceSpan span;
};

/// `show <statusbox>` placement inside a menu.
struct StatusRef {
  std::string statusbox;
  SourceSpan span;
};

using MenuItem = std::variant<Entry, StatusRef>;

struct Menu {
  std::string name;
  std::optional<FeatureExpr> presence;
  std::vector<MenuItem> items;
  SourceSpan name_span;
  SourceSpan span;

  std::size_t entry_count() const;
};

struct Button {
  std::string label;
  Target target;
  SourceSpan span;
};

struct Dialog {
  std::string name;
  std::optional<FeatureExpr> presence;
  std::string text;
  std::vector<Button> buttons;
  SourceSpan name_span;
  SourceSpan span;
};

struct StatusBox {
  std::string name;
  std::string label;
  std::string init;
  SourceSpan name_span;
  SourceSpan span;
};

/// A menu diagram. Element names are unique across menus, dialogs and status
/// boxes; each kind keeps declaration order.
struct HmiModel {
  std::string name;
  std::string for_model;
  std::string start;
  SourceSpan start_span;
  std::vector<Menu> menus;
  std::vector<Dialog> dialogs;
  std::vector<StatusBox> statusboxes;
  SourceSpan span;

  const Menu* find_menu(std::string_view name) const;
  const Dialog* find_dialog(std::string_view name) const;
  const StatusBox* find_statusbox(std::string_view name) const;
};

Parsed<HmiModel> parse_hmi_model(std::string_view text, const std::string& file = "<hmi>");

/// Intra-model context conditions: E_UNRESOLVED_TARGET for menu, dialog and
/// status-box references without a declaration, W_UNREACHABLE for menus and
/// dialogs other than start that no entry or button targets (presence
/// conditions ignored).
/// Action targets are left to cross_check.
Diagnostics check_hmi_model(const HmiModel& hm);

/// Canonical text: one item per line, two-space indentation; menus, then
/// dialogs, then status boxes, each in declaration order.
std::string pretty_print(const HmiModel& hm);

bool same_structure(const HmiModel& a, const HmiModel& b);

/// model -> elements (source order) -> items/buttons.
SyntaxNode syntax_tree(const HmiModel& hm);

}  // namespace hmiforge
