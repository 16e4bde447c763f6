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

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hmiforge/core/diagnostic.hpp"
#include "hmiforge/feature/configuration.hpp"
#include "hmiforge/feature/feature_model.hpp"
#include "hmiforge/menu/menu_model.hpp"

namespace hmiforge {

/// Identity of a prunable element of a menu model: a menu, a dialog, or the
/// n-th entry (0-based, status lines not counted) of a menu.
struct ElementRef {
  enum class Kind { menu, dialog, entry };

  Kind kind = Kind::menu;
  std::string name;       // menu or dialog name; owning menu for entries
  std::size_t index = 0;  // entries only

  std::string to_string() const;  // `menu:Main`, `dialog:About`, `entry:Main#2`

  friend auto operator<=>(const ElementRef&, const ElementRef&) = default;
};

enum class PruneReason {
  presence,     // its own presence condition is false
  unreachable,  // survived its condition but the start menu no longer reaches it
  container,    // entry of a menu removed for one of the reasons above
};

struct PrunedElement {
  ElementRef element;
  PruneReason reason = PruneReason::presence;
};

struct PruneResult {
  std::optional<HmiModel> model;  // presence conditions stripped
  Diagnostics diagnostics;        // errors abort; warnings accompany a model
  std::vector<ElementRef> kept;
  std::vector<PrunedElement> pruned;
};

/// Every menu, dialog and entry of the model in declaration order.
std::vector<ElementRef> elements_of(const HmiModel& hm);

/// Presence condition attached to the referenced element, if any.
const std::optional<FeatureExpr>* presence_of(const HmiModel& hm, const ElementRef& ref);

/// Configuration-driven pruning. Expects a cross-checked model and a valid
/// configuration. Removes elements whose presence condition is false and
/// strips the conditions from the survivors. A surviving entry or button
/// aiming at a removed element is E_PRUNED_TARGET (no cascading deletion);
/// a removed start menu is E_START_PRUNED; menus and dialogs cut off from
/// start are dropped with W_PRUNED_UNREACHABLE; a reachable menu left without
/// entries is E_EMPTY_MENU.
PruneResult prune(const HmiModel& hm, const FeatureModel& fm, const Configuration& cfg);

}  // namespace hmiforge
