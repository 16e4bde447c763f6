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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hmiforge/feature/feature_expr.hpp"
#include "hmiforge/feature/feature_model.hpp"
#include "hmiforge/gen/manifest.hpp"
#include "hmiforge/gen/program.hpp"
#include "hmiforge/menu/menu_model.hpp"
#include "hmiforge/runtime/simulator.hpp"

namespace hmiforge::testing {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int uniform(Rng& rng, int lo, int hi);
bool chance(Rng& rng, double p);

/// Generator-side description of a feature diagram. Feature i > 0 has a
/// parent with a smaller index, so index order is already a pre-order of
/// some kind; the oracle in oracle.hpp works on this form only.
struct FmShape {
  struct Group {
    GroupKind kind = GroupKind::optional;
    std::vector<int> children;
  };
  struct Rule {
    ConstraintKind kind = ConstraintKind::require;
    int lhs = 0;
    int rhs = 0;
  };
  std::string model_name = "Gen";
  std::vector<std::string> names;  // names[0] is the root
  std::vector<int> parent;         // -1 for the root
  std::vector<std::vector<Group>> groups;
  std::vector<Rule> rules;

  int size() const { return static_cast<int>(names.size()); }
};

/// Random tree of 1..max_features features with random group kinds and
/// 0..max_rules distinct cross-tree constraints.
FmShape random_fm_shape(Rng& rng, int max_features = 12, int max_rules = 3);

/// Feature-model notation for `shape`, written by hand (the library's
/// printer is not involved). With `rng` the feature blocks are emitted in a
/// shuffled order and comments are sprinkled in.
std::string write_feature_model(const FmShape& shape, Rng* rng = nullptr);

/// Random presence expression over `features` with at most `depth` levels.
FeatureExpr random_expr(Rng& rng, const std::vector<std::string>& features, int depth = 3,
                        bool negation = true);

/// Printable label: letters, digits, spaces, quotes, backslashes and a few
/// multi-byte characters. Never empty.
std::string random_label(Rng& rng);

struct HmiGenOptions {
  // Prune-safe models never make pruning fail: an entry aiming at a
  // conditional menu or dialog repeats that element's condition, buttons
  // only aim at unconditional elements, the start menu is unconditional
  // and every menu keeps one unconditional entry.
  bool prune_safe = false;
  int max_menus = 5;
  int max_dialogs = 3;
  int max_statusboxes = 3;
  int max_actions = 4;
  bool negation = true;  // allow `!` in presence conditions
};

/// Random menu model over `features` whose references all resolve (menus,
/// dialogs, status boxes); actions are named `act<i>`.
HmiModel random_hmi_model(Rng& rng, const std::vector<std::string>& features,
                          const std::string& for_model, const HmiGenOptions& options = {});

/// One handler per action the model targets, with effects on its status
/// boxes, plus occasionally a handler nothing targets.
HandlerManifest random_manifest_for(Rng& rng, const HmiModel& hm);

/// Free-standing manifest for notation round trips.
HandlerManifest random_manifest(Rng& rng);

/// Random program that satisfies every program invariant by construction.
HmiProgram random_program(Rng& rng);

std::vector<InputEvent> random_trace(Rng& rng, std::size_t max_length);

}  // namespace hmiforge::testing
