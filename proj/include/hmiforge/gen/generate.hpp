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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hmiforge/core/diagnostic.hpp"
#include "hmiforge/core/stage.hpp"
#include "hmiforge/feature/configuration.hpp"
#include "hmiforge/feature/feature_model.hpp"
#include "hmiforge/gen/manifest.hpp"
#include "hmiforge/gen/program.hpp"
#include "hmiforge/gen/prune.hpp"
#include "hmiforge/menu/menu_model.hpp"

namespace hmiforge {

struct GenReport {
  std::size_t pruned_menus = 0;
  std::size_t pruned_dialogs = 0;
  std::size_t pruned_entries = 0;
  Diagnostics warnings;
  std::vector<ElementRef> kept;
  std::vector<PrunedElement> pruned;
};

nlohmann::json to_json(const GenReport& report);

struct Generation {
  HmiProgram program;
  GenReport report;
  std::string program_text;  // canonical JSON, see emit_program
  std::string report_text;
  std::string summary;  // human-readable rendering of the program
};

struct GenerateResult {
  Stage stage_reached = Stage::wellformed;
  Diagnostics diagnostics;  // sorted; includes warnings of successful runs
  std::optional<Generation> generation;

  bool ok() const { return generation.has_value(); }
};

/// Runs the post-parse stages on already-parsed models, gated in order:
///   wellformed  check_hmi_model
///   crosscheck  configuration validity (E_INVALID_CONFIGURATION carrying the
///               rule violations) and cross_check
///   generate    prune, then emit the program, report and summary
/// No stage runs after one that produced an error.
GenerateResult generate(const FeatureModel& fm, const HmiModel& hm,
                        const HandlerManifest& manifest, const Configuration& cfg);

/// Same stages as generate(), stopping after `last`. Without a
/// configuration the crosscheck stage skips validity and generation is not
/// attempted.
GenerateResult run_stages(const FeatureModel& fm, const HmiModel& hm,
                          const HandlerManifest& manifest, const Configuration* cfg, Stage last);

/// Checks the configuration against the feature model, including that its
/// `of` clause (when present) names this model. Empty when valid.
Diagnostics configuration_diagnostics(const FeatureModel& fm, const Configuration& cfg);

/// Builds the program from a pruned model (no presence conditions left).
HmiProgram build_program(const HmiModel& pruned, const HandlerManifest& manifest,
                         const Configuration& cfg);

std::string render_summary(const HmiProgram& program);

}  // namespace hmiforge
