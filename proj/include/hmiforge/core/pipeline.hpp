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

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "hmiforge/core/diagnostic.hpp"
#include "hmiforge/core/stage.hpp"
#include "hmiforge/feature/configuration.hpp"
#include "hmiforge/feature/feature_model.hpp"
#include "hmiforge/gen/manifest.hpp"
#include "hmiforge/menu/menu_model.hpp"

namespace hmiforge {

struct PipelineInputs {
  std::filesystem::path feature_model;
  std::filesystem::path hmi_model;
  std::filesystem::path handlers;
  std::optional<std::filesystem::path> configuration;  // required to generate
};

struct PipelineOptions {
  Stage last_stage = Stage::generate;
};

/// The parsed inputs, kept for callers that go on to serve or simulate.
struct LoadedModels {
  FeatureModel feature_model;
  HmiModel hmi_model;
  HandlerManifest manifest;
  std::optional<Configuration> configuration;
};

inline constexpr const char* kProgramArtifact = "hmi.program";
inline constexpr const char* kReportArtifact = "hmi.report";
inline constexpr const char* kSummaryArtifact = "hmi.summary";

struct PipelineResult {
  Stage stage_reached = Stage::parse;
  Diagnostics diagnostics;
  std::map<std::string, std::string> artifacts;  // empty unless generation succeeded
  std::optional<LoadedModels> models;            // set once parsing succeeded
};

/// parse -> wellformed -> crosscheck -> generate. Every file of a stage is
/// processed before the gate, so all parse errors surface together; no
/// stage runs after one that produced an error. Diagnostics are ordered by
/// source position, then code.
PipelineResult run_pipeline(const PipelineInputs& inputs, const PipelineOptions& options = {});

/// Stable JSON form (stage, diagnostics, artifacts) used by determinism checks.
nlohmann::json to_json(const PipelineResult& result);

}  // namespace hmiforge
