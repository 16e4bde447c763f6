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

#include "hmiforge/core/pipeline.hpp"

#include "hmiforge/core/source.hpp"
#include "hmiforge/gen/generate.hpp"

namespace hmiforge {

namespace {

template <typename T, typename ParseFn>
std::optional<T> load(const std::filesystem::path& path, ParseFn parse, Diagnostics& diags) {
  auto text = read_source(path, diags);
  if (!text) return std::nullopt;
  Parsed<T> parsed = parse(*text, path.string());
  for (auto& d : parsed.diagnostics) diags.push_back(std::move(d));
  return std::move(parsed.value);
}

}  // namespace

PipelineResult run_pipeline(const PipelineInputs& inputs, const PipelineOptions& options) {
  PipelineResult result;
  Diagnostics& diags = result.diagnostics;

  auto fm = load<FeatureModel>(
      inputs.feature_model,
      [](std::string_view t, const std::string& f) { return parse_feature_model(t, f); }, diags);
  auto hm = load<HmiModel>(
      inputs.hmi_model, [](std::string_view t, const std::string& f) { return parse_hmi_model(t, f); },
      diags);
  auto manifest = load<HandlerManifest>(
      inputs.handlers,
      [](std::string_view t, const std::string& f) { return parse_handler_manifest(t, f); }, diags);
  std::optional<Configuration> cfg;
  if (inputs.configuration) {
    cfg = load<Configuration>(
        *inputs.configuration,
        [](std::string_view t, const std::string& f) { return parse_configuration(t, f); }, diags);
  }
  sort_diagnostics(diags);
  if (has_errors(diags) || !fm || !hm || !manifest || (inputs.configuration && !cfg) ||
      options.last_stage == Stage::parse) {
    result.stage_reached = Stage::parse;
    return result;
  }

  result.models = LoadedModels{std::move(*fm), std::move(*hm), std::move(*manifest), std::move(cfg)};
  const LoadedModels& m = *result.models;
  GenerateResult staged =
      run_stages(m.feature_model, m.hmi_model, m.manifest,
                 m.configuration ? &*m.configuration : nullptr, options.last_stage);
  result.stage_reached = staged.stage_reached;
  for (auto& d : staged.diagnostics) diags.push_back(std::move(d));
  sort_diagnostics(diags);
  if (staged.generation) {
    result.artifacts[kProgramArtifact] = staged.generation->program_text;
    result.artifacts[kReportArtifact] = staged.generation->report_text;
    result.artifacts[kSummaryArtifact] = staged.generation->summary;
  }
  return result;
}

nlohmann::json to_json(const PipelineResult& result) {
  return {{"stageReached", to_string(result.stage_reached)},
          {"diagnostics", to_json(result.diagnostics)},
          {"artifacts", result.artifacts}};
}

}  // namespace hmiforge
