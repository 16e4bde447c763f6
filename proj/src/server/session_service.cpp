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

#include "hmiforge/server/session_service.hpp"

#include "hmiforge/gen/generate.hpp"

namespace hmiforge {

namespace {

Reply error_reply(int status, const std::string& message) {
  return {status, {{"error", message}}};
}

// `{"select": ["A", ...]}` -> Configuration; nullopt on a malformed body.
std::optional<Configuration> selection(const std::string& body, std::string& problem) {
  nlohmann::json j = nlohmann::json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object() || !j.contains("select") || !j["select"].is_array()) {
    problem = "body must be a JSON object with a \"select\" array";
    return std::nullopt;
  }
  Configuration cfg;
  for (const auto& f : j["select"]) {
    if (!f.is_string()) {
      problem = "\"select\" must contain feature names";
      return std::nullopt;
    }
    cfg.selected.insert(f.get<std::string>());
  }
  return cfg;
}

nlohmann::json violations_json(const Diagnostics& violations) {
  auto arr = nlohmann::json::array();
  for (const auto& v : violations) arr.push_back({{"code", v.code}, {"message", v.message}});
  return arr;
}

nlohmann::json effects_json(const std::vector<Effect>& effects) {
  auto arr = nlohmann::json::array();
  for (const auto& e : effects) arr.push_back(to_json(e));
  return arr;
}

}  // namespace

nlohmann::json feature_model_json(const FeatureModel& fm) {
  auto node = [&](auto& self, const std::string& name) -> nlohmann::json {
    const Feature& f = fm.features.at(name);
    auto groups = nlohmann::json::array();
    for (const auto& g : f.groups) {
      auto children = nlohmann::json::array();
      for (const auto& c : g.children) children.push_back(self(self, c));
      groups.push_back({{"kind", keyword(g.kind)}, {"children", std::move(children)}});
    }
    return {{"name", name}, {"groups", std::move(groups)}};
  };
  auto constraints = nlohmann::json::array();
  for (const auto& c : fm.constraints) {
    constraints.push_back({{"kind", keyword(c.kind)}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  return {{"name", fm.name}, {"root", node(node, fm.root)}, {"constraints", std::move(constraints)}};
}

SessionService::SessionService(LoadedModels models) : models_(std::move(models)) {}

Reply SessionService::feature_model() const { return {200, feature_model_json(models_.feature_model)}; }

Reply SessionService::validate(const std::string& body) const {
  std::string problem;
  auto cfg = selection(body, problem);
  if (!cfg) return error_reply(400, problem);
  Verdict verdict = is_valid_configuration(models_.feature_model, *cfg);
  return {200, {{"valid", verdict.valid}, {"violations", violations_json(verdict.violations)}}};
}

Reply SessionService::create_session(const std::string& body) {
  std::string problem;
  auto cfg = selection(body, problem);
  if (!cfg) return error_reply(400, problem);
  GenerateResult gen =
      generate(models_.feature_model, models_.hmi_model, models_.manifest, *cfg);
  if (!gen.ok()) return {422, {{"diagnostics", to_json(gen.diagnostics)}}};

  auto session = std::make_shared<Session>();
  session->program = std::move(gen.generation->program);
  session->state = init_session(session->program);
  const nlohmann::json view = to_json(render_view(session->state, session->program));

  std::lock_guard lock(sessions_mutex_);
  const std::string id = "s" + std::to_string(next_id_++);
  sessions_.emplace(id, std::move(session));
  return {201, {{"sessionId", id}, {"view", view}}};
}

Reply SessionService::input(const std::string& id, const std::string& body) {
  auto session = find(id);
  if (!session) return error_reply(404, "no session '" + id + "'");
  nlohmann::json j = nlohmann::json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("event") || !j["event"].is_string()) {
    return error_reply(400, "body must be {\"event\": \"up\"|\"down\"|\"select\"|\"back\"}");
  }
  auto event = parse_event(j["event"].get<std::string>());
  if (!event) return error_reply(400, "unknown event '" + j["event"].get<std::string>() + "'");

  std::lock_guard lock(session->mutex);
  StepOutcome outcome = step(session->state, *event, session->program);
  session->state = outcome.state;
  return {200,
          {{"view", to_json(render_view(session->state, session->program))},
           {"effects", effects_json(outcome.effects)},
           {"transition", outcome.transition}}};
}

Reply SessionService::view(const std::string& id) const {
  auto session = find(id);
  if (!session) return error_reply(404, "no session '" + id + "'");
  std::lock_guard lock(session->mutex);
  return {200, to_json(render_view(session->state, session->program))};
}

Reply SessionService::close(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  if (sessions_.erase(id) == 0) return error_reply(404, "no session '" + id + "'");
  return {200, {{"closed", id}}};
}

std::size_t SessionService::session_count() const {
  std::lock_guard lock(sessions_mutex_);
  return sessions_.size();
}

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id) const {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

}  // namespace hmiforge
