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
#include <memory>
#include <mutex>
#include <string>

#include <json.hpp>

#include "hmiforge/core/pipeline.hpp"
#include "hmiforge/gen/program.hpp"
#include "hmiforge/runtime/simulator.hpp"

namespace hmiforge {

struct Reply {
  int status = 200;
  nlohmann::json body;
};

/// Transport-independent handlers of the session protocol. Each session
/// owns its generated program; inputs to one session are applied one at a
/// time, distinct sessions share only the immutable models.
class SessionService {
 public:
  explicit SessionService(LoadedModels models);

  Reply feature_model() const;                                 // GET  /api/featuremodel
  Reply validate(const std::string& body) const;               // POST /api/validate
  Reply create_session(const std::string& body);               // POST /api/sessions
  Reply input(const std::string& id, const std::string& body);  // POST /api/sessions/{id}/input
  Reply view(const std::string& id) const;                     // GET  /api/sessions/{id}/view
  Reply close(const std::string& id);                          // DELETE /api/sessions/{id}

  std::size_t session_count() const;

 private:
  struct Session {
    std::mutex mutex;
    HmiProgram program;
    SimState state;
  };

  std::shared_ptr<Session> find(const std::string& id) const;

  const LoadedModels models_;
  mutable std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  unsigned long next_id_ = 1;
};

/// Nested JSON form of a feature model: `{name, root: {name, groups: [{kind,
/// children: [...]}]}, constraints: [{kind, lhs, rhs}]}`.
nlohmann::json feature_model_json(const FeatureModel& fm);

}  // namespace hmiforge
