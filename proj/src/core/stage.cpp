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

#include "hmiforge/core/stage.hpp"

namespace hmiforge {

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::parse:
      return "parse";
    case Stage::wellformed:
      return "wellformed";
    case Stage::crosscheck:
      return "crosscheck";
    case Stage::generate:
      return "generate";
  }
  return "parse";
}

}  // namespace hmiforge
