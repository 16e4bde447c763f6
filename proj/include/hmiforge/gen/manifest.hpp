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

#include <string>
#include <string_view>
#include <vector>

#include "hmiforge/core/diagnostic.hpp"

namespace hmiforge {

/// `set <statusbox> = "<value>"`; the only effect a handler can have.
struct Effect {
  std::string statusbox;
  std::string value;
  SourceSpan span;

  friend bool operator==(const Effect& a, const Effect& b) {
    return a.statusbox == b.statusbox && a.value == b.value;
  }
};

struct Handler {
  std::string action;
  std::vector<Effect> effects;
  SourceSpan span;
};

/// Declarative stand-in for the handwritten action code the menu model
/// calls into. Action names are unique.
struct HandlerManifest {
  std::vector<Handler> handlers;

  const Handler* find(std::string_view action) const;
};

Parsed<HandlerManifest> parse_handler_manifest(std::string_view text,
                                               const std::string& file = "<handlers>");

std::string pretty_print(const HandlerManifest& manifest);

}  // namespace hmiforge
