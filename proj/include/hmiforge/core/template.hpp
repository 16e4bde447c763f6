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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hmiforge/core/diagnostic.hpp"

namespace hmiforge {

struct TemplateEnv;
using TemplateValue = std::variant<std::string, std::vector<TemplateEnv>>;

/// Name bindings for render_template. A binding is either text or a list of
/// nested environments iterated by an `${#each name}` block.
struct TemplateEnv {
  std::map<std::string, TemplateValue> bindings;

  TemplateEnv& set(const std::string& name, std::string value);
  TemplateEnv& set(const std::string& name, std::vector<TemplateEnv> items);
};

/// Raised with code E_UNBOUND_PLACEHOLDER or E_TEMPLATE_SYNTAX.
class TemplateError : public DiagnosticError {
 public:
  TemplateError(std::string_view code, std::string message)
      : DiagnosticError(make_error(code, std::move(message))) {}
};

/// Substitutes `${name}` placeholders and expands `${#each name}...${/each}`
/// blocks (nestable; the element's bindings shadow enclosing ones). Either
/// returns the complete output or throws; never partial output.
std::string render_template(std::string_view tmpl, const TemplateEnv& env);

}  // namespace hmiforge
