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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hmiforge/core/diagnostic.hpp"
#include "hmiforge/feature/feature_model.hpp"

namespace hmiforge {

/// A set of selected features. When read from a file it also remembers where
/// each name was written so violations can point back at it.
struct Configuration {
  std::set<std::string> selected;

  std::string name;
  std::string model;  // the `of <model>` clause
  std::optional<SourceSpan> span;
  std::map<std::string, SourceSpan> spans;

  Configuration() = default;
  Configuration(std::initializer_list<std::string> names) : selected(names) {}
  explicit Configuration(std::set<std::string> names) : selected(std::move(names)) {}

  bool has(const std::string& feature) const { return selected.count(feature) != 0; }
  /// Selected names in lexicographic order.
  std::vector<std::string> sorted() const { return {selected.begin(), selected.end()}; }
};

/// `configuration <name> of <model> { select A, B, C }`; `{ }` selects nothing.
Parsed<Configuration> parse_configuration(std::string_view text,
                                          const std::string& file = "<cfg>");

struct Verdict {
  bool valid = true;
  Diagnostics violations;  // one per broken rule instance
};

/// Checks the seven validity rules of a feature diagram: root selected,
/// parents of selected features selected, mandatory children present,
/// exactly one alternative per selected xor group, requires/excludes
/// constraints, and only declared names. Linear in features + constraints.
Verdict is_valid_configuration(const FeatureModel& fm, const Configuration& cfg);

inline constexpr std::size_t kDefaultEnumerationCap = 20;

/// All valid configurations, each once, ordered lexicographically by their
/// sorted member lists. Throws DiagnosticError(E_TOO_LARGE) when the model
/// has more than `cap` features.
std::vector<Configuration> enumerate_configurations(const FeatureModel& fm,
                                                    std::size_t cap = kDefaultEnumerationCap);

std::size_t count_configurations(const FeatureModel& fm, std::size_t cap = kDefaultEnumerationCap);

/// `A, B, C`
std::string format_selection(const Configuration& cfg);

}  // namespace hmiforge
