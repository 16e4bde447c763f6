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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hmiforge/feature/feature_expr.hpp"
#include "hmiforge/gen/program.hpp"
#include "hmiforge/menu/menu_model.hpp"
#include "hmiforge/runtime/simulator.hpp"
#include "random_models.hpp"

// Reference implementations used to judge the library. They work on the
// generator's own data (FmShape, bitmasks) or walk the models directly and
// share no code with src/.
namespace hmiforge::testing {

/// Bit i of `mask` selects feature i of the shape.
bool oracle_valid(const FmShape& shape, std::uint32_t mask);

/// Sorted names of the features selected by `mask`.
std::vector<std::string> oracle_names(const FmShape& shape, std::uint32_t mask);

/// Tries all 2^n subsets; result holds sorted name lists in lexicographic
/// order.
std::vector<std::vector<std::string>> brute_force_configurations(const FmShape& shape);

bool oracle_eval(const FeatureExpr& expr, const std::set<std::string>& selected);

/// What pruning must keep: presence-true menus and dialogs the start menu
/// reaches through presence-true entries (and buttons), and the presence-true
/// entries of kept menus. Entry indices count entries only.
struct PruneOracle {
  std::set<std::string> menus;
  std::set<std::string> dialogs;
  std::map<std::string, std::vector<std::size_t>> entries;
  std::size_t pruned_menus = 0;
  std::size_t pruned_dialogs = 0;
  std::size_t pruned_entries = 0;
};
PruneOracle expected_prune(const HmiModel& hm, const std::set<std::string>& selected);

/// Independent restatement of the session-state invariants.
std::vector<std::string> oracle_state_problems(const SimState& state, const HmiProgram& program);

}  // namespace hmiforge::testing
