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

#include "hmiforge/core/diagnostic.hpp"
#include "hmiforge/feature/feature_model.hpp"
#include "hmiforge/gen/manifest.hpp"
#include "hmiforge/menu/menu_model.hpp"

namespace hmiforge {

/// Consistency between the feature model, the menu model and the handler
/// manifest:
///  - E_UNKNOWN_FEATURE_REF  presence condition names an undeclared feature
///  - E_UNKNOWN_ACTION       `-> action x` with no handler x (at the entry/button)
///  - E_UNKNOWN_STATUSBOX    handler effect sets an undeclared status box
///  - W_UNUSED_HANDLER       handler no entry or button targets
Diagnostics cross_check(const FeatureModel& fm, const HmiModel& hm,
                        const HandlerManifest& manifest);

}  // namespace hmiforge
