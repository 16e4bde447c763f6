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
#include <optional>
#include <string>

#include "hmiforge/core/diagnostic.hpp"

namespace hmiforge {

/// Reads a whole model file. On failure appends E_IO and returns nullopt.
std::optional<std::string> read_source(const std::filesystem::path& path,
                                       Diagnostics& diagnostics);

}  // namespace hmiforge
