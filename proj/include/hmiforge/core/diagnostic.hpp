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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hmiforge {

/// Position of a construct in a model file. Lines and columns are 1-based;
/// the end position is inclusive (column of the last character).
struct SourceSpan {
  std::string file;
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// Smallest span covering both arguments (both must be in the same file).
SourceSpan join(const SourceSpan& first, const SourceSpan& last);

enum class Severity { error, warning, info };

std::string_view to_string(Severity severity);

// The closed set of diagnostic codes. Anything not listed here is a bug.
namespace codes {
inline constexpr std::string_view kIo = "E_IO";
inline constexpr std::string_view kSyntax = "E_SYNTAX";
inline constexpr std::string_view kUnboundPlaceholder = "E_UNBOUND_PLACEHOLDER";
inline constexpr std::string_view kTemplateSyntax = "E_TEMPLATE_SYNTAX";
inline constexpr std::string_view kDuplicateFeature = "E_DUPLICATE_FEATURE";
inline constexpr std::string_view kMultipleParents = "E_MULTIPLE_PARENTS";
inline constexpr std::string_view kUnknownRoot = "E_UNKNOWN_ROOT";
inline constexpr std::string_view kCycle = "E_CYCLE";
inline constexpr std::string_view kUnknownFeature = "E_UNKNOWN_FEATURE";
inline constexpr std::string_view kRootNotSelected = "E_ROOT_NOT_SELECTED";
inline constexpr std::string_view kOrphanSelection = "E_ORPHAN_SELECTION";
inline constexpr std::string_view kMandatoryMissing = "E_MANDATORY_MISSING";
inline constexpr std::string_view kXorViolation = "E_XOR_VIOLATION";
inline constexpr std::string_view kRequiresViolation = "E_REQUIRES_VIOLATION";
inline constexpr std::string_view kExcludesViolation = "E_EXCLUDES_VIOLATION";
inline constexpr std::string_view kTooLarge = "E_TOO_LARGE";
inline constexpr std::string_view kDuplicateName = "E_DUPLICATE_NAME";
inline constexpr std::string_view kNoStart = "E_NO_START";
inline constexpr std::string_view kUnresolvedTarget = "E_UNRESOLVED_TARGET";
inline constexpr std::string_view kUnreachable = "W_UNREACHABLE";
inline constexpr std::string_view kDuplicateHandler = "E_DUPLICATE_HANDLER";
inline constexpr std::string_view kUnknownFeatureRef = "E_UNKNOWN_FEATURE_REF";
inline constexpr std::string_view kUnknownAction = "E_UNKNOWN_ACTION";
inline constexpr std::string_view kUnknownStatusbox = "E_UNKNOWN_STATUSBOX";
inline constexpr std::string_view kUnusedHandler = "W_UNUSED_HANDLER";
inline constexpr std::string_view kPrunedTarget = "E_PRUNED_TARGET";
inline constexpr std::string_view kStartPruned = "E_START_PRUNED";
inline constexpr std::string_view kPrunedUnreachable = "W_PRUNED_UNREACHABLE";
inline constexpr std::string_view kEmptyMenu = "E_EMPTY_MENU";
inline constexpr std::string_view kInvalidConfiguration = "E_INVALID_CONFIGURATION";
inline constexpr std::string_view kBadProgram = "E_BAD_PROGRAM";

bool is_registered(std::string_view code);
}  // namespace codes

struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  std::optional<SourceSpan> span;
  // Nested findings, e.g. the rule violations behind E_INVALID_CONFIGURATION
  // or the second span of E_PRUNED_TARGET.
  std::vector<Diagnostic> related;

  bool is_error() const { return severity == Severity::error; }
};

Diagnostic make_error(std::string_view code, std::string message,
                      std::optional<SourceSpan> span = std::nullopt);
Diagnostic make_warning(std::string_view code, std::string message,
                        std::optional<SourceSpan> span = std::nullopt);
Diagnostic make_info(std::string_view code, std::string message,
                     std::optional<SourceSpan> span = std::nullopt);

using Diagnostics = std::vector<Diagnostic>;

bool has_errors(const Diagnostics& diagnostics);
std::size_t count_errors(const Diagnostics& diagnostics);

/// Stable sort by source position (file, line, column), then code.
/// Spanless diagnostics sort before positioned ones.
void sort_diagnostics(Diagnostics& diagnostics);

/// `<file>:<line>:<col>: <severity>[<code>]: <message>`; related entries
/// follow on their own lines, indented by two spaces.
std::string render(const Diagnostic& diagnostic);
std::string render(const Diagnostics& diagnostics);

nlohmann::json to_json(const SourceSpan& span);
nlohmann::json to_json(const Diagnostic& diagnostic);
nlohmann::json to_json(const Diagnostics& diagnostics);

/// Result of reading a model: a value iff no error-severity diagnostic was
/// produced. Warnings may accompany a value.
template <typename T>
struct Parsed {
  std::optional<T> value;
  Diagnostics diagnostics;

  bool ok() const { return value.has_value(); }
};

/// Contract failure that carries a registered diagnostic (E_TOO_LARGE,
/// E_BAD_PROGRAM, template errors).
class DiagnosticError : public std::runtime_error {
 public:
  explicit DiagnosticError(Diagnostic diagnostic)
      : std::runtime_error(diagnostic.message), diagnostic_(std::move(diagnostic)) {}
  const Diagnostic& diagnostic() const { return diagnostic_; }
  const std::string& code() const { return diagnostic_.code; }

 private:
  Diagnostic diagnostic_;
};

}  // namespace hmiforge
