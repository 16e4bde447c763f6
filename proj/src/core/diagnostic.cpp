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

#include "hmiforge/core/diagnostic.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <tuple>

namespace hmiforge {

SourceSpan join(const SourceSpan& first, const SourceSpan& last) {
  return SourceSpan{first.file, first.start_line, first.start_col, last.end_line,
                    last.end_col};
}

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::error:
      return "error";
    case Severity::warning:
      return "warning";
    case Severity::info:
      return "info";
  }
  return "error";
}

namespace codes {

bool is_registered(std::string_view code) {
  static constexpr std::array kAll = {
      kIo,
      kSyntax,
      kUnboundPlaceholder,
      kTemplateSyntax,
      kDuplicateFeature,
      kMultipleParents,
      kUnknownRoot,
      kCycle,
      kUnknownFeature,
      kRootNotSelected,
      kOrphanSelection,
      kMandatoryMissing,
      kXorViolation,
      kRequiresViolation,
      kExcludesViolation,
      kTooLarge,
      kDuplicateName,
      kNoStart,
      kUnresolvedTarget,
      kUnreachable,
      kDuplicateHandler,
      kUnknownFeatureRef,
      kUnknownAction,
      kUnknownStatusbox,
      kUnusedHandler,
      kPrunedTarget,
      kStartPruned,
      kPrunedUnreachable,
      kEmptyMenu,
      kInvalidConfiguration,
      kBadProgram,
  };
  return std::find(kAll.begin(), kAll.end(), code) != kAll.end();
}

}  // namespace codes

namespace {

Diagnostic make(Severity severity, std::string_view code, std::string message,
                std::optional<SourceSpan> span) {
  assert(codes::is_registered(code) && "diagnostic code missing from registry");
  assert(!message.empty());
  return Diagnostic{severity, std::string(code), std::move(message), std::move(span), {}};
}

void render_into(const Diagnostic& d, int indent, std::string& out) {
  out.append(static_cast<std::size_t>(indent), ' ');
  if (d.span) {
    out += d.span->file;
    out += ':';
    out += std::to_string(d.span->start_line);
    out += ':';
    out += std::to_string(d.span->start_col);
    out += ": ";
  }
  out += to_string(d.severity);
  out += '[';
  out += d.code;
  out += "]: ";
  out += d.message;
  out += '\n';
  for (const auto& r : d.related) render_into(r, indent + 2, out);
}

}  // namespace

Diagnostic make_error(std::string_view code, std::string message,
                      std::optional<SourceSpan> span) {
  return make(Severity::error, code, std::move(message), std::move(span));
}

Diagnostic make_warning(std::string_view code, std::string message,
                        std::optional<SourceSpan> span) {
  return make(Severity::warning, code, std::move(message), std::move(span));
}

Diagnostic make_info(std::string_view code, std::string message,
                     std::optional<SourceSpan> span) {
  return make(Severity::info, code, std::move(message), std::move(span));
}

bool has_errors(const Diagnostics& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

std::size_t count_errors(const Diagnostics& diagnostics) {
  return static_cast<std::size_t>(std::count_if(
      diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) { return d.is_error(); }));
}

void sort_diagnostics(Diagnostics& diagnostics) {
  auto key = [](const Diagnostic& d) {
    if (!d.span) return std::make_tuple(0, std::string_view{}, 0, 0, std::string_view(d.code));
    return std::make_tuple(1, std::string_view(d.span->file), d.span->start_line,
                           d.span->start_col, std::string_view(d.code));
  };
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [&](const Diagnostic& a, const Diagnostic& b) { return key(a) < key(b); });
}

std::string render(const Diagnostic& diagnostic) {
  std::string out;
  render_into(diagnostic, 0, out);
  return out;
}

std::string render(const Diagnostics& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) render_into(d, 0, out);
  return out;
}

nlohmann::json to_json(const SourceSpan& span) {
  return {{"file", span.file},
          {"startLine", span.start_line},
          {"startCol", span.start_col},
          {"endLine", span.end_line},
          {"endCol", span.end_col}};
}

nlohmann::json to_json(const Diagnostic& diagnostic) {
  nlohmann::json j = {{"severity", to_string(diagnostic.severity)},
                      {"code", diagnostic.code},
                      {"message", diagnostic.message}};
  j["span"] = diagnostic.span ? to_json(*diagnostic.span) : nlohmann::json(nullptr);
  if (!diagnostic.related.empty()) j["related"] = to_json(diagnostic.related);
  return j;
}

nlohmann::json to_json(const Diagnostics& diagnostics) {
  auto arr = nlohmann::json::array();
  for (const auto& d : diagnostics) arr.push_back(to_json(d));
  return arr;
}

}  // namespace hmiforge
