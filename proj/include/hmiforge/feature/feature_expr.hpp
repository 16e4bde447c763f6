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

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hmiforge/core/diagnostic.hpp"
#include "hmiforge/core/lexer.hpp"

namespace hmiforge {

/// Presence-condition language: identifiers combined with `!`, `&`, `|`
/// and parentheses. `&` binds tighter than `|`; both are left-associative.
struct FeatureExpr {
  enum class Op { feature, negation, conjunction, disjunction };

  Op op = Op::feature;
  std::string name;                 // Op::feature only
  SourceSpan span;
  std::vector<FeatureExpr> operands;  // 1 for negation, 2 for binary ops

  static FeatureExpr feature(std::string name, SourceSpan span = {});
  static FeatureExpr negation(FeatureExpr operand);
  static FeatureExpr conjunction(FeatureExpr lhs, FeatureExpr rhs);
  static FeatureExpr disjunction(FeatureExpr lhs, FeatureExpr rhs);
};

/// Reads one expression from the stream, stopping at the first token that
/// cannot continue it. Throws SyntaxError.
FeatureExpr parse_feature_expr(TokenStream& tokens);
Parsed<FeatureExpr> parse_feature_expr(std::string_view text, const std::string& file = "<expr>");

/// Canonical text with the minimum parentheses needed to re-parse to the
/// same tree, e.g. `(Phone | Media) & !CD`.
std::string to_string(const FeatureExpr& expr);

bool eval_feature_expr(const FeatureExpr& expr, const std::set<std::string>& selected);

/// Identifier leaves in left-to-right order.
std::vector<const FeatureExpr*> feature_refs(const FeatureExpr& expr);

/// Tree equality ignoring source spans.
bool same_structure(const FeatureExpr& a, const FeatureExpr& b);

}  // namespace hmiforge
