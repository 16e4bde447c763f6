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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hmiforge/core/diagnostic.hpp"
#include "hmiforge/core/traverse.hpp"

namespace hmiforge {

enum class GroupKind { mandatory, optional, alternative };

/// Keyword spelling in the textual notation (`xor` for alternative).
std::string_view keyword(GroupKind kind);

struct ChildGroup {
  GroupKind kind = GroupKind::optional;
  std::vector<std::string> children;  // 1 for mandatory/optional, >= 2 for xor
  SourceSpan span;
  std::vector<SourceSpan> child_spans;
};

struct Feature {
  std::string name;
  std::string parent;  // empty for the root
  std::vector<ChildGroup> groups;
  SourceSpan span;                       // first mention
  std::optional<SourceSpan> definition;  // `feature X { ... }` block, if any
  int definition_index = -1;             // order of the block in the file
};

enum class ConstraintKind { require, exclude };

std::string_view keyword(ConstraintKind kind);

struct CrossConstraint {
  ConstraintKind kind = ConstraintKind::require;
  std::string lhs;
  std::string rhs;
  SourceSpan span;
};

/// A feature diagram: a tree of features hanging off `root` plus cross-tree
/// constraints. Once constructed by parse_feature_model the tree invariants
/// hold: single root, every other feature has exactly one parent, acyclic.
struct FeatureModel {
  std::string name;
  std::string root;
  std::map<std::string, Feature> features;
  std::vector<CrossConstraint> constraints;
  SourceSpan span;

  const Feature* find(std::string_view feature) const;
  bool declares(std::string_view feature) const { return find(feature) != nullptr; }

  /// Features in pre-order (parent before children, groups and children in
  /// declaration order).
  std::vector<std::string> preorder() const;
};

Parsed<FeatureModel> parse_feature_model(std::string_view text, const std::string& file = "<fm>");

/// Canonical text: root, one block per non-leaf feature in pre-order, then
/// constraints; two-space indentation.
std::string pretty_print(const FeatureModel& fm);

/// Equality of name, root, tree shape and constraints; spans are ignored.
bool same_structure(const FeatureModel& a, const FeatureModel& b);

/// Syntax tree in source order: model -> feature blocks -> groups -> child
/// mentions, followed by constraints.
SyntaxNode syntax_tree(const FeatureModel& fm);

/// The feature tree itself as a SyntaxNode hierarchy (ids are feature names).
SyntaxNode feature_tree(const FeatureModel& fm);

}  // namespace hmiforge
