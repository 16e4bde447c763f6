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
#include <iterator>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hmiforge/core/diagnostic.hpp"

namespace hmiforge {

/// Pre-order depth-first walk. `children(node)` yields the node's children in
/// declaration order as a range of `const Node&` (or pointers to Node),
/// `identify(node)` names a node, and `visit(node, depth)` is called once per
/// node with the root at depth 0. Returns the identities in visit order.
template <typename Node, typename ChildrenFn, typename IdentifyFn, typename Visitor>
auto traverse_depth_first(const Node& root, ChildrenFn&& children, IdentifyFn&& identify,
                          Visitor&& visit) {
  using Id = std::decay_t<std::invoke_result_t<IdentifyFn&, const Node&>>;
  std::vector<Id> order;
  std::vector<std::pair<const Node*, std::size_t>> stack{{&root, 0}};
  while (!stack.empty()) {
    auto [node, depth] = stack.back();
    stack.pop_back();
    visit(*node, depth);
    order.push_back(identify(*node));

    std::vector<const Node*> kids;
    for (const auto& child : children(*node)) {
      if constexpr (std::is_pointer_v<std::decay_t<decltype(child)>>) {
        kids.push_back(child);
      } else {
        kids.push_back(&child);
      }
    }
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, depth + 1);
  }
  return order;
}

/// Generic syntax-tree view of a parsed model: one node per definition or
/// item, carrying its source span. Used by traversal-based analyses and
/// tests that relate traversal order to source order.
struct SyntaxNode {
  std::string id;
  SourceSpan span;
  std::vector<SyntaxNode> children;
};

template <typename Visitor>
std::vector<std::string> traverse_depth_first(const SyntaxNode& root, Visitor&& visit) {
  return traverse_depth_first(
      root, [](const SyntaxNode& n) -> const std::vector<SyntaxNode>& { return n.children; },
      [](const SyntaxNode& n) { return n.id; }, std::forward<Visitor>(visit));
}

inline std::vector<std::string> traverse_depth_first(const SyntaxNode& root) {
  return traverse_depth_first(root, [](const SyntaxNode&, std::size_t) {});
}

}  // namespace hmiforge
