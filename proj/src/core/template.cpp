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

#include "hmiforge/core/template.hpp"

#include "hmiforge/core/lexer.hpp"

namespace hmiforge {

TemplateEnv& TemplateEnv::set(const std::string& name, std::string value) {
  bindings[name] = std::move(value);
  return *this;
}

TemplateEnv& TemplateEnv::set(const std::string& name, std::vector<TemplateEnv> items) {
  bindings[name] = std::move(items);
  return *this;
}

namespace {

struct Node {
  enum class Kind { text, placeholder, each } kind;
  std::string value;  // literal text or binding name
  std::vector<Node> body;
};

// Recursive descent over `${...}` tags. Block balance is checked before
// parsing, so a nested sequence always ends at its `${/each}`.
class TemplateParser {
 public:
  explicit TemplateParser(std::string_view src) : src_(src) {}

  std::vector<Node> parse() { return sequence(/*inside_block=*/false); }

 private:
  std::vector<Node> sequence(bool inside_block) {
    std::vector<Node> nodes;
    std::string text;
    auto flush = [&] {
      if (!text.empty()) nodes.push_back(Node{Node::Kind::text, std::move(text), {}});
      text.clear();
    };
    while (pos_ < src_.size()) {
      if (src_.compare(pos_, 2, "${") != 0) {
        text += src_[pos_++];
        continue;
      }
      const std::size_t close = src_.find('}', pos_ + 2);
      const std::string_view inner = src_.substr(pos_ + 2, close - pos_ - 2);
      pos_ = close + 1;
      flush();
      if (inner == "/each") {
        if (!inside_block) syntax("'${/each}' without matching '${#each}'");
        return nodes;
      }
      if (inner.substr(0, 6) == "#each ") {
        std::string name = checked_name(inner.substr(6));
        auto body = sequence(/*inside_block=*/true);
        nodes.push_back(Node{Node::Kind::each, std::move(name), std::move(body)});
        continue;
      }
      nodes.push_back(Node{Node::Kind::placeholder, checked_name(inner), {}});
    }
    flush();
    return nodes;
  }

  static std::string checked_name(std::string_view raw) {
    if (!is_identifier(raw)) syntax("invalid placeholder name '" + std::string(raw) + "'");
    return std::string(raw);
  }

  [[noreturn]] static void syntax(const std::string& message) {
    throw TemplateError(codes::kTemplateSyntax, message);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class ScopedLookup {
 public:
  explicit ScopedLookup(const TemplateEnv& root) { scopes_.push_back(&root); }

  const TemplateValue& find(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto hit = (*it)->bindings.find(name);
      if (hit != (*it)->bindings.end()) return hit->second;
    }
    throw TemplateError(codes::kUnboundPlaceholder, "no binding for '" + name + "'");
  }

  void push(const TemplateEnv& env) { scopes_.push_back(&env); }
  void pop() { scopes_.pop_back(); }

 private:
  std::vector<const TemplateEnv*> scopes_;
};

void render_nodes(const std::vector<Node>& nodes, ScopedLookup& scope, std::string& out) {
  for (const auto& node : nodes) {
    switch (node.kind) {
      case Node::Kind::text:
        out += node.value;
        break;
      case Node::Kind::placeholder: {
        const auto& value = scope.find(node.value);
        const auto* text = std::get_if<std::string>(&value);
        if (!text) {
          throw TemplateError(codes::kUnboundPlaceholder,
                              "'" + node.value + "' is bound to a list, not text");
        }
        out += *text;
        break;
      }
      case Node::Kind::each: {
        const auto& value = scope.find(node.value);
        const auto* items = std::get_if<std::vector<TemplateEnv>>(&value);
        if (!items) {
          throw TemplateError(codes::kUnboundPlaceholder,
                              "'" + node.value + "' is bound to text, not a list");
        }
        for (const auto& item : *items) {
          scope.push(item);
          render_nodes(node.body, scope, out);
          scope.pop();
        }
        break;
      }
    }
  }
}

}  // namespace

std::string render_template(std::string_view tmpl, const TemplateEnv& env) {
  // Validate block structure up front so syntax errors win over binding errors.
  int depth = 0;
  for (std::size_t pos = tmpl.find("${"); pos != std::string_view::npos;
       pos = tmpl.find("${", pos + 2)) {
    const std::size_t close = tmpl.find('}', pos + 2);
    if (close == std::string_view::npos) {
      throw TemplateError(codes::kTemplateSyntax,
                          "unterminated placeholder at offset " + std::to_string(pos));
    }
    const std::string_view inner = tmpl.substr(pos + 2, close - pos - 2);
    if (inner.substr(0, 6) == "#each ") ++depth;
    if (inner == "/each" && --depth < 0) {
      throw TemplateError(codes::kTemplateSyntax, "'${/each}' without matching '${#each}'");
    }
  }
  if (depth != 0) throw TemplateError(codes::kTemplateSyntax, "unterminated '${#each}' block");

  TemplateParser parser(tmpl);
  const auto nodes = parser.parse();
  ScopedLookup scope(env);
  std::string out;
  render_nodes(nodes, scope, out);
  return out;
}

}  // namespace hmiforge
