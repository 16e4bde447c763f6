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

#include "hmiforge/feature/feature_model.hpp"

#include <algorithm>
#include <set>

#include "hmiforge/core/lexer.hpp"

namespace hmiforge {

std::string_view keyword(GroupKind kind) {
  switch (kind) {
    case GroupKind::mandatory:
      return "mandatory";
    case GroupKind::optional:
      return "optional";
    case GroupKind::alternative:
      return "xor";
  }
  return "optional";
}

std::string_view keyword(ConstraintKind kind) {
  return kind == ConstraintKind::require ? "requires" : "excludes";
}

const Feature* FeatureModel::find(std::string_view feature) const {
  auto it = features.find(std::string(feature));
  return it == features.end() ? nullptr : &it->second;
}

std::vector<std::string> FeatureModel::preorder() const {
  std::vector<std::string> order;
  if (!find(root)) return order;
  const SyntaxNode tree = feature_tree(*this);
  return traverse_depth_first(tree);
}

namespace {

const std::vector<std::string_view> kReserved = {
    "featuremodel", "root", "feature", "mandatory", "optional", "xor", "requires", "excludes",
};

struct RawDefinition {
  Token name;
  SourceSpan span;
  std::vector<ChildGroup> groups;
};

struct RawModel {
  Token name;
  Token root;
  std::vector<RawDefinition> definitions;
  std::vector<CrossConstraint> constraints;
  SourceSpan span;
};

ChildGroup parse_group(TokenStream& ts) {
  ChildGroup g;
  const Token head = ts.next();
  if (head.text == "xor") {
    g.kind = GroupKind::alternative;
    ts.expect(TokenKind::lbrace, "'{' after 'xor'");
    do {
      const Token child = ts.expect_name("an alternative feature");
      g.children.push_back(child.text);
      g.child_spans.push_back(child.span);
    } while (ts.accept(TokenKind::comma));
    const Token close = ts.expect(TokenKind::rbrace, "',' or '}' in xor group");
    if (g.children.size() < 2) ts.fail_at(close, "xor group needs at least two alternatives");
    g.span = join(head.span, close.span);
    return g;
  }
  g.kind = head.text == "mandatory" ? GroupKind::mandatory : GroupKind::optional;
  const Token child = ts.expect_name("a child feature");
  g.children.push_back(child.text);
  g.child_spans.push_back(child.span);
  g.span = join(head.span, child.span);
  return g;
}

RawModel parse_raw(TokenStream& ts) {
  RawModel m;
  const Token head = ts.expect_keyword("featuremodel");
  m.name = ts.expect_name("the feature model");
  ts.expect(TokenKind::lbrace, "'{'");
  ts.expect_keyword("root");
  m.root = ts.expect_name("the root feature");
  while (ts.at_keyword("feature")) {
    RawDefinition def;
    const Token kw = ts.next();
    def.name = ts.expect_name("a feature");
    ts.expect(TokenKind::lbrace, "'{' after feature name");
    while (ts.at_keyword("mandatory") || ts.at_keyword("optional") || ts.at_keyword("xor")) {
      def.groups.push_back(parse_group(ts));
    }
    const Token close =
        ts.expect(TokenKind::rbrace, "'mandatory', 'optional', 'xor' or '}' in feature block");
    def.span = join(kw.span, close.span);
    m.definitions.push_back(std::move(def));
  }
  while (ts.at(TokenKind::identifier) && !ts.is_reserved(ts.peek().text)) {
    CrossConstraint c;
    const Token lhs = ts.next();
    if (ts.at_keyword("requires")) {
      c.kind = ConstraintKind::require;
    } else if (ts.at_keyword("excludes")) {
      c.kind = ConstraintKind::exclude;
    } else {
      ts.fail("expected 'requires' or 'excludes' after '" + lhs.text + "'");
    }
    ts.next();
    const Token rhs = ts.expect_name("a feature");
    c.lhs = lhs.text;
    c.rhs = rhs.text;
    c.span = join(lhs.span, rhs.span);
    if (c.lhs == c.rhs) ts.fail_at(lhs, "constraint relates '" + c.lhs + "' to itself");
    m.constraints.push_back(std::move(c));
  }
  if (ts.at_keyword("feature")) ts.fail("feature blocks must precede constraints");
  const Token close = ts.expect(TokenKind::rbrace, "a constraint or '}'");
  m.span = join(head.span, close.span);
  if (!ts.at_end()) ts.fail("unexpected input after the feature model");
  return m;
}

// Context conditions: unique definitions, single parent, rooted, acyclic.
std::optional<FeatureModel> build(RawModel raw, Diagnostics& diags) {
  FeatureModel fm;
  fm.name = raw.name.text;
  fm.root = raw.root.text;
  fm.span = raw.span;
  fm.constraints = std::move(raw.constraints);

  auto mention = [&](const std::string& name, const SourceSpan& span) -> Feature& {
    auto [it, inserted] = fm.features.try_emplace(name);
    if (inserted) {
      it->second.name = name;
      it->second.span = span;
    }
    return it->second;
  };
  mention(fm.root, raw.root.span);

  const std::size_t errors_before = count_errors(diags);
  std::set<std::string> defined;
  std::vector<const RawDefinition*> accepted;
  for (const auto& def : raw.definitions) {
    if (!defined.insert(def.name.text).second) {
      diags.push_back(make_error(codes::kDuplicateFeature,
                                 "feature '" + def.name.text + "' is defined more than once",
                                 def.name.span));
      continue;
    }
    Feature& f = mention(def.name.text, def.name.span);
    f.definition = def.span;
    f.definition_index = static_cast<int>(accepted.size());
    accepted.push_back(&def);
  }

  for (const RawDefinition* def : accepted) {
    const std::string& parent = def->name.text;
    std::set<std::string> seen_here;
    std::vector<ChildGroup> groups;
    for (const auto& group : def->groups) {
      for (std::size_t i = 0; i < group.children.size(); ++i) {
        const std::string& child = group.children[i];
        const SourceSpan& where = group.child_spans[i];
        if (!seen_here.insert(child).second) {
          diags.push_back(make_error(codes::kDuplicateFeature,
                                     "'" + child + "' appears twice among the children of '" +
                                         parent + "'",
                                     where));
          continue;
        }
        if (child == fm.root || child == parent) {
          diags.push_back(make_error(codes::kCycle,
                                     child == fm.root
                                         ? "root feature '" + child + "' cannot be a child"
                                         : "feature '" + child + "' is listed as its own child",
                                     where));
          continue;
        }
        Feature& f = mention(child, where);
        if (!f.parent.empty()) {
          diags.push_back(make_error(codes::kMultipleParents,
                                     "feature '" + child + "' already has parent '" + f.parent +
                                         "', cannot also be a child of '" + parent + "'",
                                     where));
          continue;
        }
        f.parent = parent;
      }
      groups.push_back(group);
    }
    fm.features[parent].groups = std::move(groups);
  }

  for (const auto& c : fm.constraints) {
    for (const auto* side : {&c.lhs, &c.rhs}) {
      if (!fm.declares(*side)) {
        diags.push_back(make_error(codes::kUnknownFeature,
                                   "constraint refers to undeclared feature '" + *side + "'",
                                   c.span));
      }
    }
  }

  if (!accepted.empty() && !defined.count(fm.root)) {
    diags.push_back(make_error(codes::kUnknownRoot,
                               "root '" + fm.root + "' has no feature block",
                               raw.root.span));
  } else {
    for (const RawDefinition* def : accepted) {
      const Feature& f = fm.features.at(def->name.text);
      if (f.name != fm.root && f.parent.empty()) {
        diags.push_back(make_error(codes::kUnknownRoot,
                                   "feature '" + f.name + "' is not attached to root '" +
                                       fm.root + "'",
                                   def->name.span));
      }
    }
  }

  if (count_errors(diags) != errors_before) return std::nullopt;

  // Every feature now has exactly one parent or is the root; anything the
  // root cannot reach sits on a parent loop.
  std::set<std::string> reachable;
  for (const auto& name : fm.preorder()) reachable.insert(name);
  std::set<std::string> reported;
  for (const RawDefinition* def : accepted) {
    const std::string& name = def->name.text;
    if (reachable.count(name) || reported.count(name)) continue;
    std::string cursor = name;
    std::vector<std::string> chain;
    bool known_loop = false;
    while (std::find(chain.begin(), chain.end(), cursor) == chain.end()) {
      if (reported.count(cursor)) {
        known_loop = true;
        break;
      }
      chain.push_back(cursor);
      cursor = fm.features.at(cursor).parent;
    }
    reported.insert(chain.begin(), chain.end());
    if (known_loop) continue;
    diags.push_back(make_error(codes::kCycle,
                               "feature '" + name + "' lies on a parent cycle unreachable from '" +
                                   fm.root + "'",
                               def->name.span));
  }
  if (count_errors(diags) != errors_before) return std::nullopt;
  return fm;
}

}  // namespace

Parsed<FeatureModel> parse_feature_model(std::string_view text, const std::string& file) {
  Parsed<FeatureModel> result;
  TokenStream ts(tokenize(text, file, result.diagnostics), kReserved);
  std::optional<RawModel> raw;
  try {
    raw = parse_raw(ts);
  } catch (const SyntaxError& err) {
    result.diagnostics.push_back(err.diagnostic());
  }
  if (raw && !has_errors(result.diagnostics)) result.value = build(std::move(*raw), result.diagnostics);
  sort_diagnostics(result.diagnostics);
  return result;
}

std::string pretty_print(const FeatureModel& fm) {
  std::string out = "featuremodel " + fm.name + " {\n  root " + fm.root + "\n";
  for (const auto& name : fm.preorder()) {
    const Feature& f = fm.features.at(name);
    if (f.groups.empty()) continue;
    out += "  feature " + name + " {\n";
    for (const auto& g : f.groups) {
      out += "    ";
      out += keyword(g.kind);
      if (g.kind == GroupKind::alternative) {
        out += " { ";
        for (std::size_t i = 0; i < g.children.size(); ++i) {
          if (i) out += ", ";
          out += g.children[i];
        }
        out += " }";
      } else {
        out += " " + g.children.front();
      }
      out += '\n';
    }
    out += "  }\n";
  }
  for (const auto& c : fm.constraints) {
    out += "  " + c.lhs + " " + std::string(keyword(c.kind)) + " " + c.rhs + "\n";
  }
  out += "}\n";
  return out;
}

bool same_structure(const FeatureModel& a, const FeatureModel& b) {
  if (a.name != b.name || a.root != b.root || a.features.size() != b.features.size() ||
      a.constraints.size() != b.constraints.size()) {
    return false;
  }
  for (const auto& [name, fa] : a.features) {
    const Feature* fb = b.find(name);
    if (!fb || fa.parent != fb->parent || fa.groups.size() != fb->groups.size()) return false;
    for (std::size_t i = 0; i < fa.groups.size(); ++i) {
      if (fa.groups[i].kind != fb->groups[i].kind ||
          fa.groups[i].children != fb->groups[i].children) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < a.constraints.size(); ++i) {
    const auto& ca = a.constraints[i];
    const auto& cb = b.constraints[i];
    if (ca.kind != cb.kind || ca.lhs != cb.lhs || ca.rhs != cb.rhs) return false;
  }
  return true;
}

SyntaxNode syntax_tree(const FeatureModel& fm) {
  SyntaxNode root{"featuremodel " + fm.name, fm.span, {}};
  std::vector<const Feature*> blocks;
  for (const auto& [name, f] : fm.features) {
    if (f.definition) blocks.push_back(&f);
  }
  std::sort(blocks.begin(), blocks.end(), [](const Feature* x, const Feature* y) {
    return x->definition_index < y->definition_index;
  });
  for (const Feature* f : blocks) {
    SyntaxNode block{"feature " + f->name, *f->definition, {}};
    for (const auto& g : f->groups) {
      SyntaxNode group{std::string(keyword(g.kind)), g.span, {}};
      for (std::size_t i = 0; i < g.children.size(); ++i) {
        group.children.push_back(SyntaxNode{g.children[i], g.child_spans[i], {}});
      }
      block.children.push_back(std::move(group));
    }
    root.children.push_back(std::move(block));
  }
  for (const auto& c : fm.constraints) {
    root.children.push_back(
        SyntaxNode{c.lhs + " " + std::string(keyword(c.kind)) + " " + c.rhs, c.span, {}});
  }
  return root;
}

SyntaxNode feature_tree(const FeatureModel& fm) {
  auto build_node = [&](auto& self, const std::string& name, int depth) -> SyntaxNode {
    const Feature& f = fm.features.at(name);
    SyntaxNode node{name, f.span, {}};
    if (depth > static_cast<int>(fm.features.size())) return node;  // malformed input guard
    for (const auto& g : f.groups) {
      for (const auto& child : g.children) {
        if (fm.declares(child)) node.children.push_back(self(self, child, depth + 1));
      }
    }
    return node;
  };
  return build_node(build_node, fm.root, 0);
}

}  // namespace hmiforge
