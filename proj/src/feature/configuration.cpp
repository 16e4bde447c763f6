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

#include "hmiforge/feature/configuration.hpp"

#include <algorithm>
#include <functional>

#include "hmiforge/core/lexer.hpp"

namespace hmiforge {

Parsed<Configuration> parse_configuration(std::string_view text, const std::string& file) {
  Parsed<Configuration> result;
  TokenStream ts(tokenize(text, file, result.diagnostics), {"configuration", "of", "select"});
  try {
    Configuration cfg;
    const Token head = ts.expect_keyword("configuration");
    cfg.name = ts.expect_name("the configuration").text;
    ts.expect_keyword("of");
    cfg.model = ts.expect_name("the feature model").text;
    ts.expect(TokenKind::lbrace, "'{'");
    if (ts.accept_keyword("select")) {
      do {
        const Token f = ts.expect_name("a feature");
        if (!cfg.selected.insert(f.text).second) {
          ts.fail_at(f, "feature '" + f.text + "' selected twice");
        }
        cfg.spans.emplace(f.text, f.span);
      } while (ts.accept(TokenKind::comma));
    }
    const Token close = ts.expect(TokenKind::rbrace, "',' or '}'");
    if (!ts.at_end()) ts.fail("unexpected input after the configuration");
    cfg.span = join(head.span, close.span);
    if (!has_errors(result.diagnostics)) result.value = std::move(cfg);
  } catch (const SyntaxError& err) {
    result.diagnostics.push_back(err.diagnostic());
  }
  return result;
}

Verdict is_valid_configuration(const FeatureModel& fm, const Configuration& cfg) {
  Verdict verdict;
  auto where = [&](const std::string& feature) -> std::optional<SourceSpan> {
    auto it = cfg.spans.find(feature);
    return it != cfg.spans.end() ? std::optional<SourceSpan>(it->second) : cfg.span;
  };
  auto violate = [&](std::string_view code, std::string message,
                     std::optional<SourceSpan> span) {
    verdict.valid = false;
    verdict.violations.push_back(make_error(code, std::move(message), std::move(span)));
  };

  if (!cfg.has(fm.root)) {
    violate(codes::kRootNotSelected, "root feature '" + fm.root + "' is not selected", cfg.span);
  }
  for (const auto& name : cfg.selected) {
    if (!fm.declares(name)) {
      violate(codes::kUnknownFeature, "'" + name + "' is not a feature of '" + fm.name + "'",
              where(name));
    }
  }
  for (const auto& name : fm.preorder()) {
    const Feature& f = fm.features.at(name);
    const bool on = cfg.has(name);
    if (on && !f.parent.empty() && !cfg.has(f.parent)) {
      violate(codes::kOrphanSelection,
              "'" + name + "' is selected but its parent '" + f.parent + "' is not", where(name));
    }
    if (!on) continue;
    for (const auto& g : f.groups) {
      if (g.kind == GroupKind::mandatory && !cfg.has(g.children.front())) {
        violate(codes::kMandatoryMissing,
                "mandatory feature '" + g.children.front() + "' of '" + name + "' is missing",
                cfg.span);
      } else if (g.kind == GroupKind::alternative) {
        const auto picked = std::count_if(g.children.begin(), g.children.end(),
                                          [&](const std::string& c) { return cfg.has(c); });
        if (picked != 1) {
          std::string list;
          for (const auto& c : g.children) list += (list.empty() ? "" : ", ") + c;
          violate(codes::kXorViolation,
                  "exactly one of {" + list + "} under '" + name + "' must be selected, found " +
                      std::to_string(picked),
                  cfg.span);
        }
      }
    }
  }
  for (const auto& c : fm.constraints) {
    if (c.kind == ConstraintKind::require && cfg.has(c.lhs) && !cfg.has(c.rhs)) {
      violate(codes::kRequiresViolation,
              "'" + c.lhs + "' requires '" + c.rhs + "', which is not selected", where(c.lhs));
    } else if (c.kind == ConstraintKind::exclude && cfg.has(c.lhs) && cfg.has(c.rhs)) {
      violate(codes::kExcludesViolation,
              "'" + c.lhs + "' excludes '" + c.rhs + "', but both are selected", where(c.lhs));
    }
  }
  return verdict;
}

std::vector<Configuration> enumerate_configurations(const FeatureModel& fm, std::size_t cap) {
  if (fm.features.size() > cap) {
    throw DiagnosticError(make_error(
        codes::kTooLarge, "feature model '" + fm.name + "' has " +
                              std::to_string(fm.features.size()) +
                              " features; enumeration is capped at " + std::to_string(cap),
        fm.span));
  }

  // Walk the tree top-down, branching on each selected feature's groups;
  // the tree rules hold by construction, so only cross-tree constraints are
  // filtered at the leaves of the search.
  const std::vector<std::string> order = fm.preorder();
  std::set<std::string> chosen{fm.root};
  std::vector<std::vector<std::string>> found;

  auto satisfies_constraints = [&] {
    return std::all_of(fm.constraints.begin(), fm.constraints.end(), [&](const CrossConstraint& c) {
      const bool l = chosen.count(c.lhs) != 0;
      const bool r = chosen.count(c.rhs) != 0;
      return c.kind == ConstraintKind::require ? (!l || r) : !(l && r);
    });
  };

  std::function<void(std::size_t)> visit_feature;
  std::function<void(const Feature&, std::size_t, std::size_t)> visit_group;

  visit_feature = [&](std::size_t index) {
    if (index == order.size()) {
      if (satisfies_constraints()) found.emplace_back(chosen.begin(), chosen.end());
      return;
    }
    const Feature& f = fm.features.at(order[index]);
    if (!chosen.count(f.name)) {
      visit_feature(index + 1);
      return;
    }
    visit_group(f, 0, index);
  };

  visit_group = [&](const Feature& f, std::size_t group, std::size_t index) {
    if (group == f.groups.size()) {
      visit_feature(index + 1);
      return;
    }
    const ChildGroup& g = f.groups[group];
    switch (g.kind) {
      case GroupKind::mandatory:
        chosen.insert(g.children.front());
        visit_group(f, group + 1, index);
        chosen.erase(g.children.front());
        break;
      case GroupKind::optional:
        visit_group(f, group + 1, index);
        chosen.insert(g.children.front());
        visit_group(f, group + 1, index);
        chosen.erase(g.children.front());
        break;
      case GroupKind::alternative:
        for (const auto& alt : g.children) {
          chosen.insert(alt);
          visit_group(f, group + 1, index);
          chosen.erase(alt);
        }
        break;
    }
  };

  visit_feature(0);
  std::sort(found.begin(), found.end());

  std::vector<Configuration> out;
  out.reserve(found.size());
  for (auto& members : found) {
    out.emplace_back(std::set<std::string>(members.begin(), members.end()));
  }
  return out;
}

std::size_t count_configurations(const FeatureModel& fm, std::size_t cap) {
  return enumerate_configurations(fm, cap).size();
}

std::string format_selection(const Configuration& cfg) {
  std::string out;
  for (const auto& name : cfg.selected) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

}  // namespace hmiforge
