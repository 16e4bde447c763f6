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

#include "hmiforge/gen/manifest.hpp"

#include <algorithm>
#include <map>

#include "hmiforge/core/lexer.hpp"

namespace hmiforge {

const Handler* HandlerManifest::find(std::string_view action) const {
  auto it = std::find_if(handlers.begin(), handlers.end(),
                         [&](const Handler& h) { return h.action == action; });
  return it == handlers.end() ? nullptr : &*it;
}

Parsed<HandlerManifest> parse_handler_manifest(std::string_view text, const std::string& file) {
  Parsed<HandlerManifest> result;
  TokenStream ts(tokenize(text, file, result.diagnostics), {"handlers", "action", "set"});
  HandlerManifest manifest;
  try {
    ts.expect_keyword("handlers");
    ts.expect(TokenKind::lbrace, "'{'");
    while (ts.at_keyword("action")) {
      Handler h;
      ts.next();
      const Token name = ts.expect_name("an action");
      h.action = name.text;
      ts.expect(TokenKind::lbrace, "'{' to open action '" + h.action + "'");
      while (ts.at_keyword("set")) {
        const Token set = ts.next();
        const Token box = ts.expect_name("a status box");
        ts.expect(TokenKind::equals, "'='");
        const Token value = ts.expect(TokenKind::string, "a string value");
        h.effects.push_back(Effect{box.text, value.text, join(set.span, value.span)});
      }
      ts.expect(TokenKind::rbrace, "'set' or '}'");
      h.span = name.span;
      manifest.handlers.push_back(std::move(h));
    }
    ts.expect(TokenKind::rbrace, "'action' or '}'");
    if (!ts.at_end()) ts.fail("unexpected input after the handler manifest");
  } catch (const SyntaxError& err) {
    result.diagnostics.push_back(err.diagnostic());
    return result;
  }

  std::map<std::string, const Handler*> seen;
  for (const auto& h : manifest.handlers) {
    auto [it, inserted] = seen.emplace(h.action, &h);
    if (!inserted) {
      result.diagnostics.push_back(make_error(codes::kDuplicateHandler,
                                              "action '" + h.action + "' is defined twice",
                                              h.span));
    }
  }
  if (!has_errors(result.diagnostics)) result.value = std::move(manifest);
  return result;
}

std::string pretty_print(const HandlerManifest& manifest) {
  std::string out = "handlers {\n";
  for (const auto& h : manifest.handlers) {
    out += "  action " + h.action + " {\n";
    for (const auto& e : h.effects) out += "    set " + e.statusbox + " = " + quote(e.value) + "\n";
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

}  // namespace hmiforge
