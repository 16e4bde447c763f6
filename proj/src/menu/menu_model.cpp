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

#include "hmiforge/menu/menu_model.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hmiforge/core/lexer.hpp"

namespace hmiforge {

std::string_view keyword(TargetKind kind) {
  switch (kind) {
    case TargetKind::menu:
      return "menu";
    case TargetKind::dialog:
      return "dialog";
    case TargetKind::action:
      return "action";
    case TargetKind::back:
      return "back";
  }
  return "back";
}

std::string Target::to_string() const {
  if (kind == TargetKind::back) return "back";
  return std::string(keyword(kind)) + " " + name;
}

std::size_t Menu::entry_count() const {
  return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const MenuItem& i) {
    return std::holds_alternative<Entry>(i);
  }));
}

namespace {

template <typename T>
const T* find_named(const std::vector<T>& items, std::string_view name) {
  auto it = std::find_if(items.begin(), items.end(), [&](const T& x) { return x.name == name; });
  return it == items.end() ? nullptr : &*it;
}

const std::vector<std::string_view> kReserved = {
    "hmi",    "for",   "start", "menu",  "dialog", "statusbox", "entry", "show",
    "when",   "action", "back", "text",  "button", "label",     "init",
};

class HmiParser {
 public:
  explicit HmiParser(TokenStream& ts) : ts_(ts) {}

  HmiModel model() {
    HmiModel hm;
    const Token head = ts_.expect_keyword("hmi");
    hm.name = ts_.expect_name("the HMI model").text;
    ts_.expect_keyword("for");
    hm.for_model = ts_.expect_name("the feature model").text;
    ts_.expect(TokenKind::lbrace, "'{'");
    ts_.expect_keyword("start");
    const Token start = ts_.expect_name("the start menu");
    hm.start = start.text;
    hm.start_span = start.span;
    for (;;) {
      if (ts_.at_keyword("menu")) {
        hm.menus.push_back(menu());
      } else if (ts_.at_keyword("dialog")) {
        hm.dialogs.push_back(dialog());
      } else if (ts_.at_keyword("statusbox")) {
        hm.statusboxes.push_back(statusbox());
      } else {
        break;
      }
    }
    const Token close = ts_.expect(TokenKind::rbrace, "'menu', 'dialog', 'statusbox' or '}'");
    if (!ts_.at_end()) ts_.fail("unexpected input after the HMI model");
    hm.span = join(head.span, close.span);
    return hm;
  }

 private:
  std::optional<FeatureExpr> presence() {
    if (!ts_.accept_keyword("when")) return std::nullopt;
    return parse_feature_expr(ts_);
  }

  Target target() {
    const Token head = ts_.expect(TokenKind::identifier, "a target");
    Target t;
    if (head.text == "back") {
      t.kind = TargetKind::back;
      t.span = head.span;
      return t;
    }
    if (head.text == "menu") {
      t.kind = TargetKind::menu;
    } else if (head.text == "dialog") {
      t.kind = TargetKind::dialog;
    } else if (head.text == "action") {
      t.kind = TargetKind::action;
    } else {
      ts_.fail_at(head, "expected 'menu', 'dialog', 'action' or 'back' as target, found '" +
                            head.text + "'");
    }
    const Token name = ts_.expect_name("the target");
    t.name = name.text;
    t.span = join(head.span, name.span);
    return t;
  }

  std::string label(std::string_view what) {
    const Token s = ts_.expect(TokenKind::string, what);
    if (s.text.empty()) ts_.fail_at(s, std::string(what) + " must not be empty");
    return s.text;
  }

  Menu menu() {
    Menu m;
    const Token kw = ts_.next();
    const Token name = ts_.expect_name("a menu");
    m.name = name.text;
    m.name_span = name.span;
    m.presence = presence();
    ts_.expect(TokenKind::lbrace, "'{' to open menu '" + m.name + "'");
    for (;;) {
      if (ts_.at_keyword("entry")) {
        Entry e;
        const Token ekw = ts_.next();
        e.label = label("entry label");
        e.presence = presence();
        ts_.expect(TokenKind::arrow, "'->'");
        e.target = target();
        e.span = join(ekw.span, e.target.span);
        m.items.emplace_back(std::move(e));
      } else if (ts_.at_keyword("show")) {
        const Token skw = ts_.next();
        const Token box = ts_.expect_name("a status box");
        m.items.emplace_back(StatusRef{box.text, join(skw.span, box.span)});
      } else {
        break;
      }
    }
    const Token close = ts_.expect(TokenKind::rbrace, "'entry', 'show' or '}'");
    if (m.entry_count() == 0) ts_.fail_at(name, "menu '" + m.name + "' has no entry");
    m.span = join(kw.span, close.span);
    return m;
  }

  Dialog dialog() {
    Dialog d;
    const Token kw = ts_.next();
    const Token name = ts_.expect_name("a dialog");
    d.name = name.text;
    d.name_span = name.span;
    d.presence = presence();
    ts_.expect(TokenKind::lbrace, "'{' to open dialog '" + d.name + "'");
    ts_.expect_keyword("text");
    d.text = ts_.expect(TokenKind::string, "dialog text").text;
    while (ts_.at_keyword("button")) {
      Button b;
      const Token bkw = ts_.next();
      b.label = label("button label");
      ts_.expect(TokenKind::arrow, "'->'");
      b.target = target();
      b.span = join(bkw.span, b.target.span);
      d.buttons.push_back(std::move(b));
    }
    const Token close = ts_.expect(TokenKind::rbrace, "'button' or '}'");
    if (d.buttons.empty()) ts_.fail_at(name, "dialog '" + d.name + "' has no button");
    d.span = join(kw.span, close.span);
    return d;
  }

  StatusBox statusbox() {
    StatusBox s;
    const Token kw = ts_.next();
    const Token name = ts_.expect_name("a status box");
    s.name = name.text;
    s.name_span = name.span;
    ts_.expect(TokenKind::lbrace, "'{' to open status box '" + s.name + "'");
    ts_.expect_keyword("label");
    s.label = label("status box label");
    ts_.expect_keyword("init");
    s.init = ts_.expect(TokenKind::string, "initial value").text;
    const Token close = ts_.expect(TokenKind::rbrace, "'}'");
    s.span = join(kw.span, close.span);
    return s;
  }

  TokenStream& ts_;
};

void check_names(const HmiModel& hm, Diagnostics& diags) {
  std::map<std::string, SourceSpan> seen;
  auto claim = [&](const std::string& name, const SourceSpan& span, std::string_view kind) {
    auto [it, inserted] = seen.emplace(name, span);
    if (!inserted) {
      diags.push_back(make_error(codes::kDuplicateName,
                                 std::string(kind) + " '" + name + "' reuses a name declared at " +
                                     std::to_string(it->second.start_line) + ":" +
                                     std::to_string(it->second.start_col),
                                 span));
    }
  };
  for (const auto& m : hm.menus) claim(m.name, m.name_span, "menu");
  for (const auto& d : hm.dialogs) claim(d.name, d.name_span, "dialog");
  for (const auto& s : hm.statusboxes) claim(s.name, s.name_span, "status box");
  if (!hm.find_menu(hm.start)) {
    diags.push_back(make_error(codes::kNoStart,
                               "start menu '" + hm.start + "' is not declared as a menu",
                               hm.start_span));
  }
}

void print_presence(const std::optional<FeatureExpr>& p, std::string& out) {
  if (p) out += " when " + to_string(*p);
}

bool same_presence(const std::optional<FeatureExpr>& a, const std::optional<FeatureExpr>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || same_structure(*a, *b);
}

bool same_target(const Target& a, const Target& b) { return a.kind == b.kind && a.name == b.name; }

}  // namespace

const Menu* HmiModel::find_menu(std::string_view n) const { return find_named(menus, n); }
const Dialog* HmiModel::find_dialog(std::string_view n) const { return find_named(dialogs, n); }
const StatusBox* HmiModel::find_statusbox(std::string_view n) const {
  return find_named(statusboxes, n);
}

Parsed<HmiModel> parse_hmi_model(std::string_view text, const std::string& file) {
  Parsed<HmiModel> result;
  TokenStream ts(tokenize(text, file, result.diagnostics), kReserved);
  std::optional<HmiModel> hm;
  try {
    hm = HmiParser(ts).model();
  } catch (const SyntaxError& err) {
    result.diagnostics.push_back(err.diagnostic());
  }
  if (hm && !has_errors(result.diagnostics)) {
    check_names(*hm, result.diagnostics);
    if (!has_errors(result.diagnostics)) result.value = std::move(hm);
  }
  sort_diagnostics(result.diagnostics);
  return result;
}

Diagnostics check_hmi_model(const HmiModel& hm) {
  Diagnostics diags;
  auto resolve = [&](const Target& t, const SourceSpan& site) {
    if (t.kind == TargetKind::menu && !hm.find_menu(t.name)) {
      diags.push_back(make_error(codes::kUnresolvedTarget,
                                 "target menu '" + t.name + "' is not declared", site));
    } else if (t.kind == TargetKind::dialog && !hm.find_dialog(t.name)) {
      diags.push_back(make_error(codes::kUnresolvedTarget,
                                 "target dialog '" + t.name + "' is not declared", site));
    }
  };
  for (const auto& m : hm.menus) {
    for (const auto& item : m.items) {
      if (const auto* e = std::get_if<Entry>(&item)) {
        resolve(e->target, e->span);
      } else {
        const auto& ref = std::get<StatusRef>(item);
        if (!hm.find_statusbox(ref.statusbox)) {
          diags.push_back(make_error(codes::kUnresolvedTarget,
                                     "status box '" + ref.statusbox + "' is not declared",
                                     ref.span));
        }
      }
    }
  }
  for (const auto& d : hm.dialogs) {
    for (const auto& b : d.buttons) resolve(b.target, b.span);
  }

  // An element nothing targets can never be shown. Presence conditions are
  // ignored; chains of orphans are left to pruning, which drops them.
  std::set<std::string> reached{hm.start};
  auto enqueue = [&](const Target& t) {
    if (t.kind == TargetKind::menu || t.kind == TargetKind::dialog) reached.insert(t.name);
  };
  for (const auto& m : hm.menus) {
    for (const auto& item : m.items) {
      if (const auto* e = std::get_if<Entry>(&item)) enqueue(e->target);
    }
  }
  for (const auto& d : hm.dialogs) {
    for (const auto& b : d.buttons) enqueue(b.target);
  }
  for (const auto& m : hm.menus) {
    if (!reached.count(m.name)) {
      diags.push_back(make_warning(codes::kUnreachable,
                                   "menu '" + m.name + "' is never targeted",
                                   m.name_span));
    }
  }
  for (const auto& d : hm.dialogs) {
    if (!reached.count(d.name)) {
      diags.push_back(make_warning(codes::kUnreachable,
                                   "dialog '" + d.name + "' is never targeted",
                                   d.name_span));
    }
  }
  sort_diagnostics(diags);
  return diags;
}

std::string pretty_print(const HmiModel& hm) {
  std::string out = "hmi " + hm.name + " for " + hm.for_model + " {\n";
  out += "  start " + hm.start + "\n";
  for (const auto& m : hm.menus) {
    out += "  menu " + m.name;
    print_presence(m.presence, out);
    out += " {\n";
    for (const auto& item : m.items) {
      if (const auto* e = std::get_if<Entry>(&item)) {
        out += "    entry " + quote(e->label);
        print_presence(e->presence, out);
        out += " -> " + e->target.to_string() + "\n";
      } else {
        out += "    show " + std::get<StatusRef>(item).statusbox + "\n";
      }
    }
    out += "  }\n";
  }
  for (const auto& d : hm.dialogs) {
    out += "  dialog " + d.name;
    print_presence(d.presence, out);
    out += " {\n    text " + quote(d.text) + "\n";
    for (const auto& b : d.buttons) {
      out += "    button " + quote(b.label) + " -> " + b.target.to_string() + "\n";
    }
    out += "  }\n";
  }
  for (const auto& s : hm.statusboxes) {
    out += "  statusbox " + s.name + " {\n";
    out += "    label " + quote(s.label) + "\n";
    out += "    init " + quote(s.init) + "\n";
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

bool same_structure(const HmiModel& a, const HmiModel& b) {
  if (a.name != b.name || a.for_model != b.for_model || a.start != b.start ||
      a.menus.size() != b.menus.size() || a.dialogs.size() != b.dialogs.size() ||
      a.statusboxes.size() != b.statusboxes.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.menus.size(); ++i) {
    const Menu& x = a.menus[i];
    const Menu& y = b.menus[i];
    if (x.name != y.name || !same_presence(x.presence, y.presence) ||
        x.items.size() != y.items.size()) {
      return false;
    }
    for (std::size_t k = 0; k < x.items.size(); ++k) {
      const auto* ex = std::get_if<Entry>(&x.items[k]);
      const auto* ey = std::get_if<Entry>(&y.items[k]);
      if ((ex == nullptr) != (ey == nullptr)) return false;
      if (ex) {
        if (ex->label != ey->label || !same_presence(ex->presence, ey->presence) ||
            !same_target(ex->target, ey->target)) {
          return false;
        }
      } else if (std::get<StatusRef>(x.items[k]).statusbox !=
                 std::get<StatusRef>(y.items[k]).statusbox) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < a.dialogs.size(); ++i) {
    const Dialog& x = a.dialogs[i];
    const Dialog& y = b.dialogs[i];
    if (x.name != y.name || x.text != y.text || !same_presence(x.presence, y.presence) ||
        x.buttons.size() != y.buttons.size()) {
      return false;
    }
    for (std::size_t k = 0; k < x.buttons.size(); ++k) {
      if (x.buttons[k].label != y.buttons[k].label ||
          !same_target(x.buttons[k].target, y.buttons[k].target)) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < a.statusboxes.size(); ++i) {
    const StatusBox& x = a.statusboxes[i];
    const StatusBox& y = b.statusboxes[i];
    if (x.name != y.name || x.label != y.label || x.init != y.init) return false;
  }
  return true;
}

SyntaxNode syntax_tree(const HmiModel& hm) {
  SyntaxNode root{"hmi " + hm.name, hm.span, {}};
  for (const auto& m : hm.menus) {
    SyntaxNode node{"menu " + m.name, m.span, {}};
    for (const auto& item : m.items) {
      if (const auto* e = std::get_if<Entry>(&item)) {
        node.children.push_back(SyntaxNode{"entry " + quote(e->label), e->span, {}});
      } else {
        const auto& ref = std::get<StatusRef>(item);
        node.children.push_back(SyntaxNode{"show " + ref.statusbox, ref.span, {}});
      }
    }
    root.children.push_back(std::move(node));
  }
  for (const auto& d : hm.dialogs) {
    SyntaxNode node{"dialog " + d.name, d.span, {}};
    for (const auto& b : d.buttons) {
      node.children.push_back(SyntaxNode{"button " + quote(b.label), b.span, {}});
    }
    root.children.push_back(std::move(node));
  }
  for (const auto& s : hm.statusboxes) {
    root.children.push_back(SyntaxNode{"statusbox " + s.name, s.span, {}});
  }
  std::stable_sort(root.children.begin(), root.children.end(),
                   [](const SyntaxNode& x, const SyntaxNode& y) {
                     return std::pair(x.span.start_line, x.span.start_col) <
                            std::pair(y.span.start_line, y.span.start_col);
                   });
  return root;
}

}  // namespace hmiforge
