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

#include "hmiforge/gen/prune.hpp"

#include <deque>
#include <map>
#include <set>

namespace hmiforge {

std::string ElementRef::to_string() const {
  switch (kind) {
    case Kind::menu:
      return "menu:" + name;
    case Kind::dialog:
      return "dialog:" + name;
    case Kind::entry:
      return "entry:" + name + "#" + std::to_string(index);
  }
  return name;
}

std::vector<ElementRef> elements_of(const HmiModel& hm) {
  std::vector<ElementRef> out;
  for (const auto& m : hm.menus) {
    out.push_back({ElementRef::Kind::menu, m.name, 0});
    for (std::size_t i = 0; i < m.entry_count(); ++i) {
      out.push_back({ElementRef::Kind::entry, m.name, i});
    }
  }
  for (const auto& d : hm.dialogs) out.push_back({ElementRef::Kind::dialog, d.name, 0});
  return out;
}

const std::optional<FeatureExpr>* presence_of(const HmiModel& hm, const ElementRef& ref) {
  switch (ref.kind) {
    case ElementRef::Kind::menu: {
      const Menu* m = hm.find_menu(ref.name);
      return m ? &m->presence : nullptr;
    }
    case ElementRef::Kind::dialog: {
      const Dialog* d = hm.find_dialog(ref.name);
      return d ? &d->presence : nullptr;
    }
    case ElementRef::Kind::entry: {
      const Menu* m = hm.find_menu(ref.name);
      if (!m) return nullptr;
      std::size_t n = 0;
      for (const auto& item : m->items) {
        if (const auto* e = std::get_if<Entry>(&item)) {
          if (n++ == ref.index) return &e->presence;
        }
      }
      return nullptr;
    }
  }
  return nullptr;
}

namespace {

bool present(const std::optional<FeatureExpr>& presence, const Configuration& cfg) {
  return !presence || eval_feature_expr(*presence, cfg.selected);
}

}  // namespace

PruneResult prune(const HmiModel& hm, const FeatureModel& /*fm*/, const Configuration& cfg) {
  PruneResult result;
  Diagnostics& diags = result.diagnostics;

  std::set<std::string> dropped;  // menus and dialogs whose condition is false
  for (const auto& m : hm.menus) {
    if (!present(m.presence, cfg)) dropped.insert(m.name);
  }
  for (const auto& d : hm.dialogs) {
    if (!present(d.presence, cfg)) dropped.insert(d.name);
  }

  auto element_span = [&](const Target& t) -> std::optional<SourceSpan> {
    if (t.kind == TargetKind::menu) {
      if (const Menu* m = hm.find_menu(t.name)) return m->name_span;
    } else if (t.kind == TargetKind::dialog) {
      if (const Dialog* d = hm.find_dialog(t.name)) return d->name_span;
    }
    return std::nullopt;
  };
  auto check_target = [&](const Target& t, const SourceSpan& site, const std::string& what) {
    if ((t.kind != TargetKind::menu && t.kind != TargetKind::dialog) || !dropped.count(t.name)) {
      return;
    }
    Diagnostic d = make_error(codes::kPrunedTarget,
                              what + " targets " + t.to_string() +
                                  ", which this configuration removes",
                              site);
    d.related.push_back(make_info(codes::kPrunedTarget,
                                  std::string(keyword(t.kind)) + " '" + t.name +
                                      "' is declared here with a false presence condition",
                                  element_span(t)));
    diags.push_back(std::move(d));
  };

  // Survivors with conditions stripped.
  HmiModel out;
  out.name = hm.name;
  out.for_model = hm.for_model;
  out.start = hm.start;
  out.start_span = hm.start_span;
  out.span = hm.span;
  out.statusboxes = hm.statusboxes;

  std::map<ElementRef, PruneReason> removed;
  for (const auto& m : hm.menus) {
    if (dropped.count(m.name)) {
      removed[{ElementRef::Kind::menu, m.name, 0}] = PruneReason::presence;
      for (std::size_t i = 0; i < m.entry_count(); ++i) {
        removed[{ElementRef::Kind::entry, m.name, i}] = PruneReason::container;
      }
      continue;
    }
    Menu copy = m;
    copy.presence.reset();
    copy.items.clear();
    std::size_t index = 0;
    for (const auto& item : m.items) {
      if (const auto* e = std::get_if<Entry>(&item)) {
        const std::size_t i = index++;
        if (!present(e->presence, cfg)) {
          removed[{ElementRef::Kind::entry, m.name, i}] = PruneReason::presence;
          continue;
        }
        check_target(e->target, e->span, "entry \"" + e->label + "\"");
        Entry kept = *e;
        kept.presence.reset();
        copy.items.emplace_back(std::move(kept));
      } else {
        copy.items.push_back(item);
      }
    }
    out.menus.push_back(std::move(copy));
  }
  for (const auto& d : hm.dialogs) {
    if (dropped.count(d.name)) {
      removed[{ElementRef::Kind::dialog, d.name, 0}] = PruneReason::presence;
      continue;
    }
    for (const auto& b : d.buttons) check_target(b.target, b.span, "button \"" + b.label + "\"");
    Dialog copy = d;
    copy.presence.reset();
    out.dialogs.push_back(std::move(copy));
  }
  if (dropped.count(hm.start) && hm.find_menu(hm.start)) {
    diags.push_back(make_error(codes::kStartPruned,
                               "start menu '" + hm.start + "' is removed by this configuration",
                               hm.start_span));
  }
  if (has_errors(diags)) {
    sort_diagnostics(diags);
    return result;
  }

  // Drop what the start menu no longer reaches.
  std::set<std::string> reached{out.start};
  std::deque<std::string> queue{out.start};
  auto follow = [&](const Target& t) {
    if ((t.kind == TargetKind::menu || t.kind == TargetKind::dialog) && reached.insert(t.name).second) {
      queue.push_back(t.name);
    }
  };
  while (!queue.empty()) {
    const std::string name = queue.front();
    queue.pop_front();
    if (const Menu* m = out.find_menu(name)) {
      for (const auto& item : m->items) {
        if (const auto* e = std::get_if<Entry>(&item)) follow(e->target);
      }
    } else if (const Dialog* d = out.find_dialog(name)) {
      for (const auto& b : d->buttons) follow(b.target);
    }
  }
  std::vector<Menu> menus;
  for (auto& m : out.menus) {
    if (reached.count(m.name)) {
      menus.push_back(std::move(m));
      continue;
    }
    diags.push_back(make_warning(codes::kPrunedUnreachable,
                                 "menu '" + m.name + "' is unreachable under this configuration",
                                 m.name_span));
    removed[{ElementRef::Kind::menu, m.name, 0}] = PruneReason::unreachable;
    const Menu& original = *hm.find_menu(m.name);
    for (std::size_t i = 0; i < original.entry_count(); ++i) {
      removed.emplace(ElementRef{ElementRef::Kind::entry, m.name, i}, PruneReason::container);
    }
  }
  out.menus = std::move(menus);
  std::vector<Dialog> dialogs;
  for (auto& d : out.dialogs) {
    if (reached.count(d.name)) {
      dialogs.push_back(std::move(d));
      continue;
    }
    diags.push_back(make_warning(codes::kPrunedUnreachable,
                                 "dialog '" + d.name + "' is unreachable under this configuration",
                                 d.name_span));
    removed[{ElementRef::Kind::dialog, d.name, 0}] = PruneReason::unreachable;
  }
  out.dialogs = std::move(dialogs);

  for (const auto& m : out.menus) {
    if (m.entry_count() == 0) {
      diags.push_back(make_error(codes::kEmptyMenu,
                                 "menu '" + m.name + "' has no entries left under this configuration",
                                 m.name_span));
    }
  }
  sort_diagnostics(diags);
  if (has_errors(diags)) return result;

  for (const auto& ref : elements_of(hm)) {
    auto it = removed.find(ref);
    if (it == removed.end()) {
      result.kept.push_back(ref);
    } else {
      result.pruned.push_back({ref, it->second});
    }
  }
  result.model = std::move(out);
  return result;
}

}  // namespace hmiforge
