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

#include "hmiforge/gen/program.hpp"

#include <algorithm>

namespace hmiforge {

std::vector<const ProgramEntry*> Screen::entries() const {
  std::vector<const ProgramEntry*> out;
  for (const auto& item : items) {
    if (const auto* e = std::get_if<ProgramEntry>(&item)) out.push_back(e);
  }
  return out;
}

namespace {

void bad(Diagnostics& diags, std::string message) {
  diags.push_back(make_error(codes::kBadProgram, std::move(message)));
}

[[noreturn]] void malformed(const std::string& message) {
  throw DiagnosticError(make_error(codes::kBadProgram, "malformed program: " + message));
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text_field(const nlohmann::json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

const nlohmann::json& array_field(const nlohmann::json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) malformed(std::string("field '") + key + "' must be an array");
  return v;
}

const nlohmann::json& object_field(const nlohmann::json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_object()) malformed(std::string("field '") + key + "' must be an object");
  return v;
}

ProgramTarget target_from_json(const nlohmann::json& j) {
  const std::string kind = text_field(j, "kind");
  ProgramTarget t;
  if (kind == "back") {
    t.kind = TargetKind::back;
    return t;
  }
  if (kind == "menu") {
    t.kind = TargetKind::menu;
  } else if (kind == "dialog") {
    t.kind = TargetKind::dialog;
  } else if (kind == "action") {
    t.kind = TargetKind::action;
  } else {
    malformed("unknown target kind '" + kind + "'");
  }
  t.name = text_field(j, "name");
  return t;
}

}  // namespace

Diagnostics validate_program(const HmiProgram& p) {
  Diagnostics diags;
  if (!p.screens.count(p.start)) bad(diags, "start screen '" + p.start + "' does not exist");
  if (!std::is_sorted(p.configuration.begin(), p.configuration.end()) ||
      std::adjacent_find(p.configuration.begin(), p.configuration.end()) !=
          p.configuration.end()) {
    bad(diags, "configuration must be sorted and duplicate-free");
  }
  auto check_target = [&](const ProgramTarget& t, const std::string& where) {
    switch (t.kind) {
      case TargetKind::menu:
        if (!p.screens.count(t.name)) bad(diags, where + " targets unknown screen '" + t.name + "'");
        break;
      case TargetKind::dialog:
        if (!p.dialogs.count(t.name)) bad(diags, where + " targets unknown dialog '" + t.name + "'");
        break;
      case TargetKind::action:
        if (!p.bindings.count(t.name)) bad(diags, where + " fires unbound action '" + t.name + "'");
        break;
      case TargetKind::back:
        break;
    }
  };
  for (const auto& [name, screen] : p.screens) {
    if (screen.name != name) bad(diags, "screen key '" + name + "' does not match its name");
    if (screen.entries().empty()) bad(diags, "screen '" + name + "' has no entries");
    for (const auto& item : screen.items) {
      if (const auto* e = std::get_if<ProgramEntry>(&item)) {
        check_target(e->target, "entry '" + e->label + "' of screen '" + name + "'");
      } else if (!p.statusboxes.count(std::get<ProgramStatus>(item).statusbox)) {
        bad(diags, "screen '" + name + "' shows unknown status box '" +
                       std::get<ProgramStatus>(item).statusbox + "'");
      }
    }
  }
  for (const auto& [name, dialog] : p.dialogs) {
    if (dialog.name != name) bad(diags, "dialog key '" + name + "' does not match its name");
    if (dialog.buttons.empty()) bad(diags, "dialog '" + name + "' has no buttons");
    for (const auto& b : dialog.buttons) {
      check_target(b.target, "button '" + b.label + "' of dialog '" + name + "'");
    }
  }
  for (const auto& [name, box] : p.statusboxes) {
    if (box.name != name) bad(diags, "status box key '" + name + "' does not match its name");
  }
  for (const auto& [action, effects] : p.bindings) {
    for (const auto& e : effects) {
      if (!p.statusboxes.count(e.statusbox)) {
        bad(diags, "action '" + action + "' sets unknown status box '" + e.statusbox + "'");
      }
    }
  }
  return diags;
}

nlohmann::json to_json(const ProgramTarget& target) {
  nlohmann::json j = {{"kind", keyword(target.kind)}};
  if (target.kind != TargetKind::back) j["name"] = target.name;
  return j;
}

nlohmann::json to_json(const Effect& effect) {
  return {{"kind", "set_status"}, {"statusbox", effect.statusbox}, {"value", effect.value}};
}

nlohmann::json to_json(const HmiProgram& p) {
  nlohmann::json screens = nlohmann::json::object();
  for (const auto& [name, screen] : p.screens) {
    auto items = nlohmann::json::array();
    for (const auto& item : screen.items) {
      if (const auto* e = std::get_if<ProgramEntry>(&item)) {
        items.push_back({{"kind", "entry"}, {"label", e->label}, {"target", to_json(e->target)}});
      } else {
        items.push_back({{"kind", "status"}, {"statusbox", std::get<ProgramStatus>(item).statusbox}});
      }
    }
    screens[name] = {{"name", name}, {"items", std::move(items)}};
  }
  nlohmann::json dialogs = nlohmann::json::object();
  for (const auto& [name, d] : p.dialogs) {
    auto buttons = nlohmann::json::array();
    for (const auto& b : d.buttons) {
      buttons.push_back({{"label", b.label}, {"target", to_json(b.target)}});
    }
    dialogs[name] = {{"name", name}, {"text", d.text}, {"buttons", std::move(buttons)}};
  }
  nlohmann::json boxes = nlohmann::json::object();
  for (const auto& [name, s] : p.statusboxes) {
    boxes[name] = {{"name", name}, {"label", s.label}, {"init", s.init}};
  }
  nlohmann::json bindings = nlohmann::json::object();
  for (const auto& [action, effects] : p.bindings) {
    auto arr = nlohmann::json::array();
    for (const auto& e : effects) arr.push_back(to_json(e));
    bindings[action] = std::move(arr);
  }
  return {{"name", p.name},
          {"configuration", p.configuration},
          {"start", p.start},
          {"screens", std::move(screens)},
          {"dialogs", std::move(dialogs)},
          {"statusboxes", std::move(boxes)},
          {"bindings", std::move(bindings)},
          {"formatVersion", kProgramFormatVersion}};
}

std::string emit_program(const HmiProgram& program) { return to_json(program).dump(2) + "\n"; }

HmiProgram program_from_json(const nlohmann::json& j) {
  if (text_field(j, "formatVersion") != kProgramFormatVersion) {
    malformed("unsupported formatVersion '" + text_field(j, "formatVersion") + "'");
  }
  HmiProgram p;
  p.name = text_field(j, "name");
  p.start = text_field(j, "start");
  for (const auto& f : array_field(j, "configuration")) {
    if (!f.is_string()) malformed("configuration entries must be strings");
    p.configuration.push_back(f.get<std::string>());
  }
  for (const auto& [name, s] : object_field(j, "screens").items()) {
    Screen screen;
    screen.name = text_field(s, "name");
    for (const auto& item : array_field(s, "items")) {
      const std::string kind = text_field(item, "kind");
      if (kind == "entry") {
        screen.items.emplace_back(
            ProgramEntry{text_field(item, "label"), target_from_json(field(item, "target"))});
      } else if (kind == "status") {
        screen.items.emplace_back(ProgramStatus{text_field(item, "statusbox")});
      } else {
        malformed("unknown screen item kind '" + kind + "'");
      }
    }
    p.screens.emplace(name, std::move(screen));
  }
  for (const auto& [name, d] : object_field(j, "dialogs").items()) {
    ProgramDialog dialog{text_field(d, "name"), text_field(d, "text"), {}};
    for (const auto& b : array_field(d, "buttons")) {
      dialog.buttons.push_back(
          ProgramButton{text_field(b, "label"), target_from_json(field(b, "target"))});
    }
    p.dialogs.emplace(name, std::move(dialog));
  }
  for (const auto& [name, s] : object_field(j, "statusboxes").items()) {
    p.statusboxes.emplace(
        name, ProgramStatusBox{text_field(s, "name"), text_field(s, "label"), text_field(s, "init")});
  }
  for (const auto& [action, effects] : object_field(j, "bindings").items()) {
    if (!effects.is_array()) malformed("binding '" + action + "' must be an array");
    auto& list = p.bindings[action];
    for (const auto& e : effects) {
      if (text_field(e, "kind") != "set_status") malformed("unknown effect kind");
      list.push_back(Effect{text_field(e, "statusbox"), text_field(e, "value"), {}});
    }
  }
  return p;
}

HmiProgram parse_program(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    malformed(err.what());
  }
  return program_from_json(j);
}

}  // namespace hmiforge
