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

#include "hmiforge/gen/generate.hpp"

#include "hmiforge/core/template.hpp"
#include "hmiforge/gen/cross_check.hpp"

namespace hmiforge {

namespace {

ProgramTarget lower(const Target& t) { return ProgramTarget{t.kind, t.name}; }

std::string_view to_string(PruneReason reason) {
  switch (reason) {
    case PruneReason::presence:
      return "presence";
    case PruneReason::unreachable:
      return "unreachable";
    case PruneReason::container:
      return "container";
  }
  return "presence";
}

constexpr std::string_view kSummaryTemplate =
    "HMI program ${name} (format ${formatVersion})\n"
    "configuration: ${configuration}\n"
    "start: ${start}\n"
    "${#each screens}\nscreen ${name}\n${#each items}  ${line}\n${/each}${/each}"
    "${#each dialogs}\ndialog ${name}: \"${text}\"\n"
    "${#each buttons}  [${label}] -> ${target}\n${/each}${/each}"
    "${#each bindings}\naction ${name}\n"
    "${#each effects}  set ${statusbox} = \"${value}\"\n${/each}${/each}";

std::string describe(const ProgramTarget& t) {
  return t.kind == TargetKind::back ? "back" : std::string(keyword(t.kind)) + " " + t.name;
}

}  // namespace

nlohmann::json to_json(const GenReport& report) {
  auto kept = nlohmann::json::array();
  for (const auto& ref : report.kept) kept.push_back(ref.to_string());
  auto pruned = nlohmann::json::array();
  for (const auto& p : report.pruned) {
    pruned.push_back({{"element", p.element.to_string()}, {"reason", to_string(p.reason)}});
  }
  return {{"prunedMenus", report.pruned_menus},
          {"prunedDialogs", report.pruned_dialogs},
          {"prunedEntries", report.pruned_entries},
          {"kept", std::move(kept)},
          {"pruned", std::move(pruned)},
          {"warnings", to_json(report.warnings)}};
}

Diagnostics configuration_diagnostics(const FeatureModel& fm, const Configuration& cfg) {
  Diagnostics out;
  if (!cfg.model.empty() && cfg.model != fm.name) {
    out.push_back(make_error(codes::kInvalidConfiguration,
                             "configuration '" + cfg.name + "' is written for model '" +
                                 cfg.model + "', not '" + fm.name + "'",
                             cfg.span));
  }
  Verdict verdict = is_valid_configuration(fm, cfg);
  if (!verdict.valid) {
    Diagnostic d = make_error(codes::kInvalidConfiguration,
                              "configuration" + (cfg.name.empty() ? "" : " '" + cfg.name + "'") +
                                  " is not valid for feature model '" + fm.name + "'",
                              cfg.span);
    d.related = std::move(verdict.violations);
    out.push_back(std::move(d));
  }
  return out;
}

HmiProgram build_program(const HmiModel& pruned, const HandlerManifest& manifest,
                         const Configuration& cfg) {
  HmiProgram p;
  p.name = pruned.name;
  p.configuration = cfg.sorted();
  p.start = pruned.start;
  auto bind = [&](const Target& t) {
    if (t.kind != TargetKind::action || p.bindings.count(t.name)) return;
    const Handler* h = manifest.find(t.name);
    p.bindings[t.name] = h ? h->effects : std::vector<Effect>{};
  };
  for (const auto& m : pruned.menus) {
    Screen screen{m.name, {}};
    for (const auto& item : m.items) {
      if (const auto* e = std::get_if<Entry>(&item)) {
        screen.items.emplace_back(ProgramEntry{e->label, lower(e->target)});
        bind(e->target);
      } else {
        screen.items.emplace_back(ProgramStatus{std::get<StatusRef>(item).statusbox});
      }
    }
    p.screens.emplace(m.name, std::move(screen));
  }
  for (const auto& d : pruned.dialogs) {
    ProgramDialog dialog{d.name, d.text, {}};
    for (const auto& b : d.buttons) {
      dialog.buttons.push_back(ProgramButton{b.label, lower(b.target)});
      bind(b.target);
    }
    p.dialogs.emplace(d.name, std::move(dialog));
  }
  for (const auto& s : pruned.statusboxes) {
    p.statusboxes.emplace(s.name, ProgramStatusBox{s.name, s.label, s.init});
  }
  for (auto& [action, effects] : p.bindings) {
    for (auto& e : effects) e.span = {};
  }
  return p;
}

std::string render_summary(const HmiProgram& program) {
  TemplateEnv env;
  std::string configuration;
  for (const auto& f : program.configuration) configuration += (configuration.empty() ? "" : ", ") + f;
  env.set("name", program.name)
      .set("formatVersion", std::string(kProgramFormatVersion))
      .set("configuration", configuration)
      .set("start", program.start);

  std::vector<TemplateEnv> screens;
  for (const auto& [name, screen] : program.screens) {
    std::vector<TemplateEnv> items;
    for (const auto& item : screen.items) {
      TemplateEnv line;
      if (const auto* e = std::get_if<ProgramEntry>(&item)) {
        line.set("line", "- " + e->label + " -> " + describe(e->target));
      } else {
        const auto& box = program.statusboxes.at(std::get<ProgramStatus>(item).statusbox);
        line.set("line", "[" + box.label + ": " + box.init + "]");
      }
      items.push_back(std::move(line));
    }
    screens.push_back(TemplateEnv{}.set("name", name).set("items", std::move(items)));
  }
  std::vector<TemplateEnv> dialogs;
  for (const auto& [name, dialog] : program.dialogs) {
    std::vector<TemplateEnv> buttons;
    for (const auto& b : dialog.buttons) {
      buttons.push_back(TemplateEnv{}.set("label", b.label).set("target", describe(b.target)));
    }
    dialogs.push_back(
        TemplateEnv{}.set("name", name).set("text", dialog.text).set("buttons", std::move(buttons)));
  }
  std::vector<TemplateEnv> bindings;
  for (const auto& [action, effects] : program.bindings) {
    std::vector<TemplateEnv> list;
    for (const auto& e : effects) {
      list.push_back(TemplateEnv{}.set("statusbox", e.statusbox).set("value", e.value));
    }
    bindings.push_back(TemplateEnv{}.set("name", action).set("effects", std::move(list)));
  }
  env.set("screens", std::move(screens))
      .set("dialogs", std::move(dialogs))
      .set("bindings", std::move(bindings));
  return render_template(kSummaryTemplate, env);
}

GenerateResult generate(const FeatureModel& fm, const HmiModel& hm,
                        const HandlerManifest& manifest, const Configuration& cfg) {
  return run_stages(fm, hm, manifest, &cfg, Stage::generate);
}

GenerateResult run_stages(const FeatureModel& fm, const HmiModel& hm,
                          const HandlerManifest& manifest, const Configuration* cfg, Stage last) {
  GenerateResult result;
  auto finish = [&](Stage stage) {
    result.stage_reached = stage;
    sort_diagnostics(result.diagnostics);
    return result;
  };
  auto absorb = [&](Diagnostics more) {
    for (auto& d : more) result.diagnostics.push_back(std::move(d));
  };

  absorb(check_hmi_model(hm));
  if (has_errors(result.diagnostics) || last == Stage::wellformed) {
    return finish(Stage::wellformed);
  }

  if (cfg) absorb(configuration_diagnostics(fm, *cfg));
  absorb(cross_check(fm, hm, manifest));
  if (has_errors(result.diagnostics) || last == Stage::crosscheck || !cfg) {
    return finish(Stage::crosscheck);
  }

  PruneResult pruned = prune(hm, fm, *cfg);
  absorb(pruned.diagnostics);
  if (!pruned.model) return finish(Stage::generate);

  Generation gen;
  gen.program = build_program(*pruned.model, manifest, *cfg);
  gen.report.kept = std::move(pruned.kept);
  gen.report.pruned = std::move(pruned.pruned);
  for (const auto& p : gen.report.pruned) {
    switch (p.element.kind) {
      case ElementRef::Kind::menu:
        ++gen.report.pruned_menus;
        break;
      case ElementRef::Kind::dialog:
        ++gen.report.pruned_dialogs;
        break;
      case ElementRef::Kind::entry:
        ++gen.report.pruned_entries;
        break;
    }
  }
  for (const auto& d : result.diagnostics) {
    if (!d.is_error()) gen.report.warnings.push_back(d);
  }
  sort_diagnostics(gen.report.warnings);
  gen.program_text = emit_program(gen.program);
  gen.report_text = to_json(gen.report).dump(2) + "\n";
  gen.summary = render_summary(gen.program);
  result.generation = std::move(gen);
  return finish(Stage::generate);
}

}  // namespace hmiforge
