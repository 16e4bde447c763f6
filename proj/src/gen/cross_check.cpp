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

#include "hmiforge/gen/cross_check.hpp"

#include <set>

namespace hmiforge {

Diagnostics cross_check(const FeatureModel& fm, const HmiModel& hm,
                        const HandlerManifest& manifest) {
  Diagnostics diags;
  std::set<std::string> targeted;

  auto check_presence = [&](const std::optional<FeatureExpr>& presence) {
    if (!presence) return;
    for (const FeatureExpr* ref : feature_refs(*presence)) {
      if (!fm.declares(ref->name)) {
        diags.push_back(make_error(codes::kUnknownFeatureRef,
                                   "presence condition refers to '" + ref->name +
                                       "', which is not a feature of '" + fm.name + "'",
                                   ref->span));
      }
    }
  };
  auto check_target = [&](const Target& t, const SourceSpan& site) {
    if (t.kind != TargetKind::action) return;
    targeted.insert(t.name);
    if (!manifest.find(t.name)) {
      diags.push_back(make_error(codes::kUnknownAction,
                                 "no handler implements action '" + t.name + "'", site));
    }
  };

  for (const auto& m : hm.menus) {
    check_presence(m.presence);
    for (const auto& item : m.items) {
      if (const auto* e = std::get_if<Entry>(&item)) {
        check_presence(e->presence);
        check_target(e->target, e->span);
      }
    }
  }
  for (const auto& d : hm.dialogs) {
    check_presence(d.presence);
    for (const auto& b : d.buttons) check_target(b.target, b.span);
  }
  for (const auto& h : manifest.handlers) {
    for (const auto& e : h.effects) {
      if (!hm.find_statusbox(e.statusbox)) {
        diags.push_back(make_error(codes::kUnknownStatusbox,
                                   "action '" + h.action + "' sets undeclared status box '" +
                                       e.statusbox + "'",
                                   e.span));
      }
    }
    if (!targeted.count(h.action)) {
      diags.push_back(make_warning(codes::kUnusedHandler,
                                   "handler '" + h.action + "' is never targeted by the menu model",
                                   h.span));
    }
  }
  sort_diagnostics(diags);
  return diags;
}

}  // namespace hmiforge
