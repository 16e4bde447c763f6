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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "hmiforge/gen/program.hpp"
#include "hmiforge/runtime/simulator.hpp"
#include "oracle.hpp"
#include "random_models.hpp"
#include "test_data.hpp"

using namespace hmiforge;
using namespace hmiforge::testing;

namespace {

const HmiProgram& worked_program() {
  static const HmiProgram p = parse_program(read_file(worked_dir() / "golden" / "hmi.program"));
  return p;
}

using Events = std::vector<InputEvent>;
constexpr InputEvent kUp = InputEvent::up;
constexpr InputEvent kDown = InputEvent::down;
constexpr InputEvent kSelect = InputEvent::select;
constexpr InputEvent kBack = InputEvent::back;

std::vector<std::string> transitions(const TraceRun& run) {
  std::vector<std::string> out;
  for (const auto& o : run.transcript) out.push_back(o.transition);
  return out;
}

std::set<std::string> targets_from(const SimState& s, const HmiProgram& p) {
  std::set<std::string> out;
  if (s.active_dialog) {
    for (const auto& b : p.dialogs.at(*s.active_dialog).buttons) out.insert(b.target.name);
  } else {
    for (const auto* e : p.screens.at(s.screen()).entries()) out.insert(e->target.name);
  }
  return out;
}

}  // namespace

TEST_SUITE("runtime") {

TEST_CASE("a fresh session starts on the start screen") {
  const SimState s = init_session(worked_program());
  CHECK(s.nav_stack == std::vector<std::string>{"Main"});
  CHECK(s.cursor == 0);
  CHECK(s.mode == Mode::menu);
  CHECK_FALSE(s.active_dialog.has_value());
  CHECK(s.step_count == 0);
  CHECK(s.status.at("Clock") == "12:00");
  CHECK(s.status.size() == 3);
  CHECK(state_violations(s, worked_program()).empty());
}

TEST_CASE("a corrupted program is refused") {
  HmiProgram p = worked_program();
  std::get<ProgramEntry>(p.screens.at("Main").items[0]).target.name = "Nowhere";
  try {
    init_session(p);
    FAIL("expected E_BAD_PROGRAM");
  } catch (const DiagnosticError& e) {
    CHECK(e.code() == "E_BAD_PROGRAM");
  }
}

TEST_CASE("the cursor wraps around in both directions") {
  const HmiProgram& p = worked_program();
  const TraceRun run = run_trace(p, Events{kSelect, kDown, kDown, kDown, kUp});
  CHECK(transitions(run) ==
        std::vector<std::string>{"pushed:Settings", "cursor:1", "cursor:2", "cursor:0", "cursor:2"});
  SimState at_last = run.transcript[2].state;
  REQUIRE(at_last.cursor == 2);
  CHECK(step(at_last, kDown, p).state.cursor == 0);
}

TEST_CASE("back at the bottom of the stack does nothing") {
  const HmiProgram& p = worked_program();
  const SimState s = init_session(p);
  const StepOutcome o = step(s, kBack, p);
  CHECK(o.transition == "noop");
  SimState expected = s;
  expected.step_count = 1;
  CHECK(o.state == expected);
}

TEST_CASE("selecting an action entry applies its effects and keeps the stack") {
  const HmiProgram& p = worked_program();
  const TraceRun run = run_trace(p, Events{kDown, kSelect});
  CHECK(transitions(run) == std::vector<std::string>{"cursor:1", "action:reset"});
  const SimState& s = run.final_state;
  CHECK(s.nav_stack == std::vector<std::string>{"Main"});
  CHECK(s.cursor == 1);
  CHECK(s.status.at("Clock") == "00:00");
  CHECK(s.status.at("Level") == "5");
  CHECK(s.step_count == 2);
  REQUIRE(run.transcript[1].effects.size() == 1);
  CHECK(run.transcript[1].effects[0].statusbox == "Clock");
  CHECK(run.transcript[0].effects.empty());
}

TEST_CASE("an empty trace leaves the initial state") {
  const TraceRun run = run_trace(worked_program(), Events{});
  CHECK(run.transcript.empty());
  CHECK(run.final_state == init_session(worked_program()));
}

TEST_CASE("menus push and back pops with the cursor reset") {
  const HmiProgram& p = worked_program();
  const TraceRun run = run_trace(p, Events{kSelect, kDown, kDown, kSelect, kSelect, kBack});
  CHECK(transitions(run) == std::vector<std::string>{"pushed:Settings", "cursor:1", "cursor:2",
                                                     "popped:Settings", "pushed:Settings",
                                                     "popped:Settings"});
  CHECK(run.final_state.nav_stack == std::vector<std::string>{"Main"});
  CHECK(run.final_state.cursor == 0);
}

TEST_CASE("dialogs cycle buttons, close on back and fire button targets") {
  const HmiProgram& p = worked_program();
  const Events open{kSelect, kDown, kSelect};
  const TraceRun opened = run_trace(p, open);
  CHECK(opened.transcript.back().transition == "opened:About");
  CHECK(opened.final_state.mode == Mode::dialog);
  CHECK(opened.final_state.active_dialog == std::optional<std::string>("About"));
  CHECK(opened.final_state.dialog_cursor == 0);

  const StepOutcome down = step(opened.final_state, kDown, p);
  CHECK(down.transition == "button:1");
  CHECK(step(down.state, kDown, p).transition == "button:0");
  CHECK(step(opened.final_state, kUp, p).transition == "button:1");

  const StepOutcome closed = step(opened.final_state, kBack, p);
  CHECK(closed.transition == "closed:About");
  CHECK(closed.state.mode == Mode::menu);
  CHECK(closed.state.nav_stack == std::vector<std::string>{"Main", "Settings"});
  CHECK(closed.state.cursor == 1);

  const StepOutcome ok = step(opened.final_state, kSelect, p);
  CHECK(ok.transition == "closed:About+popped:Settings");
  CHECK(ok.state.nav_stack == std::vector<std::string>{"Main"});
  CHECK_FALSE(ok.state.active_dialog.has_value());
}

TEST_CASE("the initial view") {
  const ViewModel v = render_view(init_session(worked_program()), worked_program());
  CHECK(v.title == "Main");
  REQUIRE(v.lines.size() == 3);
  CHECK(v.lines[0] == ViewLine{"Settings", ViewLine::Kind::entry, true});
  CHECK(v.lines[1] == ViewLine{"Reset clock", ViewLine::Kind::entry, false});
  CHECK(v.lines[2] == ViewLine{"Clock: 12:00", ViewLine::Kind::status, false});
  CHECK_FALSE(v.dialog.has_value());
  CHECK(v.config == std::vector<std::string>{"A", "B"});
}

TEST_CASE("a view in dialog mode shows the dialog with button 0 highlighted") {
  const HmiProgram& p = worked_program();
  const ViewModel v = render_view(run_trace(p, Events{kSelect, kDown, kSelect}).final_state, p);
  CHECK(v.title == "Settings");
  REQUIRE(v.dialog.has_value());
  CHECK(v.dialog->text == "hmiforge demo HMI");
  CHECK(v.dialog->buttons ==
        std::vector<ViewButton>{{"OK", true}, {"Dismiss", false}});
  for (const auto& line : v.lines) CHECK_FALSE(line.highlighted);
}

TEST_CASE("a status line shows the value set by an action") {
  const HmiProgram& p = worked_program();
  const ViewModel v = render_view(run_trace(p, Events{kDown, kSelect}).final_state, p);
  CHECK(v.lines[2].text == "Clock: 00:00");
  CHECK(v.lines[1].highlighted);
}

TEST_CASE("view JSON shape") {
  const HmiProgram& p = worked_program();
  const auto j = to_json(render_view(init_session(p), p));
  CHECK(j.at("title") == "Main");
  CHECK(j.at("dialog").is_null());
  CHECK(j.at("lines")[0] == nlohmann::json{{"text", "Settings"}, {"kind", "entry"}, {"highlighted", true}});
  CHECK(j.at("lines")[2].at("kind") == "status");
  CHECK(j.at("config") == nlohmann::json{"A", "B"});
  const auto d = to_json(render_view(run_trace(p, Events{kSelect, kDown, kSelect}).final_state, p));
  CHECK(d.at("dialog").at("buttons")[0] == nlohmann::json{{"label", "OK"}, {"highlighted", true}});
}

TEST_CASE("event and trace parsing") {
  CHECK(parse_event("up") == InputEvent::up);
  CHECK(parse_event("select") == InputEvent::select);
  CHECK_FALSE(parse_event("left").has_value());
  CHECK(to_string(InputEvent::back) == "back");
  std::size_t bad = 0;
  const auto ok = parse_trace("down\n\nselect\n", &bad);
  REQUIRE(ok.has_value());
  CHECK(*ok == Events{kDown, kSelect});
  CHECK_FALSE(parse_trace("down\nleft\n", &bad).has_value());
  CHECK(bad == 2);
  CHECK(parse_trace("", &bad)->empty());
}

TEST_CASE("stack discipline, effect discipline and determinism on random programs") {
  Rng rng(51);
  for (int i = 0; i < 40; ++i) {
    const HmiProgram p = random_program(rng);
    for (int t = 0; t < 20; ++t) {
      const auto trace = random_trace(rng, 100);
      const TraceRun run = run_trace(p, trace);
      const TraceRun again = run_trace(p, trace);
      CHECK(transitions(run) == transitions(again));
      CHECK(run.final_state == again.final_state);
      SimState before = init_session(p);
      for (const auto& o : run.transcript) {
        const SimState& after = o.state;
        CHECK(after.nav_stack.front() == p.start);
        const auto& a = before.nav_stack;
        const auto& b = after.nav_stack;
        if (b.size() == a.size() + 1) {
          CHECK(std::equal(a.begin(), a.end(), b.begin()));
          CHECK(targets_from(before, p).count(b.back()) == 1);
        } else if (b.size() + 1 == a.size()) {
          CHECK(std::equal(b.begin(), b.end(), a.begin()));
        } else {
          CHECK(a == b);
        }
        auto expected = before.status;
        for (const auto& e : o.effects) expected[e.statusbox] = e.value;
        CHECK(after.status == expected);
        if (!o.effects.empty()) {
          const auto at = o.transition.find("action:");
          REQUIRE(at != std::string::npos);
          CHECK(p.bindings.at(o.transition.substr(at + 7)) == o.effects);
        }
        CHECK(oracle_state_problems(after, p).empty());
        before = after;
      }
    }
  }
}

}  // TEST_SUITE
