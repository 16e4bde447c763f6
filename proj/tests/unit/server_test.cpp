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

#include <fstream>
#include <sstream>
#include <thread>

#include "hmiforge/cli/cli.hpp"
#include "hmiforge/runtime/simulator.hpp"
#include "hmiforge/server/session_service.hpp"
#include "serve_process.hpp"
#include "test_data.hpp"

using namespace hmiforge;
using namespace hmiforge::testing;

namespace {

LoadedModels worked_models() {
  const Worked& w = worked();
  return {w.fm, w.hm, w.manifest, std::nullopt};
}

std::vector<std::string> worked_args() {
  return {"--fm", (worked_dir() / "m1.fm").string(), "--hmi", (worked_dir() / "h.hmi").string(),
          "--handlers", (worked_dir() / "handlers.hdl").string()};
}

}  // namespace

TEST_SUITE("server") {

TEST_CASE("feature model endpoint returns the nested tree") {
  SessionService service(worked_models());
  const Reply r = service.feature_model();
  CHECK(r.status == 200);
  CHECK(r.body == nlohmann::json::parse(R"({
    "name": "M1",
    "root": {"name": "A", "groups": [
      {"kind": "mandatory", "children": [{"name": "B", "groups": []}]},
      {"kind": "optional", "children": [{"name": "C", "groups": []}]}]},
    "constraints": []})"));
}

TEST_CASE("validation is a verdict, not an error") {
  SessionService service(worked_models());
  const Reply bad = service.validate(R"({"select":["A","C"]})");
  CHECK(bad.status == 200);
  CHECK(bad.body.at("valid") == false);
  REQUIRE(bad.body.at("violations").size() == 1);
  CHECK(bad.body.at("violations")[0].at("code") == "E_MANDATORY_MISSING");
  CHECK(bad.body.at("violations")[0].contains("message"));

  const Reply good = service.validate(R"({"select":["A","B"]})");
  CHECK(good.body == nlohmann::json{{"valid", true}, {"violations", nlohmann::json::array()}});

  CHECK(service.validate("{").status == 400);
  CHECK(service.validate(R"({"select":"A"})").status == 400);
  CHECK(service.validate(R"({"select":[1]})").status == 400);
}

TEST_CASE("session lifecycle") {
  SessionService service(worked_models());
  const Reply created = service.create_session(R"({"select":["A","B"]})");
  REQUIRE(created.status == 201);
  const std::string id = created.body.at("sessionId");
  CHECK(id == "s1");
  CHECK(created.body.at("view").at("title") == "Main");
  CHECK(service.session_count() == 1);

  const Reply down = service.input(id, R"({"event":"down"})");
  CHECK(down.status == 200);
  CHECK(down.body.at("transition") == "cursor:1");
  CHECK(down.body.at("effects") == nlohmann::json::array());
  const Reply reset = service.input(id, R"({"event":"select"})");
  CHECK(reset.body.at("transition") == "action:reset");
  CHECK(reset.body.at("effects") ==
        nlohmann::json::parse(R"([{"kind":"set_status","statusbox":"Clock","value":"00:00"}])"));
  CHECK(reset.body.at("view").at("lines")[2].at("text") == "Clock: 00:00");

  const Reply view = service.view(id);
  CHECK(view.status == 200);
  CHECK(view.body == reset.body.at("view"));

  CHECK(service.input(id, R"({"event":"left"})").status == 400);
  CHECK(service.input(id, "nope").status == 400);
  CHECK(service.input("s99", R"({"event":"up"})").status == 404);
  CHECK(service.view("s99").status == 404);

  CHECK(service.close(id).status == 200);
  CHECK(service.close(id).status == 404);
  CHECK(service.session_count() == 0);
  CHECK(service.create_session(R"({"select":["A","B","C"]})").body.at("sessionId") == "s2");
}

TEST_CASE("an invalid selection cannot start a session") {
  SessionService service(worked_models());
  const Reply r = service.create_session(R"({"select":["A","C"]})");
  CHECK(r.status == 422);
  REQUIRE(r.body.at("diagnostics").size() == 1);
  CHECK(r.body.at("diagnostics")[0].at("code") == "E_INVALID_CONFIGURATION");
  CHECK(service.session_count() == 0);
  CHECK(service.create_session("[]").status == 400);
}

TEST_CASE("inputs to one session are serialized") {
  SessionService service(worked_models());
  const std::string id = service.create_session(R"({"select":["A","B"]})").body.at("sessionId");
  constexpr int kThreads = 4;
  constexpr int kEach = 25;
  std::vector<std::thread> threads;
  for (int t = 0; t < kThreads; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < kEach; ++i) service.input(id, R"({"event":"down"})");
    });
  }
  for (auto& t : threads) t.join();
  // 100 downs over Main's two entries land back on entry 0.
  const auto lines = service.view(id).body.at("lines");
  CHECK(lines[0].at("highlighted") == true);
  CHECK(service.input(id, R"({"event":"down"})").body.at("transition") == "cursor:1");
}

TEST_CASE("serve over HTTP without a UI bundle") {
  ServeProcess server([] {
    auto a = worked_args();
    a.push_back("--ui");
    a.push_back((scratch_dir("no-ui") / "dist").string());
    return a;
  }());
  REQUIRE(server.running());
  const int port = server.port();

  CHECK(http_get(port, "/").status == 404);
  const auto fm = http_get(port, "/api/featuremodel");
  CHECK(fm.status == 200);
  CHECK(fm.json().at("name") == "M1");

  const auto verdict = http_post(port, "/api/validate", R"({"select":["A","C"]})");
  CHECK(verdict.status == 200);
  CHECK(verdict.json().at("valid") == false);

  const auto created = http_post(port, "/api/sessions", R"({"select":["A","B"]})");
  REQUIRE(created.status == 201);
  const std::string id = created.json().at("sessionId");
  CHECK(created.json().at("view").at("title") == "Main");

  const auto step = http_post(port, "/api/sessions/" + id + "/input", R"({"event":"select"})");
  CHECK(step.status == 200);
  CHECK(step.json().at("transition") == "pushed:Settings");
  CHECK(http_get(port, "/api/sessions/" + id + "/view").json().at("title") == "Settings");
  CHECK(http_post(port, "/api/sessions", R"({"select":["A","C"]})").status == 422);
  CHECK(http_post(port, "/api/sessions/zz/input", R"({"event":"up"})").status == 404);
  CHECK(http_delete(port, "/api/sessions/" + id).status == 200);
  CHECK(http_get(port, "/api/sessions/" + id + "/view").status == 404);

  // A second server on the same port cannot bind.
  std::ostringstream out;
  std::ostringstream err;
  auto args = worked_args();
  args.insert(args.begin(), "serve");
  args.push_back("--port");
  args.push_back(std::to_string(port));
  CHECK(cli::run(args, out, err) == cli::kUsageError);
  CHECK(err.str().find("cannot listen") != std::string::npos);

  CHECK(server.stop() == 0);
}

TEST_CASE("serve hosts the UI bundle when present") {
  const auto ui = scratch_dir("ui");
  std::ofstream(ui / "index.html") << "<h1>sim</h1>\n";
  auto args = worked_args();
  args.push_back("--ui");
  args.push_back(ui.string());
  ServeProcess server(args);
  REQUIRE(server.running());
  const auto index = http_get(server.port(), "/");
  CHECK(index.status == 200);
  CHECK(index.body == "<h1>sim</h1>\n");
  CHECK(http_get(server.port(), "/api/featuremodel").status == 200);
}

TEST_CASE("serve refuses broken models before binding") {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"serve", "--fm", (data_dir() / "fm" / "broken.fm").string(), "--hmi",
                             (worked_dir() / "h.hmi").string(), "--handlers",
                             (worked_dir() / "handlers.hdl").string(), "--port", "0"},
                            out, err);
  CHECK(code == cli::kModelError);
  CHECK(out.str().empty());
  CHECK(err.str().find("E_SYNTAX") != std::string::npos);
}

}  // TEST_SUITE
