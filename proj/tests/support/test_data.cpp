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

#include "test_data.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace hmiforge::testing {

namespace fs = std::filesystem;

fs::path data_dir() { return HMIFORGE_TEST_DATA; }
fs::path worked_dir() { return data_dir() / "worked"; }
fs::path hmiforge_binary() { return HMIFORGE_BIN; }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  const fs::path dir = fs::temp_directory_path() /
                       ("hmiforge-" + tag + "-" + std::to_string(::getpid()) + "-" +
                        std::to_string(counter++));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

namespace {

template <typename T>
T must(Parsed<T> parsed, const char* what) {
  if (!parsed.ok()) throw std::logic_error(std::string(what) + ":\n" + render(parsed.diagnostics));
  return std::move(*parsed.value);
}

}  // namespace

FeatureModel must_parse_fm(const std::string& text) {
  return must(parse_feature_model(text), "feature model");
}
HmiModel must_parse_hmi(const std::string& text) { return must(parse_hmi_model(text), "hmi"); }
HandlerManifest must_parse_handlers(const std::string& text) {
  return must(parse_handler_manifest(text), "handlers");
}

const Worked& worked() {
  static const Worked w = [] {
    Worked out;
    out.fm_text = read_file(worked_dir() / "m1.fm");
    out.hmi_text = read_file(worked_dir() / "h.hmi");
    out.handlers_text = read_file(worked_dir() / "handlers.hdl");
    out.fm = must(parse_feature_model(out.fm_text, "m1.fm"), "m1.fm");
    out.hm = must(parse_hmi_model(out.hmi_text, "h.hmi"), "h.hmi");
    out.manifest = must(parse_handler_manifest(out.handlers_text, "handlers.hdl"), "handlers.hdl");
    return out;
  }();
  return w;
}

}  // namespace hmiforge::testing
