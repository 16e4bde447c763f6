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

#include "hmiforge/cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hmiforge/core/pipeline.hpp"
#include "hmiforge/core/source.hpp"
#include "hmiforge/gen/generate.hpp"
#include "hmiforge/runtime/simulator.hpp"
#include "hmiforge/server/http_server.hpp"

namespace hmiforge::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string fm;
  std::string hmi;
  std::string handlers;
  std::string cfg;
  std::string out_dir;
  std::string program;
  std::string trace;
  std::string format = "text";
  std::size_t cap = kDefaultEnumerationCap;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string ui = "sim-ui/dist";
};

void report(const Diagnostics& diags, const Options& opt, std::ostream& err) {
  if (opt.format == "json") {
    err << to_json(diags).dump(2) << '\n';
  } else {
    err << render(diags);
  }
}

bool has_io_error(const Diagnostics& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.code == codes::kIo; });
}

int exit_for(const Diagnostics& diags) {
  if (has_io_error(diags)) return kUsageError;
  return has_errors(diags) ? kModelError : kSuccess;
}

int cmd_check(const Options& opt, std::ostream&, std::ostream& err) {
  PipelineResult result = run_pipeline({opt.fm, opt.hmi, opt.handlers, std::nullopt},
                                       {Stage::crosscheck});
  if (!result.diagnostics.empty() || opt.format == "json") report(result.diagnostics, opt, err);
  return exit_for(result.diagnostics);
}

std::optional<FeatureModel> load_feature_model(const Options& opt, std::ostream& err,
                                               int& code) {
  Diagnostics diags;
  auto text = read_source(opt.fm, diags);
  if (!text) {
    report(diags, opt, err);
    code = kUsageError;
    return std::nullopt;
  }
  auto parsed = parse_feature_model(*text, opt.fm);
  if (!parsed.ok()) {
    report(parsed.diagnostics, opt, err);
    code = kModelError;
  }
  return std::move(parsed.value);
}

int cmd_config_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  int code = kSuccess;
  auto fm = load_feature_model(opt, err, code);
  if (!fm) return code;
  Diagnostics diags;
  auto text = read_source(opt.cfg, diags);
  if (!text) {
    report(diags, opt, err);
    return kUsageError;
  }
  auto cfg = parse_configuration(*text, opt.cfg);
  if (!cfg.ok()) {
    report(cfg.diagnostics, opt, err);
    return kModelError;
  }
  Diagnostics problems = configuration_diagnostics(*fm, *cfg.value);
  Diagnostics flat;
  for (auto& d : problems) {
    if (d.code == codes::kInvalidConfiguration && !d.related.empty()) {
      for (auto& r : d.related) flat.push_back(std::move(r));
    } else {
      flat.push_back(std::move(d));
    }
  }
  out << (flat.empty() ? "valid" : "invalid") << '\n';
  if (!flat.empty() || opt.format == "json") report(flat, opt, err);
  return flat.empty() ? kSuccess : kModelError;
}

int cmd_config_enumerate(const Options& opt, bool list, std::ostream& out, std::ostream& err) {
  int code = kSuccess;
  auto fm = load_feature_model(opt, err, code);
  if (!fm) return code;
  try {
    const auto all = enumerate_configurations(*fm, opt.cap);
    if (list) {
      for (const auto& c : all) out << format_selection(c) << '\n';
    } else {
      out << all.size() << '\n';
    }
  } catch (const DiagnosticError& e) {
    report({e.diagnostic()}, opt, err);
    return kUsageError;
  }
  return kSuccess;
}

bool write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << content;
  return static_cast<bool>(f);
}

int cmd_generate(const Options& opt, std::ostream& out, std::ostream& err) {
  PipelineResult result = run_pipeline({opt.fm, opt.hmi, opt.handlers, fs::path(opt.cfg)});
  if (!result.diagnostics.empty()) report(result.diagnostics, opt, err);
  if (result.artifacts.empty()) {
    const int code = exit_for(result.diagnostics);
    return code == kSuccess ? kModelError : code;
  }
  std::error_code ec;
  fs::create_directories(opt.out_dir, ec);
  if (ec) {
    err << "error: cannot create output directory '" << opt.out_dir << "': " << ec.message()
        << '\n';
    return kUsageError;
  }
  for (const auto& [name, content] : result.artifacts) {
    const fs::path target = fs::path(opt.out_dir) / name;
    if (!write_file(target, content)) {
      err << "error: cannot write '" << target.string() << "'\n";
      return kUsageError;
    }
    out << target.string() << '\n';
  }
  return kSuccess;
}

int cmd_simulate(const Options& opt, std::ostream& out, std::ostream& err) {
  Diagnostics diags;
  auto program_text = read_source(opt.program, diags);
  auto trace_text = read_source(opt.trace, diags);
  if (!program_text || !trace_text) {
    report(diags, opt, err);
    return kUsageError;
  }
  std::size_t bad_line = 0;
  auto trace = parse_trace(*trace_text, &bad_line);
  if (!trace) {
    err << opt.trace << ":" << bad_line
        << ": error: unknown event (expected up, down, select or back)\n";
    return kUsageError;
  }
  try {
    const HmiProgram program = parse_program(*program_text);
    const TraceRun run = run_trace(program, *trace);
    for (std::size_t i = 0; i < run.transcript.size(); ++i) {
      const SimState& s = run.transcript[i].state;
      out << (i + 1) << ' ' << to_string((*trace)[i]) << ' ' << run.transcript[i].transition
          << " | " << s.screen() << " [cursor=" << s.cursor << "]\n";
    }
  } catch (const DiagnosticError& e) {
    report({e.diagnostic()}, opt, err);
    return kModelError;
  }
  return kSuccess;
}

std::atomic<HttpServer*> g_serving{nullptr};

extern "C" void on_signal(int) {
  if (HttpServer* s = g_serving.load()) s->stop();
}

int cmd_serve(const Options& opt, std::ostream& out, std::ostream& err) {
  PipelineResult result = run_pipeline({opt.fm, opt.hmi, opt.handlers, std::nullopt},
                                       {Stage::crosscheck});
  if (!result.diagnostics.empty()) report(result.diagnostics, opt, err);
  if (has_errors(result.diagnostics)) return exit_for(result.diagnostics);

  SessionService service(std::move(*result.models));
  HttpServer server(service, fs::path(opt.ui));
  if (!server.bind(opt.host, opt.port)) {
    err << "error: cannot listen on " << opt.host << ":" << opt.port << '\n';
    return kUsageError;
  }
  out << "serving on http://" << opt.host << ":" << server.port() << std::endl;
  g_serving = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  server.serve();
  g_serving = nullptr;
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"hmiforge: feature-model and menu-model workbench for HMI product lines",
               "hmiforge"};
  app.require_subcommand(1);

  auto add_models = [&](CLI::App* cmd) {
    cmd->add_option("--fm", opt.fm, "Feature model file")->required();
    cmd->add_option("--hmi", opt.hmi, "Menu model file")->required();
    cmd->add_option("--handlers", opt.handlers, "Handler manifest file")->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Diagnostic format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* check = app.add_subcommand("check", "Check models and their mutual consistency");
  add_models(check);
  add_format(check);

  auto* config = app.add_subcommand("config", "Validate, count or list configurations");
  config->require_subcommand(1);
  auto* validate = config->add_subcommand("validate", "Validate a configuration file");
  validate->add_option("--fm", opt.fm, "Feature model file")->required();
  validate->add_option("--cfg", opt.cfg, "Configuration file")->required();
  add_format(validate);
  auto* count = config->add_subcommand("count", "Count valid configurations");
  auto* list = config->add_subcommand("list", "List valid configurations");
  for (auto* cmd : {count, list}) {
    cmd->add_option("--fm", opt.fm, "Feature model file")->required();
    cmd->add_option("--cap", opt.cap, "Maximum number of features to enumerate");
    add_format(cmd);
  }

  auto* gen = app.add_subcommand("generate", "Generate the HMI program for a configuration");
  add_models(gen);
  gen->add_option("--cfg", opt.cfg, "Configuration file")->required();
  gen->add_option("--out", opt.out_dir, "Output directory")->required();
  add_format(gen);

  auto* sim = app.add_subcommand("simulate", "Run a generated program on an input trace");
  sim->add_option("--program", opt.program, "Generated hmi.program file")->required();
  sim->add_option("--trace", opt.trace, "Trace file, one event per line")->required();

  auto* serve = app.add_subcommand("serve", "Serve the session protocol and simulator UI");
  add_models(serve);
  serve->add_option("--port", opt.port, "TCP port (0 picks a free one)");
  serve->add_option("--host", opt.host, "Listen address");
  serve->add_option("--ui", opt.ui, "Directory holding the UI bundle");

  std::vector<const char*> argv{"hmiforge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run 'hmiforge --help' for usage\n";
    return kUsageError;
  }

  if (*check) return cmd_check(opt, out, err);
  if (*validate) return cmd_config_validate(opt, out, err);
  if (*count) return cmd_config_enumerate(opt, false, out, err);
  if (*list) return cmd_config_enumerate(opt, true, out, err);
  if (*gen) return cmd_generate(opt, out, err);
  if (*sim) return cmd_simulate(opt, out, err);
  if (*serve) return cmd_serve(opt, out, err);
  return kUsageError;
}

}  // namespace hmiforge::cli
