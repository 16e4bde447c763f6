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

#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "hmiforge/server/session_service.hpp"

namespace hmiforge {

/// HTTP front of a SessionService. `/api/...` carries the session protocol;
/// `/` serves the static UI bundle from `ui_root` when it exists, 404
/// otherwise.
class HttpServer {
 public:
  HttpServer(SessionService& service, std::optional<std::filesystem::path> ui_root);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds without serving; port 0 picks a free port. Returns false if the
  /// address is unavailable.
  bool bind(const std::string& host, int port);
  int port() const { return port_; }

  /// Serves until stop() is called. Requires a successful bind().
  void serve();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = -1;
};

}  // namespace hmiforge
