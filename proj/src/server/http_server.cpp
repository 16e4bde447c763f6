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

#include "hmiforge/server/http_server.hpp"

#include <httplib.h>

namespace hmiforge {

struct HttpServer::Impl {
  httplib::Server server;
};

namespace {

void send(httplib::Response& res, const Reply& reply) {
  res.status = reply.status;
  res.set_content(reply.body.dump(), "application/json");
}

}  // namespace

HttpServer::HttpServer(SessionService& service, std::optional<std::filesystem::path> ui_root)
    : impl_(std::make_unique<Impl>()) {
  auto& srv = impl_->server;
  // Without SO_REUSEPORT so that a port already in use is reported as such.
  srv.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  srv.Get("/api/featuremodel", [&service](const httplib::Request&, httplib::Response& res) {
    send(res, service.feature_model());
  });
  srv.Post("/api/validate", [&service](const httplib::Request& req, httplib::Response& res) {
    send(res, service.validate(req.body));
  });
  srv.Post("/api/sessions", [&service](const httplib::Request& req, httplib::Response& res) {
    send(res, service.create_session(req.body));
  });
  srv.Post(R"(/api/sessions/([^/]+)/input)",
           [&service](const httplib::Request& req, httplib::Response& res) {
             send(res, service.input(req.matches[1], req.body));
           });
  srv.Get(R"(/api/sessions/([^/]+)/view)",
          [&service](const httplib::Request& req, httplib::Response& res) {
            send(res, service.view(req.matches[1]));
          });
  srv.Delete(R"(/api/sessions/([^/]+))",
             [&service](const httplib::Request& req, httplib::Response& res) {
               send(res, service.close(req.matches[1]));
             });
  std::error_code ec;
  if (ui_root && std::filesystem::is_directory(*ui_root, ec)) {
    srv.set_mount_point("/", ui_root->string());
  }
}

HttpServer::~HttpServer() { stop(); }

bool HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    port_ = impl_->server.bind_to_any_port(host);
    return port_ > 0;
  }
  if (!impl_->server.bind_to_port(host, port)) return false;
  port_ = port;
  return true;
}

void HttpServer::serve() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace hmiforge
