// Copyright 2026 The Sparsity Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sparsity/http_service.h"

#include <charconv>
#include <functional>

#include "httplib.h"

namespace sparsity {
namespace {

constexpr const char* kJson = "application/json";

constexpr const char* kIndexPage = R"(<!doctype html>
<html><head><meta charset="utf-8"><title>splitter game</title></head>
<body>
<h1>splitter game service</h1>
<p>The board UI is not bundled with this build. Start the server with
<code>--static DIR</code> to serve it, or talk to the JSON API under
<code>/api/</code> directly.</p>
</body></html>
)";

void Send(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

int IntParam(const httplib::Request& req, const char* key, int fallback) {
  if (!req.has_param(key)) return fallback;
  std::string text = req.get_param_value(key);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ServiceError(400, "bad_request", std::string(key) + " must be an integer");
  }
  return value;
}

// Runs a handler, mapping exceptions to structured error payloads.
void Guarded(httplib::Response& res, const std::function<void()>& body) {
  try {
    body();
  } catch (const ServiceError& err) {
    Send(res, err.status(), err.ToJson());
  } catch (const FormatError& err) {
    Send(res, 400, ServiceError(400, "bad_request", err.what()).ToJson());
  } catch (const std::exception& err) {
    Send(res, 500, ServiceError(500, "internal", err.what()).ToJson());
  }
}

Json ParseBody(const httplib::Request& req) {
  try {
    return ParseJson(req.body);
  } catch (const FormatError& err) {
    throw ServiceError(400, "bad_request", err.what());
  }
}

}  // namespace

HttpService::HttpService(SessionStore& store, ServiceOptions options)
    : store_(store), options_(std::move(options)), server_(std::make_unique<httplib::Server>()) {
  if (options_.state_file && std::filesystem::exists(*options_.state_file)) {
    store_.LoadFile(*options_.state_file);
  }
  httplib::Server& s = *server_;

  s.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    Send(res, 200, {{"status", "ok"}});
  });

  s.Post("/api/sessions", [this](const httplib::Request& req, httplib::Response& res) {
    Guarded(res, [&] {
      Json view = store_.Create(ParseBody(req));
      Persist();
      Send(res, 201, {{"session", view}});
    });
  });

  s.Get("/api/sessions", [this](const httplib::Request& req, httplib::Response& res) {
    Guarded(res, [&] {
      Send(res, 200, store_.List(IntParam(req, "offset", 0), IntParam(req, "limit", 20)));
    });
  });

  s.Get(R"(/api/sessions/([0-9a-f]+))", [this](const httplib::Request& req,
                                                httplib::Response& res) {
    Guarded(res, [&] { Send(res, 200, {{"session", store_.Get(req.matches[1])}}); });
  });

  s.Post(R"(/api/sessions/([0-9a-f]+)/moves)", [this](const httplib::Request& req,
                                                       httplib::Response& res) {
    Guarded(res, [&] {
      Json view = store_.SubmitMove(req.matches[1], ParseBody(req));
      Persist();
      Send(res, 200, {{"session", view}});
    });
  });

  s.Get(R"(/api/sessions/([0-9a-f]+)/ball)", [this](const httplib::Request& req,
                                                     httplib::Response& res) {
    Guarded(res, [&] {
      if (!req.has_param("v")) throw ServiceError(400, "bad_request", "missing ?v=");
      Send(res, 200, store_.Ball(req.matches[1], IntParam(req, "v", 0)));
    });
  });

  bool mounted = options_.static_dir && s.set_mount_point("/", options_.static_dir->string());
  if (!mounted) {
    s.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(kIndexPage, "text/html");
    });
  }
}

HttpService::~HttpService() { Stop(); }

void HttpService::Persist() {
  if (!options_.state_file) return;
  std::lock_guard lock(persist_mu_);
  store_.SaveFile(*options_.state_file);
}

bool HttpService::Listen(const std::string& host, int port) { return server_->listen(host, port); }

int HttpService::StartBackground(const std::string& host) {
  int port = server_->bind_to_any_port(host);
  if (port <= 0) throw std::runtime_error("could not bind a port on " + host);
  thread_ = std::make_unique<std::thread>([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return port;
}

void HttpService::Stop() {
  if (server_) server_->stop();
  if (thread_ && thread_->joinable()) thread_->join();
  thread_.reset();
}

}  // namespace sparsity
