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

// HTTP front end for the session store.
//
//   POST /api/sessions                 create         -> 201 {"session": view}
//   GET  /api/sessions?offset=&limit=  list, newest first
//   GET  /api/sessions/{id}            -> {"session": view}
//   POST /api/sessions/{id}/moves      {"v": int} | {"W": [...]} -> {"session": view}
//   GET  /api/sessions/{id}/ball?v=    ball preview in the current arena
//   GET  /api/health
//   GET  /                             static UI files (or a small index page)
//
// Errors are {"error": {"code", "rule", "detail"}} with a 4xx status.

#ifndef SPARSITY_HTTP_SERVICE_H_
#define SPARSITY_HTTP_SERVICE_H_

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "sparsity/session.h"

namespace httplib {
class Server;
}

namespace sparsity {

struct ServiceOptions {
  std::optional<std::filesystem::path> static_dir;
  std::optional<std::filesystem::path> state_file;  // loaded at start, saved after changes
};

class HttpService {
 public:
  HttpService(SessionStore& store, ServiceOptions options);
  ~HttpService();

  // Blocking; returns false if the port could not be bound.
  bool Listen(const std::string& host, int port);
  // Binds an ephemeral port and serves on a background thread; returns it.
  int StartBackground(const std::string& host = "127.0.0.1");
  void Stop();

 private:
  void Persist();

  SessionStore& store_;
  ServiceOptions options_;
  std::unique_ptr<httplib::Server> server_;
  std::unique_ptr<std::thread> thread_;
  std::mutex persist_mu_;
};

}  // namespace sparsity

#endif  // SPARSITY_HTTP_SERVICE_H_
