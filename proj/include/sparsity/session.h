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

// In-memory store of interactive splitter-game sessions.
//
// The store is the rules authority: every state it holds was produced by the
// rules engine from the recorded moves, and a snapshot is just the move lists
// (loading replays them). Requests and responses are JSON values so the HTTP
// layer stays a thin adapter.

#ifndef SPARSITY_SESSION_H_
#define SPARSITY_SESSION_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "sparsity/serialization.h"
#include "sparsity/splitter.h"

namespace sparsity {

inline constexpr int kMaxSessionVertices = 500;

// Error with an HTTP status and the {code, rule, detail} payload.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, std::string code, std::string detail, std::string rule = "");

  int status() const { return status_; }
  const std::string& code() const { return code_; }
  const std::string& rule() const { return rule_; }
  const std::string& detail() const { return detail_; }
  Json ToJson() const;

 private:
  int status_;
  std::string code_;
  std::string rule_;
  std::string detail_;
};

class SessionStore {
 public:
  SessionStore() = default;
  SessionStore(const SessionStore&) = delete;
  SessionStore& operator=(const SessionStore&) = delete;

  // Body: {"graph": {...}} or {"edge_list": "..."} or {"family": {"kind", "params"}},
  // plus "config", "mode" (human_connector | human_splitter) and "engine"
  // (path_union | solver as splitter; hub | solver as connector).
  Json Create(const Json& request);
  Json Get(const std::string& id) const;
  // Newest first.
  Json List(int offset, int limit) const;
  // Body: {"v": int} for a human connector, {"W": [...]} for a human splitter.
  Json SubmitMove(const std::string& id, const Json& move);
  // Ball around v in the current arena (preview for the board).
  Json Ball(const std::string& id, Vertex v) const;

  Json Snapshot() const;
  void Load(const Json& snapshot);  // replaces the store contents
  void SaveFile(const std::filesystem::path& path) const;
  void LoadFile(const std::filesystem::path& path);

  std::size_t size() const;

 private:
  struct Session;
  struct Entry {
    mutable std::mutex mu;
    std::unique_ptr<Session> session;
  };

  std::shared_ptr<Entry> Find(const std::string& id) const;
  std::string NewId() const;
  static Json View(const Session& s);

  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace sparsity

#endif  // SPARSITY_SESSION_H_
