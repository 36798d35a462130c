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

#include <filesystem>

#include "doctest.h"
#include "sparsity/session.h"

namespace sparsity {
namespace {

int StatusOf(const std::function<void()>& f, std::string* code = nullptr,
             std::string* rule = nullptr) {
  try {
    f();
  } catch (const ServiceError& e) {
    if (code) *code = e.code();
    if (rule) *rule = e.rule();
    return e.status();
  }
  return 200;
}

Json K4Request(const std::string& mode, const std::string& engine) {
  return {{"family", {{"kind", "clique"}, {"params", {4}}}},
          {"config", {{"d", 1}, {"ell", 4}, {"m", nullptr}}},
          {"mode", mode},
          {"engine", engine}};
}

TEST_CASE("human connector against path union") {
  SessionStore store;
  Json view = store.Create(K4Request("human_connector", "path_union"));
  std::string id = view["id"];
  CHECK(view["status"] == "active");
  CHECK(view["to_move"] == "connector");
  CHECK(view["hubs"] == Json({0, 1, 2, 3}));
  for (int round = 0; round < 4; ++round) {
    Json after = store.SubmitMove(id, {{"v", round}});
    CHECK(after["arena_diff"]["removed"] == Json({round}));
  }
  Json done = store.Get(id);
  CHECK(done["status"] == "finished");
  CHECK(done["winner"] == "splitter");
  CHECK(done["arena_sizes"] == Json({4, 3, 2, 1, 0}));
  std::string rule;
  CHECK(StatusOf([&] { store.SubmitMove(id, {{"v", 0}}); }, nullptr, &rule) == 409);
  CHECK(rule == "game_over");
}

TEST_CASE("illegal and malformed moves") {
  SessionStore store;
  std::string id = store.Create(K4Request("human_connector", "solver"))["id"];
  std::string code, rule;
  CHECK(StatusOf([&] { store.SubmitMove(id, {{"v", 9}}); }, &code, &rule) == 400);
  CHECK(code == "illegal_move");
  CHECK(rule == "connector_vertex_outside_arena");
  CHECK(StatusOf([&] { store.SubmitMove(id, {{"W", {1}}}); }, &code, &rule) == 409);
  CHECK(rule == "out_of_turn");
  CHECK(StatusOf([&] { store.SubmitMove(id, {{"x", 1}}); }, &code) == 400);
  CHECK(code == "bad_request");
  CHECK(StatusOf([&] { store.Get("feed"); }, &code) == 404);
  // Nothing changed.
  CHECK(store.Get(id)["round"] == 0);
}

TEST_CASE("human splitter against the hub connector") {
  SessionStore store;
  Json req = K4Request("human_splitter", "hub");
  req["config"]["m"] = 1;
  Json view = store.Create(req);
  std::string id = view["id"];
  CHECK(view["pending_v"] == 0);
  CHECK(view["to_move"] == "splitter");
  std::string rule;
  CHECK(StatusOf([&] { store.SubmitMove(id, {{"W", {0, 1}}}); }, nullptr, &rule) == 400);
  CHECK(rule == "splitter_set_over_budget");
  for (int round = 0; round < 4; ++round) store.SubmitMove(id, {{"W", {round}}});
  Json done = store.Get(id);
  CHECK(done["winner"] == "splitter");
}

TEST_CASE("creation errors") {
  SessionStore store;
  std::string code;
  Json req = K4Request("human_connector", "hub");
  CHECK(StatusOf([&] { store.Create(req); }, &code) == 400);
  CHECK(code == "unknown_engine");
  req = K4Request("human_connector", "path_union");
  req["config"]["m"] = 1;
  CHECK(StatusOf([&] { store.Create(req); }, &code) == 400);
  req = {{"edge_list", "3 1\n0 0\n"}, {"mode", "human_connector"}, {"engine", "path_union"}};
  CHECK(StatusOf([&] { store.Create(req); }, &code) == 400);
  CHECK(code == "invalid_graph");
  req = {{"family", {{"kind", "path"}, {"params", {20}}}},
         {"mode", "human_connector"},
         {"engine", "solver"}};
  CHECK(StatusOf([&] { store.Create(req); }, &code) == 400);
  CHECK(code == "graph_too_large");
  req = {{"family", {{"kind", "path"}, {"params", {600}}}},
         {"mode", "human_connector"},
         {"engine", "path_union"}};
  CHECK(StatusOf([&] { store.Create(req); }, &code) == 400);
  CHECK(code == "graph_too_large");
  req = K4Request("spectator", "hub");
  CHECK(StatusOf([&] { store.Create(req); }, &code) == 400);
  CHECK(code == "invalid_mode");
  CHECK(store.size() == 0);
}

TEST_CASE("listing is newest first and paginated") {
  SessionStore store;
  std::vector<std::string> ids;
  for (int i = 0; i < 5; ++i) ids.push_back(store.Create(K4Request("human_connector", "path_union"))["id"]);
  Json page = store.List(1, 2);
  CHECK(page["total"] == 5);
  REQUIRE(page["sessions"].size() == 2);
  CHECK(page["sessions"][0]["id"] == ids[3]);
  CHECK(page["sessions"][1]["id"] == ids[2]);
  CHECK(StatusOf([&] { store.List(0, 0); }) == 400);
}

TEST_CASE("snapshots restore sessions by replay") {
  SessionStore store;
  std::string id = store.Create(K4Request("human_connector", "path_union"))["id"];
  store.SubmitMove(id, {{"v", 2}});
  std::string other = store.Create(K4Request("human_splitter", "solver"))["id"];
  auto path = std::filesystem::temp_directory_path() / "sparsity_session_test.json";
  store.SaveFile(path);

  SessionStore restored;
  restored.LoadFile(path);
  CHECK(restored.size() == 2);
  Json a = store.Get(id);
  Json b = restored.Get(id);
  CHECK(a == b);
  CHECK(store.Get(other) == restored.Get(other));
  Json next = restored.SubmitMove(id, {{"v", 0}});
  CHECK(next["round"] == 2);
  std::filesystem::remove(path);

  Json bad = store.Snapshot();
  bad["sessions"][0]["moves"][0]["v"] = 42;
  SessionStore broken;
  CHECK_THROWS(broken.Load(bad));
}

TEST_CASE("ball preview") {
  SessionStore store;
  Json req = {{"family", {{"kind", "path"}, {"params", {5}}}},
              {"config", {{"d", 1}}},
              {"mode", "human_connector"},
              {"engine", "path_union"}};
  std::string id = store.Create(req)["id"];
  CHECK(store.Ball(id, 2)["ball"] == Json({1, 2, 3}));
  CHECK(StatusOf([&] { store.Ball(id, 7); }) == 400);
}

TEST_CASE("error payload shape") {
  ServiceError e(400, "illegal_move", "nope", "splitter_set_over_budget");
  Json j = e.ToJson();
  CHECK(j["error"]["code"] == "illegal_move");
  CHECK(j["error"]["rule"] == "splitter_set_over_budget");
  CHECK(j["error"]["rule_text"].is_string());
  CHECK(ServiceError(404, "not_found", "x").ToJson()["error"]["rule"].is_null());
}

}  // namespace
}  // namespace sparsity
