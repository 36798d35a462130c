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
#include "httplib.h"
#include "sparsity/http_service.h"

namespace sparsity {
namespace {

Json Body(const httplib::Result& r) {
  REQUIRE(r);
  return Json::parse(r->body);
}

TEST_CASE("sessions over http") {
  auto state = std::filesystem::temp_directory_path() / "sparsity_http_test.json";
  std::filesystem::remove(state);
  SessionStore store;
  ServiceOptions options;
  options.state_file = state;
  HttpService service(store, options);
  int port = service.StartBackground();
  httplib::Client client("127.0.0.1", port);

  auto health = client.Get("/api/health");
  REQUIRE(health);
  CHECK(health->status == 200);

  Json req = {{"family", {{"kind", "clique"}, {"params", {4}}}},
              {"config", {{"d", 1}, {"ell", 4}}},
              {"mode", "human_connector"},
              {"engine", "path_union"}};
  auto created = client.Post("/api/sessions", req.dump(), "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  std::string id = Body(created)["session"]["id"];

  auto illegal = client.Post("/api/sessions/" + id + "/moves", R"({"v": 17})", "application/json");
  REQUIRE(illegal);
  CHECK(illegal->status == 400);
  CHECK(Body(illegal)["error"]["rule"] == "connector_vertex_outside_arena");

  for (int v = 0; v < 4; ++v) {
    auto moved = client.Post("/api/sessions/" + id + "/moves", Json{{"v", v}}.dump(),
                             "application/json");
    REQUIRE(moved);
    CHECK(moved->status == 200);
  }
  Json done = Body(client.Get("/api/sessions/" + id))["session"];
  CHECK(done["winner"] == "splitter");
  CHECK(done["arena_sizes"] == Json({4, 3, 2, 1, 0}));

  auto over = client.Post("/api/sessions/" + id + "/moves", R"({"v": 0})", "application/json");
  REQUIRE(over);
  CHECK(over->status == 409);
  CHECK(Body(over)["error"]["rule"] == "game_over");

  auto missing = client.Get("/api/sessions/abc123");
  REQUIRE(missing);
  CHECK(missing->status == 404);
  auto bad_json = client.Post("/api/sessions", "{", "application/json");
  REQUIRE(bad_json);
  CHECK(bad_json->status == 400);

  Json list = Body(client.Get("/api/sessions?offset=0&limit=10"));
  CHECK(list["total"] == 1);
  auto index = client.Get("/");
  REQUIRE(index);
  CHECK(index->status == 200);

  service.Stop();
  CHECK(std::filesystem::exists(state));
  SessionStore reloaded;
  reloaded.LoadFile(state);
  CHECK(reloaded.Get(id)["winner"] == "splitter");
  std::filesystem::remove(state);
}

}  // namespace
}  // namespace sparsity
