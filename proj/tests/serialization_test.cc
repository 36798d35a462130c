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
#include <random>

#include "doctest.h"
#include "sparsity/families.h"
#include "sparsity/graph_io.h"
#include "sparsity/serialization.h"
#include "support/oracles.h"

namespace sparsity {
namespace {

namespace fs = std::filesystem;

// Serialize, print, parse, deserialize, and compare both values and text.
template <typename T, typename To, typename From>
void RoundTrip(const T& value, To to, From from) {
  Json j = to(value);
  std::string text = j.dump();
  T back = from(ParseJson(text));
  CHECK(back == value);
  CHECK(to(back).dump() == text);
}

std::vector<Graph> Corpus() {
  std::vector<Graph> out;
  for (const auto& entry : fs::directory_iterator(FIXTURE_DIR)) {
    if (entry.is_regular_file()) out.push_back(ReadEdgeListFile(entry.path()));
  }
  return out;
}

TEST_CASE("graphs round trip") {
  for (const Graph& g : Corpus()) RoundTrip(g, GraphToJson, GraphFromJson);
}

TEST_CASE("models round trip") {
  for (const Graph& g : Corpus()) {
    if (g.num_vertices() == 0) continue;
    for (int m = 2; m <= 4; ++m) {
      auto r = FindShallowMinor(g, CliquePattern(m), 1);
      if (r.model) RoundTrip(*r.model, MinorModelToJson, MinorModelFromJson);
      auto t = FindTopoMinor(g, CliquePattern(m), 1);
      if (t.model) RoundTrip(*t.model, TopoModelToJson, TopoModelFromJson);
    }
  }
}

TEST_CASE("wideness results round trip") {
  UqwParams p;
  p.target = 2;
  for (const Graph& g : Corpus()) {
    VertexSet w;
    for (Vertex v = 0; v < g.num_vertices(); ++v) w.push_back(v);
    UqwResult r = UqwConstruct(g, w, 1, p);
    if (r.certificate) RoundTrip(*r.certificate, CertificateToJson, CertificateFromJson);
    if (r.witness) RoundTrip(*r.witness, WitnessToJson, WitnessFromJson);
    Json j = UqwResultToJson(r);
    CHECK(j["outcome"] == std::string(UqwOutcomeName(r.outcome)));
  }
  Graph k = Generate(FamilySpec::Clique(8));
  p.target = 3;
  p.h = 3;
  UqwResult r = UqwConstruct(k, {0, 1, 2, 3, 4, 5, 6, 7}, 1, p);
  REQUIRE(r.witness);
  RoundTrip(*r.witness, WitnessToJson, WitnessFromJson);
}

TEST_CASE("game values round trip") {
  RoundTrip(GameConfig{2, std::nullopt, 1}, ConfigToJson, ConfigFromJson);
  RoundTrip(GameConfig{0, 5, std::nullopt}, ConfigToJson, ConfigFromJson);
  RoundTrip(Move{3, {1, 4}}, MoveToJson, MoveFromJson);
  for (const Graph& g : Corpus()) {
    auto gp = std::make_shared<const Graph>(g);
    StrategyTrace t = PlayMatch(gp, {1, std::nullopt, std::nullopt}, PathUnionSplitter(),
                                GreedyBallConnector());
    RoundTrip(t, TraceToJson, TraceFromJson);
  }
}

TEST_CASE("readers reject malformed shapes") {
  CHECK_THROWS_AS(ParseJson("{"), FormatError);
  CHECK_THROWS_AS(GraphFromJson(ParseJson(R"({"n": 2})")), FormatError);
  CHECK_THROWS_AS(GraphFromJson(ParseJson(R"({"n": 2, "edges": [[0, 0]]})")), FormatError);
  CHECK_THROWS_AS(GraphFromJson(ParseJson(R"({"n": 2, "edges": [[0]]})")), FormatError);
  CHECK_THROWS_AS(MinorModelFromJson(ParseJson(R"({"kind": "topo"})")), FormatError);
  CHECK_THROWS_AS(ConfigFromJson(ParseJson(R"({"d": "x"})")), FormatError);
  CHECK_THROWS_AS(TraceFromJson(ParseJson(R"({"config": {"d": 1}, "moves": 3})")), FormatError);
}

TEST_CASE("output is deterministic") {
  Graph g = Generate(FamilySpec::Grid(3, 3));
  auto r = FindShallowMinor(g, CliquePattern(4), 1);
  REQUIRE(r.model);
  CHECK(MinorModelToJson(*r.model).dump() ==
        MinorModelToJson(*FindShallowMinor(g, CliquePattern(4), 1).model).dump());
}

}  // namespace
}  // namespace sparsity
