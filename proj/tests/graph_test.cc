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

#include <random>

#include "doctest.h"
#include "sparsity/families.h"
#include "sparsity/graph.h"
#include "support/oracles.h"

namespace sparsity {
namespace {

TEST_CASE("graph rejects loops, duplicates and bad endpoints") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  Graph g(3, {{2, 1}, {0, 1}});
  CHECK(g.num_edges() == 2);
  CHECK(g.edges().front() == Edge{0, 1});
  CHECK(g.HasEdge(1, 2));
  CHECK_FALSE(g.HasEdge(0, 2));
}

TEST_CASE("bfs distances agree with floyd-warshall") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testing::RandomGraph(1 + trial % 12, 25, rng);
    auto all = testing::AllPairsDistances(g);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
      CHECK(BfsDistances(g, s) == all[s]);
    }
  }
}

TEST_CASE("bounded bfs and balls") {
  Graph p = Generate(FamilySpec::Path(6));
  auto dist = BfsDistances(p, 0, 2);
  CHECK(dist[2] == 2);
  CHECK(dist[3] == kUnreachable);
  CHECK(Ball(p, 3, 1) == VertexSet{2, 3, 4});
  CHECK(Ball(p, 3, 0) == VertexSet{3});
}

TEST_CASE("bfs within an allowed set") {
  Graph c = Generate(FamilySpec::Cycle(6));
  std::vector<char> allowed(6, 1);
  allowed[1] = 0;
  auto dist = BfsDistancesWithin(c, 0, allowed);
  CHECK(dist[2] == 4);
  CHECK(dist[1] == kUnreachable);
}

TEST_CASE("induced subgraphs keep the requested order") {
  Graph c = Generate(FamilySpec::Cycle(5));
  InducedSubgraph sub = InduceOn(c, {3, 0, 4});
  CHECK(sub.to_original == VertexSet{3, 0, 4});
  CHECK(sub.graph.num_edges() == 2);
  CHECK(sub.from_original[1] == kUnreachable);
  InducedSubgraph del = DeleteVertices(c, {0});
  CHECK(del.graph.num_vertices() == 4);
  CHECK(del.graph.num_edges() == 3);
}

TEST_CASE("power graph and scattered check") {
  Graph p = Generate(FamilySpec::Path(5));
  Graph p2 = PowerGraph(p, 2);
  CHECK(p2.HasEdge(0, 2));
  CHECK_FALSE(p2.HasEdge(0, 3));
  CHECK(IsScattered(p, {0, 3}, 1).scattered);
  ScatterCheck bad = IsScattered(p, {0, 2}, 1);
  CHECK_FALSE(bad.scattered);
  REQUIRE(bad.violation.has_value());
  CHECK(*bad.violation == std::pair<Vertex, Vertex>{0, 2});
}

TEST_CASE("connectivity of induced sets") {
  Graph c = Generate(FamilySpec::Cycle(6));
  CHECK(InducesConnected(c, {0, 1, 2}));
  CHECK_FALSE(InducesConnected(c, {0, 2}));
}

TEST_CASE("family generators") {
  CHECK(Generate(FamilySpec::Clique(5)).num_edges() == 10);
  CHECK(Generate(FamilySpec::Grid(3, 4)).num_edges() == 17);
  Graph sc = Generate(FamilySpec::SubdividedClique(4, 2));
  CHECK(sc.num_vertices() == 4 + 6 * 2);
  CHECK(sc.num_edges() == 6 * 3);
  CHECK(SubdividedCliqueHubs(4) == VertexSet{0, 1, 2, 3});
  CHECK(Generate(FamilySpec::ErdosRenyi(12, 40, 3)) == Generate(FamilySpec::ErdosRenyi(12, 40, 3)));
  CHECK(Generate(FamilySpec::Star(3)).degree(0) == 3);
  CHECK_THROWS_AS(Generate(FamilySpec::Cycle(2)), std::invalid_argument);
  CHECK_THROWS_AS(Generate({FamilyKind::kGrid, {}}), std::invalid_argument);
  CHECK_THROWS_AS(ParseFamilyKind("wheel"), std::invalid_argument);
  CHECK(ParseFamilyKind(FamilyKindName(FamilyKind::kSubdividedClique)) ==
        FamilyKind::kSubdividedClique);
}

TEST_CASE("isomorphism class counts") {
  // Known counts of unlabeled graphs.
  CHECK(testing::AllGraphsUpToIso(4).size() == 11);
  CHECK(testing::AllGraphsUpToIso(5).size() == 34);
  CHECK(testing::AllGraphsUpToIso(6).size() == 156);
}

}  // namespace
}  // namespace sparsity
