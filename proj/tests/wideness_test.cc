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
#include "sparsity/wideness.h"
#include "support/oracles.h"

namespace sparsity {
namespace {

VertexSet All(const Graph& g) {
  VertexSet w(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) w[v] = v;
  return w;
}

TEST_CASE("exact scattered sets match subset enumeration") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = testing::RandomGraph(1 + trial % 11, 20 + trial % 30, rng);
    for (int d = 0; d <= 2; ++d) {
      CAPTURE(trial);
      CAPTURE(d);
      CHECK(MaxScatteredExact(g, d) == testing::OracleMaxScattered(g, d));
    }
  }
}

TEST_CASE("scattered set corner cases") {
  Graph c12 = Generate(FamilySpec::Cycle(12));
  CHECK(MaxScatteredExact(c12, 1) == VertexSet{0, 3, 6, 9});
  CHECK(MaxScatteredExact(c12, 0).size() == 12);
  CHECK(MaxScatteredExact(c12, 1, 2) == VertexSet{0, 3});
  CHECK(MaxScatteredExact(Graph::Edgeless(0), 1).empty());
  CHECK(MaxScatteredExact(Graph::Edgeless(4), 3).size() == 4);
  CHECK_THROWS_AS(MaxScatteredExact(Generate(FamilySpec::Path(15)), 1), std::invalid_argument);
}

TEST_CASE("disjoint neighborhoods in a bipartite graph") {
  // A = {0,1,2}; 0 and 1 share neighbor 3, 2 has its own neighbor 5.
  Graph h(6, {{0, 3}, {1, 3}, {1, 4}, {2, 5}});
  auto r = DisjointNeighborhoodSubset(h, {0, 1, 2}, 2);
  CHECK(r.subset.size() == 2);
  CHECK(r.larger == DisjointNeighborhoodResult::Larger::kSubset);
  CHECK_THROWS_AS(DisjointNeighborhoodSubset(h, {0, 3}, 2), std::invalid_argument);
}

TEST_CASE("common neighbors grow a clique when neighborhoods overlap") {
  // K_{3,4}: every pair of A-vertices shares plenty of neighbors.
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 7; ++b) edges.push_back({a, b});
  }
  Graph h(7, edges);
  auto r = DisjointNeighborhoodSubset(h, {0, 1, 2}, 3);
  CHECK(r.subset.size() == 1);
  REQUIRE(r.clique_model);
  CHECK(r.clique_model->pattern.num_vertices() == 3);
  CHECK(r.larger == DisjointNeighborhoodResult::Larger::kCliqueMinor);
  CHECK(testing::OracleCheckMinorModel(h, *r.clique_model) == "");
}

TEST_CASE("sparse fixtures yield certificates") {
  UqwParams p;
  p.target = 3;
  p.kappa_cap = 8;
  for (const Graph& g : {Generate(FamilySpec::Star(9)), Generate(FamilySpec::Cycle(24)),
                         Generate(FamilySpec::Grid(6, 6))}) {
    for (int d = 1; d <= 2; ++d) {
      UqwResult r = UqwConstruct(g, All(g), d, p);
      CHECK(r.outcome == UqwOutcome::kCertificate);
      REQUIRE(r.certificate);
      CHECK(r.certificate->X.size() >= 3);
      CHECK(ValidateCertificate(g, *r.certificate).ok);
    }
  }
}

TEST_CASE("cliques yield density witnesses") {
  UqwParams p;
  p.target = 3;
  p.h = 3;
  for (int n = 8; n <= 10; ++n) {
    Graph k = Generate(FamilySpec::Clique(n));
    UqwResult r = UqwConstruct(k, All(k), 1, p);
    CHECK(r.outcome == UqwOutcome::kDensityWitness);
    REQUIRE(r.witness);
    CHECK(r.witness->model.depth <= 4);
    CHECK(testing::OracleCheckMinorModel(k, r.witness->model) == "");
  }
}

TEST_CASE("certificate validation catches tampering") {
  Graph c = Generate(FamilySpec::Cycle(12));
  UqwParams p;
  p.target = 3;
  UqwResult r = UqwConstruct(c, All(c), 1, p);
  REQUIRE(r.certificate);
  auto cert = *r.certificate;
  CHECK(ValidateCertificate(c, cert).ok);
  cert.X.push_back(cert.X.front() + 1);
  cert.X = Normalized(cert.X);
  CHECK_FALSE(ValidateCertificate(c, cert).ok);
  cert = *r.certificate;
  cert.W = {cert.X.front()};
  CHECK_FALSE(ValidateCertificate(c, cert).ok);
}

TEST_CASE("parameter checks") {
  Graph c = Generate(FamilySpec::Cycle(6));
  UqwParams p;
  p.target = 1;
  CHECK_THROWS_AS(UqwConstruct(c, All(c), 1, p), std::invalid_argument);
  p.target = 2;
  CHECK_THROWS_AS(UqwConstruct(c, {17}, 1, p), std::invalid_argument);
  p.h = 1;
  CHECK_THROWS_AS(UqwConstruct(c, All(c), 1, p), std::invalid_argument);
}

TEST_CASE("target unmet reports the shortfall") {
  Graph c = Generate(FamilySpec::Path(6));
  UqwParams p;
  p.target = 5;
  p.kappa_cap = 8;
  UqwResult r = UqwConstruct(c, All(c), 2, p);
  CHECK(r.outcome == UqwOutcome::kTargetUnmet);
  REQUIRE(r.certificate);
  CHECK(ValidateCertificate(c, *r.certificate).ok);
  CHECK(r.certificate->X.size() < 5);
}

TEST_CASE("subdivided clique deletion analysis") {
  QwAnalysis a = QwCounterexample(4, 1, 1);
  CHECK(a.applicable);
  CHECK(a.exhaustive);
  CHECK(a.sets_examined == 11);
  CHECK(a.baseline_scattered_hubs == 1);
  CHECK(a.max_scattered_hubs == 2);
  CHECK(a.hubs_always_connected);
  CHECK(a.max_component_diameter == 4);
  QwAnalysis far = QwCounterexample(5, 5, 1);
  CHECK_FALSE(far.applicable);
  CHECK(far.baseline_scattered_hubs == 5);
  QwAnalysis sampled = QwCounterexample(8, 1, 1);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.sets_examined == 201);
  CHECK_THROWS_AS(QwCounterexample(1, 1, 1), std::invalid_argument);
}

TEST_CASE("worked examples") {
  SUBCASE("star leaves split off by the center") {
    Graph g = Generate(FamilySpec::Star(20));
    VertexSet leaves;
    for (Vertex v = 1; v <= 20; ++v) leaves.push_back(v);
    UqwParams p;
    p.target = 20;
    p.h = 2;
    UqwResult r = UqwConstruct(g, leaves, 3, p);
    REQUIRE(r.outcome == UqwOutcome::kCertificate);
    CHECK(r.certificate->S == VertexSet{0});
    CHECK(r.certificate->X == leaves);
  }
  SUBCASE("long cycle needs no deletions") {
    Graph g = Generate(FamilySpec::Cycle(24));
    UqwParams p;
    p.target = 8;
    UqwResult r = UqwConstruct(g, All(g), 1, p);
    REQUIRE(r.outcome == UqwOutcome::kCertificate);
    CHECK(r.certificate->S.empty());
    CHECK(r.certificate->X.size() >= 8);
    CHECK(ValidateCertificate(g, *r.certificate).ok);
  }
  SUBCASE("large clique gives a witness") {
    Graph g = Generate(FamilySpec::Clique(12));
    UqwParams p;
    p.target = 3;
    p.h = 2;
    UqwResult r = UqwConstruct(g, All(g), 1, p);
    REQUIRE(r.outcome == UqwOutcome::kDensityWitness);
    CHECK(testing::OracleCheckMinorModel(g, r.witness->model) == "");
  }
}

}  // namespace
}  // namespace sparsity
