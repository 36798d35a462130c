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
#include <set>

#include "doctest.h"
#include "sparsity/families.h"
#include "sparsity/minors.h"
#include "support/oracles.h"

namespace sparsity {
namespace {

Graph PathPattern(int n) { return Generate(FamilySpec::Path(n)); }

TEST_CASE("verifier names the violated clause") {
  Graph host = Generate(FamilySpec::Path(5));
  MinorModel m{CliquePattern(2), 1, {{0, 1}, {2, 3}}, {0, 2}};
  CHECK(VerifyMinorModel(host, m).ok);

  auto bad = m;
  bad.branch_sets[1] = {};
  CHECK(VerifyMinorModel(host, bad).clause == ModelClause::kEmptyBranchSet);
  bad = m;
  bad.centers[0] = 3;
  CHECK(VerifyMinorModel(host, bad).clause == ModelClause::kCenterOutsideBranchSet);
  bad = m;
  bad.branch_sets[1] = {1, 2};
  bad.centers[1] = 1;
  CHECK(VerifyMinorModel(host, bad).clause == ModelClause::kDisjointness);
  bad = m;
  bad.branch_sets[0] = {0, 2};
  bad.branch_sets[1] = {3, 4};
  bad.centers[1] = 3;
  CHECK(VerifyMinorModel(host, bad).clause == ModelClause::kConnectivity);
  bad = m;
  bad.depth = 0;
  CHECK(VerifyMinorModel(host, bad).clause == ModelClause::kRadius);
  bad = m;
  bad.branch_sets[1] = {3, 4};
  bad.centers[1] = 3;
  CHECK(VerifyMinorModel(host, bad).clause == ModelClause::kEdgeRealization);
  bad = m;
  bad.branch_sets[1] = {7};
  bad.centers[1] = 7;
  CHECK_THROWS_AS(VerifyMinorModel(host, bad), std::out_of_range);
  bad = m;
  bad.centers.pop_back();
  CHECK_THROWS_AS(VerifyMinorModel(host, bad), std::invalid_argument);
}

TEST_CASE("topological verifier clauses") {
  Graph host = Generate(FamilySpec::Cycle(6));
  TopoMinorModel t{CliquePattern(3), 1, {0, 2, 4}, {{0, 1, 2}, {0, 5, 4}, {2, 3, 4}}};
  CHECK(VerifyTopoModel(host, t).ok);
  auto bad = t;
  bad.branch_vertices = {0, 0, 4};
  CHECK(VerifyTopoModel(host, bad).clause == ModelClause::kBranchVertexInjectivity);
  bad = t;
  bad.edge_paths[0] = {1, 2};
  CHECK(VerifyTopoModel(host, bad).clause == ModelClause::kPathEndpoints);
  bad = t;
  bad.edge_paths[0] = {0, 2};
  CHECK(VerifyTopoModel(host, bad).clause == ModelClause::kPathNotAPath);
  bad = t;
  bad.depth = 0;
  CHECK(VerifyTopoModel(host, bad).clause == ModelClause::kPathLength);
  Graph k4 = CliquePattern(4);
  TopoMinorModel shared{CliquePattern(3), 1, {0, 1, 2}, {{0, 3, 1}, {0, 3, 2}, {1, 2}}};
  CHECK(VerifyTopoModel(k4, shared).clause == ModelClause::kPathDisjointness);
}

TEST_CASE("minor search agrees with the oracle on assorted patterns") {
  std::mt19937_64 rng(2024);
  std::vector<Graph> patterns = {PathPattern(3), Generate(FamilySpec::Cycle(4)),
                                 Generate(FamilySpec::Star(3)), CliquePattern(3)};
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Graph host = testing::RandomGraph(4 + trial % 4, 35, rng);
    for (const Graph& pattern : patterns) {
      for (int d = 0; d <= 1; ++d) {
        MinorSearchResult r = FindShallowMinor(host, pattern, d);
        REQUIRE(r.status != SearchStatus::kBudgetExhausted);
        bool expect = testing::OracleHasShallowMinor(host, pattern, d);
        CHECK((r.status == SearchStatus::kFound) == expect);
        if (r.model) CHECK(testing::OracleCheckMinorModel(host, *r.model) == "");
        ++checked;
      }
    }
  }
  CHECK(checked == 480);
}

TEST_CASE("topological search agrees with the oracle") {
  std::mt19937_64 rng(77);
  std::vector<Graph> patterns = {CliquePattern(3), CliquePattern(4), PathPattern(3)};
  for (int trial = 0; trial < 80; ++trial) {
    Graph host = testing::RandomGraph(4 + trial % 4, 45, rng);
    for (const Graph& pattern : patterns) {
      for (int d = 0; d <= 1; ++d) {
        TopoSearchResult r = FindTopoMinor(host, pattern, d);
        REQUIRE(r.status != SearchStatus::kBudgetExhausted);
        CAPTURE(trial);
        CHECK((r.status == SearchStatus::kFound) == testing::OracleHasTopoMinor(host, pattern, d));
        if (r.model) CHECK(testing::OracleCheckTopoModel(host, *r.model) == "");
      }
    }
  }
}

TEST_CASE("known shallow minors") {
  Graph grid3 = Generate(FamilySpec::Grid(3, 3));
  CHECK(FindShallowMinor(grid3, CliquePattern(4), 1).status == SearchStatus::kFound);
  CHECK(FindShallowMinor(grid3, CliquePattern(4), 0).status == SearchStatus::kAbsent);
  Graph c12 = Generate(FamilySpec::Cycle(12));
  CHECK(FindShallowMinor(c12, CliquePattern(3), 1).status == SearchStatus::kAbsent);
  CHECK(FindShallowMinor(c12, CliquePattern(3), 2).status == SearchStatus::kFound);
  Graph sub = Generate(FamilySpec::SubdividedClique(4, 1));
  CHECK(FindTopoMinor(sub, CliquePattern(4), 0).status == SearchStatus::kAbsent);
  TopoSearchResult t = FindTopoMinor(sub, CliquePattern(4), 1);
  REQUIRE(t.model);
  CHECK(t.model->edge_paths[0].size() == 3);
}

TEST_CASE("budget exhaustion is never reported as absent") {
  Graph g = Generate(FamilySpec::Grid(6, 6));
  MinorSearchResult r = FindShallowMinor(g, CliquePattern(6), 2, {50});
  CHECK(r.status == SearchStatus::kBudgetExhausted);
  CHECK_FALSE(r.model.has_value());
}

TEST_CASE("search guards") {
  Graph g = Generate(FamilySpec::Path(8));
  CHECK_THROWS_AS(FindShallowMinor(g, PathPattern(7), 1), std::invalid_argument);
  CHECK_THROWS_AS(FindShallowMinor(CliquePattern(10), CliquePattern(9), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(FindShallowMinor(Generate(FamilySpec::Path(300)), CliquePattern(3), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(FindShallowMinor(g, CliquePattern(3), -1), std::invalid_argument);
  // Pattern larger than the host is simply absent.
  CHECK(FindShallowMinor(CliquePattern(3), CliquePattern(5), 3).status == SearchStatus::kAbsent);
}

void CheckTree(const Graph& host, const MinorModel& model, Vertex u) {
  auto edges = BranchTreeEdges(host, model, u);
  const VertexSet& set = model.branch_sets[u];
  CHECK(edges.size() + 1 == set.size());
  std::set<Vertex> members(set.begin(), set.end());
  for (const Edge& e : edges) {
    CHECK(host.HasEdge(e.u, e.v));
    CHECK(members.count(e.u));
    CHECK(members.count(e.v));
  }
  // n - 1 edges plus connectivity gives a tree.
  Graph tree(host.num_vertices(), edges);
  CHECK(InducesConnected(tree, set));
}

TEST_CASE("normalization shrinks to bounded trees") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto nested = testing::RandomNestedModels(2, 0, 12, rng);
    const MinorModel& in = nested.inner;
    MinorModel out = NormalizeToTreeModel(nested.host, in);
    CHECK(testing::OracleCheckMinorModel(nested.host, out) == "");
    CHECK(out.depth == in.depth);
    for (int u = 0; u < in.pattern.num_vertices(); ++u) {
      for (Vertex x : out.branch_sets[u]) {
        CHECK(std::binary_search(in.branch_sets[u].begin(), in.branch_sets[u].end(), x));
      }
      CHECK(static_cast<int>(out.branch_sets[u].size()) <= TreeModelSizeBound(out));
      CheckTree(nested.host, out, u);
    }
  }
}

TEST_CASE("normalized grid model is induced acyclic") {
  Graph grid = Generate(FamilySpec::Grid(4, 4));
  MinorSearchResult r = FindShallowMinor(grid, CliquePattern(4), 2);
  REQUIRE(r.model);
  MinorModel t = NormalizeToTreeModel(grid, *r.model);
  for (const VertexSet& set : t.branch_sets) {
    InducedSubgraph sub = InduceOn(grid, set);
    CHECK(sub.graph.num_edges() + 1 == sub.graph.num_vertices());
  }
}

TEST_CASE("literal tree bound flags radius-one stars") {
  Graph star = Generate(FamilySpec::Star(3));
  MinorModel m{CliquePattern(2), 1, {{0, 1}, {2}}, {0, 2}};
  CHECK(VerifyMinorModel(star, m).ok);
  CHECK(ExceedsLiteralTreeBound(m));
  CHECK(TreeModelSizeBound(m) == 2);
  MinorModel tiny{CliquePattern(2), 1, {{0}, {1}}, {0, 1}};
  CHECK_FALSE(ExceedsLiteralTreeBound(tiny));
  CHECK_THROWS_AS(NormalizeToTreeModel(Generate(FamilySpec::Path(2)), m), std::out_of_range);
}

TEST_CASE("composition depth") {
  CHECK(ComposedDepth(0, 0) == 0);
  CHECK(ComposedDepth(1, 1) == 4);
  CHECK(ComposedDepth(2, 1) == 7);
  CHECK(ComposedDepth(2, 2) == 12);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto nested = testing::RandomNestedModels(1, 1, 12, rng);
    MinorModel c = ComposeModels(nested.host, nested.inner, nested.outer);
    CHECK(c.depth == 4);
    CHECK(testing::OracleCheckMinorModel(nested.host, c) == "");
  }
  auto nested = testing::RandomNestedModels(1, 1, 12, rng);
  auto wrong = nested.outer;
  wrong.pattern = CliquePattern(wrong.pattern.num_vertices());
  wrong.branch_sets[0] = {999};
  CHECK_THROWS(ComposeModels(nested.host, nested.inner, wrong));
}

TEST_CASE("clique profiles") {
  CliqueProfile k5 = ComputeCliqueProfile(CliquePattern(5), 1);
  CHECK(k5.cells[0].omega == 5);
  CHECK_FALSE(k5.cells[0].cap_reached);
  CliqueProfile c9 = ComputeCliqueProfile(Generate(FamilySpec::Cycle(9)), 2);
  CHECK(c9.cells[0].omega == 2);
  CHECK(c9.cells[1].omega == 3);
  CHECK(c9.cells[2].omega == 3);
  CliqueProfile capped = ComputeCliqueProfile(CliquePattern(6), 0, 4);
  CHECK(capped.cells[0].omega == 4);
  CHECK(capped.cells[0].cap_reached);
}

TEST_CASE("topologizing clique models") {
  Graph k5 = CliquePattern(5);
  MinorModel m = *FindShallowMinor(k5, CliquePattern(5), 0).model;
  auto topo = TopologizeCliqueMinor(k5, m);
  REQUIRE(topo);
  CHECK(topo->pattern.num_vertices() == 5);
  CHECK(topo->depth == 1);
  CHECK(testing::OracleCheckTopoModel(k5, *topo) == "");

  std::mt19937_64 rng(31);
  int produced = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Graph host = testing::RandomGraph(10, 40, rng);
    for (int d = 1; d <= 2; ++d) {
      auto r = FindShallowMinor(host, CliquePattern(4), d);
      if (!r.model) continue;
      auto t = TopologizeCliqueMinor(host, *r.model);
      if (!t) continue;
      ++produced;
      CHECK(t->depth == 3 * d + 1);
      CHECK(IsCompleteGraph(t->pattern));
      CHECK(testing::OracleCheckTopoModel(host, *t) == "");
    }
  }
  CHECK(produced > 0);
  CHECK_THROWS_AS(TopologizeCliqueMinor(k5, m, 1), std::invalid_argument);
  MinorModel path_model{PathPattern(3), 0, {{0}, {1}, {2}}, {0, 1, 2}};
  CHECK_THROWS_AS(TopologizeCliqueMinor(k5, path_model), std::invalid_argument);
}

}  // namespace
}  // namespace sparsity
