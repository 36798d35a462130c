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

// Shallow minors and shallow topological minors.
//
// A depth-d minor model of a pattern H in a host G maps every pattern vertex
// to a branch set: a set of host vertices inducing a connected subgraph in
// which every vertex is within distance d of a designated center. Branch sets
// are pairwise disjoint and every pattern edge is realized by some host edge
// between the two branch sets.
//
// A depth-d topological model maps pattern vertices injectively to host
// vertices and pattern edges to host paths of length at most 2d+1 that share
// no vertices apart from their endpoints.
//
// Models are plain values; the host graph is always passed alongside.

#ifndef SPARSITY_MINORS_H_
#define SPARSITY_MINORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparsity/graph.h"

namespace sparsity {

struct MinorModel {
  Graph pattern;
  int depth = 0;
  std::vector<VertexSet> branch_sets;  // indexed by pattern vertex, sorted
  std::vector<Vertex> centers;         // indexed by pattern vertex

  bool operator==(const MinorModel&) const = default;
};

struct TopoMinorModel {
  Graph pattern;
  int depth = 0;
  std::vector<Vertex> branch_vertices;         // indexed by pattern vertex
  std::vector<std::vector<Vertex>> edge_paths;  // aligned with pattern.edges()

  bool operator==(const TopoMinorModel&) const = default;
};

enum class ModelClause {
  kNone,
  kEmptyBranchSet,
  kCenterOutsideBranchSet,
  kDisjointness,
  kConnectivity,
  kRadius,
  kEdgeRealization,
  kBranchVertexInjectivity,
  kPathEndpoints,
  kPathNotAPath,
  kPathLength,
  kPathDisjointness,
};

std::string_view ClauseName(ModelClause clause);

struct Verification {
  bool ok = true;
  ModelClause clause = ModelClause::kNone;
  std::string detail;

  explicit operator bool() const { return ok; }
};

// Throws std::invalid_argument when the model's arrays do not match the
// pattern and std::out_of_range for host ids outside the host.
Verification VerifyMinorModel(const Graph& host, const MinorModel& model);
Verification VerifyTopoModel(const Graph& host, const TopoMinorModel& model);

enum class SearchStatus { kFound, kAbsent, kBudgetExhausted };

std::string_view SearchStatusName(SearchStatus status);

struct SearchBudget {
  std::int64_t max_nodes = 20'000'000;
};

template <typename Model>
struct SearchResult {
  SearchStatus status = SearchStatus::kAbsent;
  std::optional<Model> model;
  std::int64_t nodes = 0;
};

using MinorSearchResult = SearchResult<MinorModel>;
using TopoSearchResult = SearchResult<TopoMinorModel>;

// Hosts larger than this are rejected by the exact searches.
inline constexpr int kMaxSearchHostVertices = 256;

Graph CliquePattern(int m);
bool IsCompleteGraph(const Graph& g);

// Exact search. Patterns must have at most 6 vertices or be a clique on at
// most 8 vertices (std::invalid_argument otherwise). The search is exhaustive
// unless the node budget runs out, which is reported as kBudgetExhausted and
// never as kAbsent.
//
// Candidate branch sets are unions of at most deg(u) inclusion-minimal host
// paths of length <= depth leaving a center; any model can be trimmed to this
// form, so restricting to it loses nothing. Centers are tried in ascending id
// and ties break towards smaller vertices.
MinorSearchResult FindShallowMinor(const Graph& host, const Graph& pattern, int depth,
                                   SearchBudget budget = {});

TopoSearchResult FindTopoMinor(const Graph& host, const Graph& pattern, int depth,
                               SearchBudget budget = {});

// Tree model with the same depth: each branch set is replaced by the union of
// BFS-tree paths from its center to the endpoints of one chosen realizing
// edge per incident pattern edge. Branch sets only shrink, every output set
// is the vertex set of a subtree of the center's BFS tree (the induced
// subgraph may still carry chords, e.g. a triangle) and has at most
// 1 + deg(u) * depth vertices. BranchTreeEdges() returns that tree.
// Throws std::invalid_argument if the input does not verify.
MinorModel NormalizeToTreeModel(const Graph& host, const MinorModel& model);

// BFS tree of G[branch set] rooted at the center; each non-center vertex is
// attached to its smallest-id neighbor one step closer to the center.
std::vector<Edge> BranchTreeEdges(const Graph& host, const MinorModel& model, Vertex u);

// Size bound enforced on normalized branch sets: 1 + max_degree * depth.
int TreeModelSizeBound(const MinorModel& model);

// True if some branch set is larger than 1 + max_degree * (depth - 1). That
// literal bound undercounts radius-1 stars, so exceeding it is reported but
// not treated as invalid.
bool ExceedsLiteralTreeBound(const MinorModel& model);

// Depth of a minor of a depth-r minor taken at depth s.
int ComposedDepth(int inner_depth, int outer_depth);

// Given inner: M in G at depth r and outer: H in M at depth s, builds a model
// of H in G at depth 2rs + r + s. Each branch set is the union of the inner
// branch sets of the outer branch set's vertices; its center is the vertex of
// minimum eccentricity inside the union (smallest id on ties).
// Throws std::invalid_argument if outer.pattern's host is not inner.pattern.
MinorModel ComposeModels(const Graph& host, const MinorModel& inner,
                         const MinorModel& outer);

struct CliqueProfileCell {
  int depth = 0;
  int omega = 0;             // largest m with K_m found at this depth
  bool cap_reached = false;  // omega hit the cap and a larger clique might fit
  bool truncated = false;    // a search ran out of budget; omega is a lower bound
};

struct CliqueProfile {
  std::vector<CliqueProfileCell> cells;  // depth 0..max_depth
};

CliqueProfile ComputeCliqueProfile(const Graph& g, int max_depth, int max_clique = 8,
                                   SearchBudget budget = {});

// Finite version of the clique-minor to topological-minor conversion: the
// input clique model is normalized to trees, every branch tree is extended by
// its realizing edges, and a node with at least `threshold` children is picked
// in each. Pattern edges are then routed greedily through fresh branch trees,
// consuming at most two intermediate trees per edge. The result is a
// topological model of the largest clique the greedy run sustains, at depth
// 3d + 1 (paths of length at most 6d + 3). Returns nullopt if no tree has a
// node meeting the threshold or fewer than two pattern vertices get placed.
// Throws std::invalid_argument for non-clique patterns or thresholds < 2.
std::optional<TopoMinorModel> TopologizeCliqueMinor(const Graph& host,
                                                    const MinorModel& model,
                                                    int threshold = 2);

}  // namespace sparsity

#endif  // SPARSITY_MINORS_H_
