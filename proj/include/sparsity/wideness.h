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

// Scattered sets and the iterative wideness construction.
//
// A set X is d-scattered in G if distinct members are at distance > 2d. The
// wideness construction deletes a small set S and extracts a large
// d-scattered X inside a target set W, or stops with a clique minor that
// explains why it could not.

#ifndef SPARSITY_WIDENESS_H_
#define SPARSITY_WIDENESS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "sparsity/graph.h"
#include "sparsity/minors.h"

namespace sparsity {

inline constexpr int kMaxExactScatterVertices = 14;

// Lexicographically least maximum d-scattered set (a maximum independent set
// of PowerGraph(g, 2d)). With size_cap, the search stops at that size and
// returns the least set of that size. Throws std::invalid_argument above
// kMaxExactScatterVertices vertices; use UqwConstruct for larger graphs.
VertexSet MaxScatteredExact(const Graph& g, int d, std::optional<int> size_cap = std::nullopt);

struct DisjointNeighborhoodResult {
  enum class Larger { kSubset, kCliqueMinor };

  VertexSet subset;                        // A-vertices, pairwise disjoint neighborhoods
  std::optional<MinorModel> clique_model;  // depth-1 clique model in h, if attempted
  Larger larger = Larger::kSubset;
};

// Greedy selection on a bipartite graph with sides A (given) and V(h) \ A.
// Candidates are scanned by `priority` first (in that order), then by degree
// ascending and id ascending. If fewer than `target` vertices are found, a
// clique minor is grown from common neighbors: every new A-vertex u_k must
// share a fresh neighbor with each earlier u_j; branch set j is u_j plus the
// neighbors it shares with later picks. The larger object is labelled
// (ties favour the subset). Throws std::invalid_argument if A is not one side
// of a bipartition.
DisjointNeighborhoodResult DisjointNeighborhoodSubset(const Graph& h, const VertexSet& side_a,
                                                      int target,
                                                      const std::vector<Vertex>& priority = {});

struct UqwParams {
  int target = 2;
  std::optional<int> h;           // neighbor threshold; defaults to target
  std::optional<int> kappa_cap;   // per-round cap; defaults to target

  int effective_h() const { return h.value_or(target); }
  int effective_kappa() const { return kappa_cap.value_or(target); }
};

struct UqwRound {
  VertexSet R;
  int X_size = 0;

  bool operator==(const UqwRound&) const = default;
};

struct WidenessCertificate {
  int d = 0;
  VertexSet S;
  VertexSet X;
  VertexSet W;
  std::vector<UqwRound> rounds;

  bool operator==(const WidenessCertificate&) const = default;
};

enum class WitnessSource { kBallClique, kBiclique, kCommonNeighbors };

std::string_view WitnessSourceName(WitnessSource source);
WitnessSource ParseWitnessSource(std::string_view name);

struct DensityWitness {
  MinorModel model;
  WitnessSource source = WitnessSource::kBallClique;
  int round = 0;

  bool operator==(const DensityWitness&) const = default;
};

enum class UqwOutcome { kCertificate, kDensityWitness, kTargetUnmet };

std::string_view UqwOutcomeName(UqwOutcome outcome);

struct UqwResult {
  UqwOutcome outcome = UqwOutcome::kTargetUnmet;
  // Present whenever all rounds ran: the certificate itself, the shortfall
  // for kTargetUnmet, and the achieved (S, X) next to a late witness.
  std::optional<WidenessCertificate> certificate;
  std::optional<DensityWitness> witness;
};

// Runs rounds i = 0..d-1 starting from S = {}, X = W. Every returned object is
// verified; an internal invariant breach throws std::logic_error. Throws
// std::invalid_argument for W outside the graph, h < 2, target < 2 or
// kappa_cap < 1.
UqwResult UqwConstruct(const Graph& g, const VertexSet& w, int d, const UqwParams& params);

// X within W \ S and d-scattered in g - S.
Verification ValidateCertificate(const Graph& g, const WidenessCertificate& cert);

struct QwAnalysis {
  Graph graph;
  bool applicable = true;   // t <= 2d
  bool exhaustive = false;  // every S with |S| <= s_cap was examined
  int s_cap = 0;
  int sets_examined = 0;
  int baseline_scattered_hubs = 0;  // S = {}
  int max_components = 0;           // components holding a surviving hub
  int max_component_diameter = 0;
  int max_scattered_hubs = 0;
  bool hubs_always_connected = true;
};

// Subdivided clique with m hubs and t subdivisions per edge, analysed over
// deletion sets S of size <= s_cap: exhaustively when m <= 6, otherwise on
// 200 seeded samples.
QwAnalysis QwCounterexample(int m, int t, int d, int s_cap = 1);

}  // namespace sparsity

#endif  // SPARSITY_WIDENESS_H_
