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

// Test-only reference implementations. Everything here is written straight
// from the definitions, shares no search code with the library, and is only
// meant for tiny inputs.

#ifndef SPARSITY_TESTS_ORACLES_H_
#define SPARSITY_TESTS_ORACLES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sparsity/graph.h"
#include "sparsity/minors.h"
#include "sparsity/splitter.h"

namespace sparsity::testing {

// --- graphs ---------------------------------------------------------------

// Each pair joined independently with probability percent/100.
Graph RandomGraph(int n, int percent, std::mt19937_64& rng);

// One representative per isomorphism class on exactly n vertices (n <= 7).
std::vector<Graph> AllGraphsUpToIso(int n);

bool IsConnected(const Graph& g);

// Plain all-pairs distances by Floyd-Warshall; kUnreachable when disconnected.
std::vector<std::vector<int>> AllPairsDistances(const Graph& g);

// --- minors ---------------------------------------------------------------

// Enumerates every assignment of host vertices to {unused, pattern vertex}
// and checks the definition directly (host <= 9 vertices). For complete
// patterns only one labelling per partition is visited.
bool OracleHasShallowMinor(const Graph& host, const Graph& pattern, int depth);

// Enumerates injective maps and all simple paths (host <= 8 vertices).
bool OracleHasTopoMinor(const Graph& host, const Graph& pattern, int depth);

// Checks a minor model from the definition; returns "" or a reason.
std::string OracleCheckMinorModel(const Graph& host, const MinorModel& model);
std::string OracleCheckTopoModel(const Graph& host, const TopoMinorModel& model);

struct NestedModels {
  Graph host;
  MinorModel inner;  // middle graph in host at depth r
  MinorModel outer;  // pattern in middle graph at depth s
};

// Random pattern expanded twice by random trees; host has <= max_host vertices.
NestedModels RandomNestedModels(int r, int s, int max_host, std::mt19937_64& rng);

// --- scattered sets --------------------------------------------------------

// Lexicographically least maximum d-scattered set by subset enumeration.
VertexSet OracleMaxScattered(const Graph& g, int d);

bool OracleIsScattered(const Graph& g, const VertexSet& x, int d);

// --- splitter game ---------------------------------------------------------

// Bounded minimax over bitmask arenas for any budget m (n <= 16): can the
// splitter empty `arena` within `rounds` rounds?
class BoundedMinimax {
 public:
  BoundedMinimax(const Graph& g, int d, int m);

  bool SplitterWins(std::uint32_t arena, int rounds);

  // Smallest winning W (by size, then lexicographically) answering v, or
  // nullopt if every answer loses.
  std::optional<VertexSet> WinningReply(std::uint32_t arena, int rounds, Vertex v);

  // Positional strategy for the (ell, m, d) game built from WinningReply.
  SplitterStrategy Strategy(int ell);

  std::uint32_t Ball(std::uint32_t arena, Vertex v) const;
  std::uint32_t Full() const;

 private:
  const Graph g_;
  int d_;
  int m_;
  std::map<std::pair<std::uint32_t, int>, bool> memo_;

  std::vector<std::uint32_t> Replies(std::uint32_t ball) const;
};

std::uint32_t ToMask(const VertexSet& s);
VertexSet FromMask(std::uint32_t mask);

}  // namespace sparsity::testing

#endif  // SPARSITY_TESTS_ORACLES_H_
