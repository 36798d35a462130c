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

#ifndef SPARSITY_GRAPH_H_
#define SPARSITY_GRAPH_H_

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sparsity {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

// Marker distance for vertices in different components.
inline constexpr int kUnreachable = -1;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Immutable simple undirected graph on vertices 0..n-1.
//
// Edges are stored normalized (u < v) and sorted lexicographically; every
// vertex keeps a sorted neighbor list.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on self-loops, duplicate edges, or endpoints
  // outside [0, n).
  Graph(int num_vertices, std::vector<Edge> edges);

  static Graph Edgeless(int num_vertices);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  int max_degree() const;
  bool HasEdge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < num_vertices(); }

  bool operator==(const Graph& other) const { return edges_ == other.edges_ &&
                                                     num_vertices() == other.num_vertices(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Induced subgraph together with the id maps between both graphs.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;    // new id -> original id
  std::vector<Vertex> from_original;  // original id -> new id or kUnreachable
};

// Single-source BFS distances; kUnreachable for other components. When
// max_depth >= 0 the search stops after that many layers.
std::vector<int> BfsDistances(const Graph& g, Vertex source, int max_depth = -1);

// Same, but the search is confined to vertices with allowed[v] set.
std::vector<int> BfsDistancesWithin(const Graph& g, Vertex source,
                                    const std::vector<char>& allowed,
                                    int max_depth = -1);

// Closed ball N^d[v]: vertices at distance <= d from v, sorted.
VertexSet Ball(const Graph& g, Vertex v, int radius);

InducedSubgraph InduceOn(const Graph& g, const VertexSet& keep);
InducedSubgraph DeleteVertices(const Graph& g, const VertexSet& removed);

// uv is an edge iff 1 <= dist(u, v) <= k.
Graph PowerGraph(const Graph& g, int k);

struct ScatterCheck {
  bool scattered = true;
  std::optional<std::pair<Vertex, Vertex>> violation;
};

// True iff all distinct members of x are at distance > 2d.
ScatterCheck IsScattered(const Graph& g, const VertexSet& x, int d);

// Whether the vertices of `set` induce a connected subgraph (empty is false).
bool InducesConnected(const Graph& g, const VertexSet& set);

// Returns a sorted, deduplicated copy.
VertexSet Normalized(VertexSet s);

}  // namespace sparsity

#endif  // SPARSITY_GRAPH_H_
