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

#include "sparsity/graph.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace sparsity {

Graph::Graph(int num_vertices, std::vector<Edge> edges) {
  if (num_vertices < 0) {
    throw std::invalid_argument("vertex count must be non-negative");
  }
  for (Edge& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v) + " has an endpoint outside [0, " +
                                  std::to_string(num_vertices) + ")");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " +
                                std::to_string(dup->v));
  }
  adjacency_.assign(num_vertices, {});
  for (const Edge& e : edges) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  edges_ = std::move(edges);
}

Graph Graph::Edgeless(int num_vertices) { return Graph(num_vertices, {}); }

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::HasEdge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<int> BfsDistancesWithin(const Graph& g, Vertex source,
                                    const std::vector<char>& allowed, int max_depth) {
  if (!g.contains(source)) {
    throw std::out_of_range("vertex " + std::to_string(source) + " out of range");
  }
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  if (!allowed.empty() && !allowed[source]) return dist;
  dist[source] = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (max_depth >= 0 && dist[u] >= max_depth) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kUnreachable) continue;
      if (!allowed.empty() && !allowed[w]) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<int> BfsDistances(const Graph& g, Vertex source, int max_depth) {
  return BfsDistancesWithin(g, source, {}, max_depth);
}

VertexSet Ball(const Graph& g, Vertex v, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  std::vector<int> dist = BfsDistances(g, v, radius);
  VertexSet ball;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (dist[u] != kUnreachable) ball.push_back(u);
  }
  return ball;
}

InducedSubgraph InduceOn(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.from_original.assign(g.num_vertices(), kUnreachable);
  for (Vertex v : keep) {
    if (!g.contains(v)) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    if (out.from_original[v] != kUnreachable) continue;
    out.from_original[v] = static_cast<Vertex>(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = out.from_original[e.u];
    Vertex b = out.from_original[e.v];
    if (a != kUnreachable && b != kUnreachable) edges.push_back({a, b});
  }
  out.graph = Graph(static_cast<int>(out.to_original.size()), std::move(edges));
  return out;
}

InducedSubgraph DeleteVertices(const Graph& g, const VertexSet& removed) {
  std::vector<char> gone(g.num_vertices(), 0);
  for (Vertex v : removed) {
    if (!g.contains(v)) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    gone[v] = 1;
  }
  VertexSet keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return InduceOn(g, keep);
}

Graph PowerGraph(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("power graph distance bound must be >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    std::vector<int> dist = BfsDistances(g, u, k);
    for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
      if (dist[v] != kUnreachable) edges.push_back({u, v});
    }
  }
  return Graph(g.num_vertices(), std::move(edges));
}

ScatterCheck IsScattered(const Graph& g, const VertexSet& x, int d) {
  if (d < 0) throw std::invalid_argument("radius must be non-negative");
  std::vector<char> member(g.num_vertices(), 0);
  for (Vertex v : x) {
    if (!g.contains(v)) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    if (member[v]) return {false, std::make_pair(v, v)};
    member[v] = 1;
  }
  VertexSet sorted = Normalized(x);
  for (Vertex u : sorted) {
    std::vector<int> dist = BfsDistances(g, u, 2 * d);
    for (Vertex v : sorted) {
      if (v > u && dist[v] != kUnreachable) return {false, std::make_pair(u, v)};
    }
  }
  return {};
}

bool InducesConnected(const Graph& g, const VertexSet& set) {
  if (set.empty()) return false;
  std::vector<char> allowed(g.num_vertices(), 0);
  for (Vertex v : set) allowed.at(v) = 1;
  std::vector<int> dist = BfsDistancesWithin(g, set.front(), allowed);
  return std::all_of(set.begin(), set.end(),
                     [&](Vertex v) { return dist[v] != kUnreachable; });
}

VertexSet Normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace sparsity
