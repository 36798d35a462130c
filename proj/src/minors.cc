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

#include "sparsity/minors.h"

#include <algorithm>
#include <bitset>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "minor_internal.h"

namespace sparsity {
namespace {

using Mask = std::bitset<kMaxSearchHostVertices>;

std::string Str(int v) { return std::to_string(v); }

Verification Fail(ModelClause clause, std::string detail) {
  return {false, clause, std::move(detail)};
}

void CheckHostIds(const Graph& host, const VertexSet& ids, const char* what) {
  for (Vertex v : ids) {
    if (!host.contains(v)) {
      throw std::out_of_range(std::string(what) + " references vertex " + Str(v) +
                              " outside the host (n=" + Str(host.num_vertices()) + ")");
    }
  }
}

class Budget {
 public:
  explicit Budget(std::int64_t max_nodes) : max_(max_nodes) {}
  bool Spend(std::int64_t k = 1) {
    used_ += k;
    if (used_ > max_) exhausted_ = true;
    return !exhausted_;
  }
  bool exhausted() const { return exhausted_; }
  std::int64_t used() const { return used_; }

 private:
  std::int64_t max_;
  std::int64_t used_ = 0;
  bool exhausted_ = false;
};

void CheckPatternGuard(const Graph& pattern) {
  bool clique = IsCompleteGraph(pattern);
  if (clique ? pattern.num_vertices() > 8 : pattern.num_vertices() > 6) {
    throw std::invalid_argument(
        "pattern too large for the exact search (limit: 6 vertices, or a clique on 8); "
        "use a brute-force oracle for larger patterns");
  }
}

void CheckHostGuard(const Graph& host) {
  if (host.num_vertices() > kMaxSearchHostVertices) {
    throw std::invalid_argument("host has " + Str(host.num_vertices()) +
                                " vertices; exact search supports at most " +
                                Str(kMaxSearchHostVertices));
  }
}

// Pattern vertices in BFS order from a maximum-degree vertex, component by
// component, so that every vertex after the first of its component already
// has a placed neighbor.
std::vector<Vertex> SearchOrder(const Graph& pattern) {
  int n = pattern.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> order;
  while (static_cast<int>(order.size()) < n) {
    Vertex start = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!seen[v] && (start < 0 || pattern.degree(v) > pattern.degree(start))) start = v;
    }
    std::deque<Vertex> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (Vertex w : pattern.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return order;
}

struct Candidate {
  Mask set;
  Mask closed;  // set plus its neighborhood
  Vertex center = 0;
  Vertex min_vertex = 0;
  VertexSet vertices;
};

// Simple paths of length 1..depth leaving `center`, keeping per endpoint only
// those whose vertex sets are inclusion-minimal.
bool MinimalPathsFrom(const Graph& g, Vertex center, int depth, Budget& budget,
                      std::vector<Mask>* out) {
  std::unordered_map<Vertex, std::vector<Mask>> by_end;
  std::vector<Vertex> path{center};
  Mask on_path;
  on_path.set(center);
  bool ok = true;
  auto dfs = [&](auto&& self, Vertex u) -> void {
    if (!ok) return;
    if (static_cast<int>(path.size()) > depth) return;
    for (Vertex w : g.neighbors(u)) {
      if (on_path.test(w)) continue;
      if (!budget.Spend()) {
        ok = false;
        return;
      }
      on_path.set(w);
      path.push_back(w);
      by_end[w].push_back(on_path);
      self(self, w);
      path.pop_back();
      on_path.reset(w);
    }
  };
  dfs(dfs, center);
  if (!ok) return false;
  std::vector<Vertex> ends;
  for (const auto& [end, masks] : by_end) ends.push_back(end);
  std::sort(ends.begin(), ends.end());
  for (Vertex end : ends) {
    auto& masks = by_end[end];
    std::sort(masks.begin(), masks.end(), [](const Mask& a, const Mask& b) {
      return a.count() < b.count();
    });
    std::vector<Mask> kept;
    for (const Mask& m : masks) {
      bool dominated = false;
      for (const Mask& k : kept) {
        if ((k & ~m).none()) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(m);
    }
    out->insert(out->end(), kept.begin(), kept.end());
  }
  return true;
}

Mask ClosedNeighborhood(const Graph& g, const Mask& set, int n) {
  Mask closed = set;
  for (Vertex v = 0; v < n; ++v) {
    if (!set.test(v)) continue;
    for (Vertex w : g.neighbors(v)) closed.set(w);
  }
  return closed;
}

// All candidate branch sets built from at most `max_paths` minimal paths.
bool GenerateCandidates(const Graph& g, int depth, int max_paths, Budget& budget,
                        std::vector<Candidate>* out) {
  int n = g.num_vertices();
  std::unordered_set<Mask> global_seen;
  for (Vertex c = 0; c < n; ++c) {
    std::vector<Mask> paths;
    if (depth > 0 && max_paths > 0) {
      if (!MinimalPathsFrom(g, c, depth, budget, &paths)) return false;
    }
    Mask root;
    root.set(c);
    std::vector<Mask> frontier{root};
    std::vector<Mask> all{root};
    std::unordered_set<Mask> local_seen{root};
    for (int level = 1; level <= max_paths && !frontier.empty(); ++level) {
      std::vector<Mask> next;
      for (const Mask& m : frontier) {
        for (const Mask& p : paths) {
          if (!budget.Spend()) return false;
          Mask merged = m | p;
          if (merged == m) continue;
          if (local_seen.insert(merged).second) {
            next.push_back(merged);
            all.push_back(merged);
          }
        }
      }
      frontier = std::move(next);
    }
    for (const Mask& m : all) {
      if (!global_seen.insert(m).second) continue;
      Candidate cand;
      cand.set = m;
      cand.closed = ClosedNeighborhood(g, m, n);
      cand.center = c;
      for (Vertex v = 0; v < n; ++v) {
        if (m.test(v)) cand.vertices.push_back(v);
      }
      cand.min_vertex = cand.vertices.front();
      out->push_back(std::move(cand));
    }
  }
  std::sort(out->begin(), out->end(), [](const Candidate& a, const Candidate& b) {
    if (a.min_vertex != b.min_vertex) return a.min_vertex < b.min_vertex;
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return true;
}

bool Touches(const Candidate& a, const Candidate& b) { return (a.set & b.closed).any(); }
bool Disjoint(const Candidate& a, const Candidate& b) { return (a.set & b.set).none(); }

// Clique search with branch sets ordered by their minimum vertex.
class CliqueModelSearch {
 public:
  CliqueModelSearch(const std::vector<Candidate>& cands, int m, Budget& budget)
      : cands_(cands), m_(m), budget_(budget) {}

  bool Run() {
    std::vector<int> pool(cands_.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i);
    return Extend(pool);
  }

  const std::vector<int>& chosen() const { return chosen_; }

 private:
  bool Extend(const std::vector<int>& pool) {
    int k = static_cast<int>(chosen_.size());
    if (k == m_) return true;
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if (static_cast<int>(pool.size() - p) < m_ - k) break;
      const Candidate& cand = cands_[pool[p]];
      chosen_.push_back(pool[p]);
      if (k + 1 == m_) return true;
      std::vector<int> next;
      for (std::size_t q = p + 1; q < pool.size(); ++q) {
        if (!budget_.Spend()) return false;
        const Candidate& other = cands_[pool[q]];
        if (Disjoint(cand, other) && Touches(cand, other)) next.push_back(pool[q]);
      }
      if (static_cast<int>(next.size()) >= m_ - k - 1 && Extend(next)) return true;
      if (budget_.exhausted()) return false;
      chosen_.pop_back();
    }
    return false;
  }

  const std::vector<Candidate>& cands_;
  int m_;
  Budget& budget_;
  std::vector<int> chosen_;
};

// Backtracking over arbitrary small patterns.
class PatternModelSearch {
 public:
  PatternModelSearch(const std::vector<Candidate>& cands, const Graph& pattern, Budget& budget)
      : cands_(cands), pattern_(pattern), budget_(budget), order_(SearchOrder(pattern)),
        assigned_(pattern.num_vertices(), -1) {}

  bool Run() { return Place(0, Mask()); }

  const std::vector<int>& assigned() const { return assigned_; }

 private:
  bool Place(std::size_t level, const Mask& used) {
    if (level == order_.size()) return true;
    Vertex u = order_[level];
    for (std::size_t c = 0; c < cands_.size(); ++c) {
      if (!budget_.Spend()) return false;
      const Candidate& cand = cands_[c];
      if ((cand.set & used).any()) continue;
      bool ok = true;
      for (Vertex w : pattern_.neighbors(u)) {
        if (assigned_[w] >= 0 && !Touches(cand, cands_[assigned_[w]])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assigned_[u] = static_cast<int>(c);
      if (Place(level + 1, used | cand.set)) return true;
      assigned_[u] = -1;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const std::vector<Candidate>& cands_;
  const Graph& pattern_;
  Budget& budget_;
  std::vector<Vertex> order_;
  std::vector<int> assigned_;
};

// Exhaustive routing of pattern edges as internally disjoint short paths.
class TopoModelSearch {
 public:
  TopoModelSearch(const Graph& host, const Graph& pattern, int depth, Budget& budget)
      : host_(host), pattern_(pattern), max_len_(2 * depth + 1), budget_(budget),
        clique_(IsCompleteGraph(pattern)), order_(SearchOrder(pattern)),
        branch_(pattern.num_vertices(), -1), used_(host.num_vertices(), 0),
        paths_(pattern.num_edges()) {
    position_.assign(pattern.num_vertices(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = static_cast<int>(i);
    pending_.resize(order_.size());
    for (int e = 0; e < pattern.num_edges(); ++e) {
      const Edge& edge = pattern.edges()[e];
      int later = std::max(position_[edge.u], position_[edge.v]);
      pending_[later].push_back(e);
    }
  }

  bool Run() { return Place(0); }

  TopoMinorModel Model(int depth) const {
    TopoMinorModel model;
    model.pattern = pattern_;
    model.depth = depth;
    model.branch_vertices = branch_;
    model.edge_paths = paths_;
    return model;
  }

 private:
  bool Place(std::size_t level) {
    if (level == order_.size()) return true;
    Vertex u = order_[level];
    Vertex lo = 0;
    if (clique_ && level > 0) lo = branch_[order_[level - 1]] + 1;
    for (Vertex x = lo; x < host_.num_vertices(); ++x) {
      if (!budget_.Spend()) return false;
      if (used_[x] || host_.degree(x) < pattern_.degree(u)) continue;
      branch_[u] = x;
      used_[x] = 1;
      if (Route(level, 0)) return true;
      used_[x] = 0;
      branch_[u] = -1;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  bool Route(std::size_t level, std::size_t k) {
    if (k == pending_[level].size()) return Place(level + 1);
    int e = pending_[level][k];
    const Edge& edge = pattern_.edges()[e];
    Vertex from = branch_[edge.u];
    Vertex to = branch_[edge.v];
    std::vector<int> dist_to = BfsDistances(host_, to, max_len_);
    std::vector<Vertex> path{from};
    return Dfs(level, k, e, to, dist_to, path);
  }

  bool Dfs(std::size_t level, std::size_t k, int e, Vertex to, const std::vector<int>& dist_to,
           std::vector<Vertex>& path) {
    Vertex u = path.back();
    int len = static_cast<int>(path.size()) - 1;
    for (Vertex w : host_.neighbors(u)) {
      if (!budget_.Spend()) return false;
      if (w == to) {
        path.push_back(w);
        paths_[e] = path;
        if (Route(level, k + 1)) return true;
        path.pop_back();
        if (budget_.exhausted()) return false;
        continue;
      }
      if (used_[w]) continue;
      if (dist_to[w] == kUnreachable || len + 1 + dist_to[w] > max_len_) continue;
      used_[w] = 1;
      path.push_back(w);
      bool done = Dfs(level, k, e, to, dist_to, path);
      if (done) return true;
      path.pop_back();
      used_[w] = 0;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  int max_len_;
  Budget& budget_;
  bool clique_;
  std::vector<Vertex> order_;
  std::vector<int> position_;
  std::vector<std::vector<int>> pending_;
  std::vector<Vertex> branch_;
  std::vector<char> used_;
  std::vector<std::vector<Vertex>> paths_;
};

}  // namespace

std::string_view ClauseName(ModelClause clause) {
  switch (clause) {
    case ModelClause::kNone: return "none";
    case ModelClause::kEmptyBranchSet: return "empty_branch_set";
    case ModelClause::kCenterOutsideBranchSet: return "center_outside_branch_set";
    case ModelClause::kDisjointness: return "disjointness";
    case ModelClause::kConnectivity: return "connectivity";
    case ModelClause::kRadius: return "radius";
    case ModelClause::kEdgeRealization: return "edge_realization";
    case ModelClause::kBranchVertexInjectivity: return "branch_vertex_injectivity";
    case ModelClause::kPathEndpoints: return "path_endpoints";
    case ModelClause::kPathNotAPath: return "path_not_a_path";
    case ModelClause::kPathLength: return "path_length";
    case ModelClause::kPathDisjointness: return "path_disjointness";
  }
  return "unknown";
}

std::string_view SearchStatusName(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kAbsent: return "absent";
    case SearchStatus::kBudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

Graph CliquePattern(int m) {
  if (m < 0) throw std::invalid_argument("clique size must be non-negative");
  std::vector<Edge> edges;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) edges.push_back({u, v});
  }
  return Graph(m, std::move(edges));
}

bool IsCompleteGraph(const Graph& g) {
  long long n = g.num_vertices();
  return g.num_edges() == n * (n - 1) / 2;
}

Verification VerifyMinorModel(const Graph& host, const MinorModel& model) {
  int k = model.pattern.num_vertices();
  if (static_cast<int>(model.branch_sets.size()) != k ||
      static_cast<int>(model.centers.size()) != k) {
    throw std::invalid_argument("minor model has " + Str(model.branch_sets.size()) +
                                " branch sets and " + Str(model.centers.size()) +
                                " centers for a pattern on " + Str(k) + " vertices");
  }
  if (model.depth < 0) throw std::invalid_argument("model depth must be non-negative");
  for (int u = 0; u < k; ++u) {
    CheckHostIds(host, model.branch_sets[u], "branch set");
    CheckHostIds(host, {model.centers[u]}, "center");
  }
  std::vector<int> owner(host.num_vertices(), -1);
  for (int u = 0; u < k; ++u) {
    const VertexSet& set = model.branch_sets[u];
    if (set.empty()) return Fail(ModelClause::kEmptyBranchSet, "branch set of " + Str(u) + " is empty");
    for (Vertex v : set) {
      if (owner[v] == u) continue;
      if (owner[v] >= 0) {
        return Fail(ModelClause::kDisjointness, "vertex " + Str(v) + " is in the branch sets of " +
                                                    Str(owner[v]) + " and " + Str(u));
      }
      owner[v] = u;
    }
  }
  for (int u = 0; u < k; ++u) {
    const VertexSet& set = model.branch_sets[u];
    Vertex c = model.centers[u];
    if (owner[c] != u) {
      return Fail(ModelClause::kCenterOutsideBranchSet,
                  "center " + Str(c) + " is not in the branch set of " + Str(u));
    }
    std::vector<char> allowed(host.num_vertices(), 0);
    for (Vertex v : set) allowed[v] = 1;
    std::vector<int> dist = BfsDistancesWithin(host, c, allowed);
    for (Vertex v : set) {
      if (dist[v] == kUnreachable) {
        return Fail(ModelClause::kConnectivity, "branch set of " + Str(u) +
                                                    " is disconnected: " + Str(v) +
                                                    " not reachable from center " + Str(c));
      }
      if (dist[v] > model.depth) {
        return Fail(ModelClause::kRadius, "vertex " + Str(v) + " is at distance " + Str(dist[v]) +
                                              " from center " + Str(c) + " of branch set " +
                                              Str(u) + ", depth is " + Str(model.depth));
      }
    }
  }
  for (const Edge& e : model.pattern.edges()) {
    bool realized = false;
    for (Vertex x : model.branch_sets[e.u]) {
      for (Vertex y : host.neighbors(x)) {
        if (owner[y] == e.v) {
          realized = true;
          break;
        }
      }
      if (realized) break;
    }
    if (!realized) {
      return Fail(ModelClause::kEdgeRealization, "no host edge between the branch sets of " +
                                                     Str(e.u) + " and " + Str(e.v));
    }
  }
  return {};
}

Verification VerifyTopoModel(const Graph& host, const TopoMinorModel& model) {
  int k = model.pattern.num_vertices();
  if (static_cast<int>(model.branch_vertices.size()) != k ||
      static_cast<int>(model.edge_paths.size()) != model.pattern.num_edges()) {
    throw std::invalid_argument("topological model arrays do not match the pattern");
  }
  if (model.depth < 0) throw std::invalid_argument("model depth must be non-negative");
  CheckHostIds(host, model.branch_vertices, "branch vertex");
  for (const auto& path : model.edge_paths) CheckHostIds(host, path, "edge path");

  std::vector<int> branch_of(host.num_vertices(), -1);
  for (int u = 0; u < k; ++u) {
    Vertex x = model.branch_vertices[u];
    if (branch_of[x] >= 0) {
      return Fail(ModelClause::kBranchVertexInjectivity,
                  "pattern vertices " + Str(branch_of[x]) + " and " + Str(u) + " both map to " + Str(x));
    }
    branch_of[x] = u;
  }
  std::vector<int> internal_owner(host.num_vertices(), -1);
  for (int e = 0; e < model.pattern.num_edges(); ++e) {
    const Edge& edge = model.pattern.edges()[e];
    const auto& path = model.edge_paths[e];
    std::string name = Str(edge.u) + "-" + Str(edge.v);
    if (path.size() < 2 || path.front() != model.branch_vertices[edge.u] ||
        path.back() != model.branch_vertices[edge.v]) {
      return Fail(ModelClause::kPathEndpoints,
                  "path for edge " + name + " does not join the images of its endpoints");
    }
    int len = static_cast<int>(path.size()) - 1;
    if (len > 2 * model.depth + 1) {
      return Fail(ModelClause::kPathLength, "path for edge " + name + " has length " + Str(len) +
                                                " > " + Str(2 * model.depth + 1));
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!host.HasEdge(path[i], path[i + 1])) {
        return Fail(ModelClause::kPathNotAPath, "path for edge " + name + " uses non-edge " +
                                                    Str(path[i]) + " " + Str(path[i + 1]));
      }
    }
    VertexSet sorted = Normalized(path);
    if (sorted.size() != path.size()) {
      return Fail(ModelClause::kPathNotAPath, "path for edge " + name + " repeats a vertex");
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      Vertex v = path[i];
      if (branch_of[v] >= 0) {
        return Fail(ModelClause::kPathDisjointness, "path for edge " + name +
                                                        " passes through branch vertex " + Str(v));
      }
      if (internal_owner[v] >= 0) {
        const Edge& other = model.pattern.edges()[internal_owner[v]];
        return Fail(ModelClause::kPathDisjointness,
                    "paths for edges " + Str(other.u) + "-" + Str(other.v) + " and " + name +
                        " share vertex " + Str(v));
      }
      internal_owner[v] = e;
    }
  }
  return {};
}

MinorSearchResult FindShallowMinor(const Graph& host, const Graph& pattern, int depth,
                                   SearchBudget budget) {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  MinorSearchResult result;
  // Contraction never adds vertices or edges.
  if (pattern.num_vertices() > host.num_vertices() || pattern.num_edges() > host.num_edges()) {
    result.status = SearchStatus::kAbsent;
    return result;
  }
  CheckPatternGuard(pattern);
  CheckHostGuard(host);
  if (pattern.num_vertices() == 0) {
    result.status = SearchStatus::kFound;
    result.model = MinorModel{pattern, depth, {}, {}};
    return result;
  }
  Budget tracker(budget.max_nodes);
  std::vector<Candidate> cands;
  int max_paths = pattern.max_degree();
  if (!GenerateCandidates(host, depth, max_paths, tracker, &cands)) {
    result.status = SearchStatus::kBudgetExhausted;
    result.nodes = tracker.used();
    return result;
  }
  std::vector<int> chosen(pattern.num_vertices(), -1);
  bool found = false;
  if (IsCompleteGraph(pattern)) {
    CliqueModelSearch search(cands, pattern.num_vertices(), tracker);
    found = search.Run();
    if (found) chosen = search.chosen();
  } else {
    PatternModelSearch search(cands, pattern, tracker);
    found = search.Run();
    if (found) chosen = search.assigned();
  }
  result.nodes = tracker.used();
  if (!found) {
    result.status = tracker.exhausted() ? SearchStatus::kBudgetExhausted : SearchStatus::kAbsent;
    return result;
  }
  MinorModel model{pattern, depth, {}, {}};
  for (int u = 0; u < pattern.num_vertices(); ++u) {
    model.branch_sets.push_back(cands[chosen[u]].vertices);
    model.centers.push_back(cands[chosen[u]].center);
  }
  if (Verification v = VerifyMinorModel(host, model); !v) {
    throw std::logic_error("shallow minor search produced an invalid model: " + v.detail);
  }
  result.status = SearchStatus::kFound;
  result.model = std::move(model);
  return result;
}

TopoSearchResult FindTopoMinor(const Graph& host, const Graph& pattern, int depth,
                               SearchBudget budget) {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  TopoSearchResult result;
  if (pattern.num_vertices() > host.num_vertices() || pattern.num_edges() > host.num_edges()) {
    result.status = SearchStatus::kAbsent;
    return result;
  }
  CheckPatternGuard(pattern);
  CheckHostGuard(host);
  Budget tracker(budget.max_nodes);
  TopoModelSearch search(host, pattern, depth, tracker);
  bool found = search.Run();
  result.nodes = tracker.used();
  if (!found) {
    result.status = tracker.exhausted() ? SearchStatus::kBudgetExhausted : SearchStatus::kAbsent;
    return result;
  }
  TopoMinorModel model = search.Model(depth);
  if (Verification v = VerifyTopoModel(host, model); !v) {
    throw std::logic_error("topological minor search produced an invalid model: " + v.detail);
  }
  result.status = SearchStatus::kFound;
  result.model = std::move(model);
  return result;
}

namespace internal {

std::vector<Vertex> BranchTreeParents(const Graph& host, const VertexSet& set, Vertex center) {
  std::vector<char> allowed(host.num_vertices(), 0);
  for (Vertex v : set) allowed[v] = 1;
  std::vector<int> dist = BfsDistancesWithin(host, center, allowed);
  std::vector<Vertex> parent(host.num_vertices(), kUnreachable);
  for (Vertex v : set) {
    if (v == center) continue;
    for (Vertex w : host.neighbors(v)) {
      if (allowed[w] && dist[w] == dist[v] - 1) {
        parent[v] = w;
        break;
      }
    }
  }
  return parent;
}

std::vector<Edge> RealizingEdges(const Graph& host, const MinorModel& model) {
  std::vector<int> owner(host.num_vertices(), -1);
  for (int u = 0; u < model.pattern.num_vertices(); ++u) {
    for (Vertex v : model.branch_sets[u]) owner[v] = u;
  }
  std::vector<Edge> out;
  for (const Edge& e : model.pattern.edges()) {
    Edge found{-1, -1};
    for (Vertex x : model.branch_sets[e.u]) {
      for (Vertex y : host.neighbors(x)) {
        if (owner[y] == e.v) {
          found = {x, y};
          break;
        }
      }
      if (found.u >= 0) break;
    }
    out.push_back(found);
  }
  return out;
}

}  // namespace internal

MinorModel NormalizeToTreeModel(const Graph& host, const MinorModel& model) {
  if (Verification v = VerifyMinorModel(host, model); !v) {
    throw std::invalid_argument("cannot normalize an invalid model: " + v.detail);
  }
  int k = model.pattern.num_vertices();
  std::vector<VertexSet> endpoints(k);
  std::vector<Edge> realizing = internal::RealizingEdges(host, model);
  for (int e = 0; e < model.pattern.num_edges(); ++e) {
    endpoints[model.pattern.edges()[e].u].push_back(realizing[e].u);
    endpoints[model.pattern.edges()[e].v].push_back(realizing[e].v);
  }
  MinorModel out = model;
  for (int u = 0; u < k; ++u) {
    Vertex c = model.centers[u];
    std::vector<Vertex> parent = internal::BranchTreeParents(host, model.branch_sets[u], c);
    VertexSet tree{c};
    for (Vertex x : endpoints[u]) {
      for (Vertex y = x; y != c; y = parent[y]) tree.push_back(y);
    }
    out.branch_sets[u] = Normalized(std::move(tree));
  }
  return out;
}

std::vector<Edge> BranchTreeEdges(const Graph& host, const MinorModel& model, Vertex u) {
  if (u < 0 || u >= model.pattern.num_vertices()) throw std::out_of_range("pattern vertex");
  std::vector<Vertex> parent =
      internal::BranchTreeParents(host, model.branch_sets[u], model.centers[u]);
  std::vector<Edge> out;
  for (Vertex v : model.branch_sets[u]) {
    if (parent[v] >= 0) out.push_back({std::min(v, parent[v]), std::max(v, parent[v])});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int TreeModelSizeBound(const MinorModel& model) {
  return 1 + model.pattern.max_degree() * model.depth;
}

bool ExceedsLiteralTreeBound(const MinorModel& model) {
  int literal = 1 + model.pattern.max_degree() * (model.depth - 1);
  for (const auto& set : model.branch_sets) {
    if (static_cast<int>(set.size()) > literal) return true;
  }
  return false;
}

int ComposedDepth(int inner_depth, int outer_depth) {
  return 2 * inner_depth * outer_depth + inner_depth + outer_depth;
}

MinorModel ComposeModels(const Graph& host, const MinorModel& inner, const MinorModel& outer) {
  if (Verification v = VerifyMinorModel(host, inner); !v) {
    throw std::invalid_argument("inner model does not verify: " + v.detail);
  }
  Verification ov;
  try {
    ov = VerifyMinorModel(inner.pattern, outer);
  } catch (const std::out_of_range& err) {
    throw std::invalid_argument(std::string("outer model does not live in the inner pattern: ") +
                                err.what());
  }
  if (!ov) {
    throw std::invalid_argument("outer model is not a model in the inner pattern: " + ov.detail);
  }
  MinorModel out;
  out.pattern = outer.pattern;
  out.depth = ComposedDepth(inner.depth, outer.depth);
  for (int h = 0; h < outer.pattern.num_vertices(); ++h) {
    VertexSet merged;
    for (Vertex x : outer.branch_sets[h]) {
      merged.insert(merged.end(), inner.branch_sets[x].begin(), inner.branch_sets[x].end());
    }
    merged = Normalized(std::move(merged));
    std::vector<char> allowed(host.num_vertices(), 0);
    for (Vertex v : merged) allowed[v] = 1;
    Vertex best = merged.front();
    int best_ecc = -1;
    for (Vertex c : merged) {
      std::vector<int> dist = BfsDistancesWithin(host, c, allowed);
      int ecc = 0;
      for (Vertex v : merged) {
        ecc = dist[v] == kUnreachable ? 1 << 30 : std::max(ecc, dist[v]);
      }
      if (best_ecc < 0 || ecc < best_ecc) {
        best_ecc = ecc;
        best = c;
      }
    }
    out.branch_sets.push_back(std::move(merged));
    out.centers.push_back(best);
  }
  if (Verification v = VerifyMinorModel(host, out); !v) {
    throw std::logic_error("composition produced an invalid model: " + v.detail);
  }
  return out;
}

CliqueProfile ComputeCliqueProfile(const Graph& g, int max_depth, int max_clique,
                                   SearchBudget budget) {
  if (max_depth < 0) throw std::invalid_argument("max depth must be non-negative");
  if (max_clique < 1 || max_clique > 8) {
    throw std::invalid_argument("clique cap must be in [1, 8]");
  }
  CliqueProfile profile;
  int lower = 0;
  for (int d = 0; d <= max_depth; ++d) {
    CliqueProfileCell cell;
    cell.depth = d;
    cell.omega = lower;
    for (int m = lower + 1; m <= max_clique; ++m) {
      MinorSearchResult r = FindShallowMinor(g, CliquePattern(m), d, budget);
      if (r.status == SearchStatus::kFound) {
        cell.omega = m;
      } else {
        cell.truncated = r.status == SearchStatus::kBudgetExhausted;
        break;
      }
    }
    cell.cap_reached = cell.omega == max_clique && max_clique < g.num_vertices();
    lower = cell.omega;
    profile.cells.push_back(cell);
  }
  return profile;
}

}  // namespace sparsity
