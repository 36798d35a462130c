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

// Clique minor -> topological clique minor.
//
// Every branch tree is rooted at its center and extended by one external leaf
// per incident pattern edge (hung below the tree endpoint of the realizing
// edge). In each tree we pick a node sigma with many children; each child
// subtree is a "slot" labelled by the smallest pattern vertex whose leaf it
// contains. A slot labelled x at sigma(u) gives a tree path from sigma(u) to
// an edge into B(x). Pattern edges between chosen sigmas are routed through
// matching slots, possibly via one or two otherwise unused trees.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minor_internal.h"
#include "sparsity/minors.h"

namespace sparsity {
namespace {

struct Slot {
  Vertex rep = -1;
  bool used = false;
};

struct Tree {
  bool usable = false;
  Vertex sigma = -1;
  std::vector<Slot> slots;
};

class Topologizer {
 public:
  Topologizer(const Graph& host, const MinorModel& model, int threshold)
      : host_(host), model_(model), k_(model.pattern.num_vertices()) {
    endpoint_.assign(k_, std::vector<Vertex>(k_, -1));
    std::vector<Edge> realizing = internal::RealizingEdges(host, model);
    for (int e = 0; e < model.pattern.num_edges(); ++e) {
      const Edge& pe = model.pattern.edges()[e];
      endpoint_[pe.u][pe.v] = realizing[e].u;
      endpoint_[pe.v][pe.u] = realizing[e].v;
    }
    for (int u = 0; u < k_; ++u) {
      parent_.push_back(
          internal::BranchTreeParents(host, model.branch_sets[u], model.centers[u]));
      trees_.push_back(BuildTree(u, threshold));
    }
    consumed_.assign(k_, 0);
  }

  std::optional<TopoMinorModel> Run() {
    for (int b = 0; b < k_; ++b) {
      if (!trees_[b].usable || consumed_[b]) continue;
      TryPlace(b);
    }
    if (placed_.size() < 2) return std::nullopt;
    TopoMinorModel out;
    int m = static_cast<int>(placed_.size());
    out.pattern = CliquePattern(m);
    out.depth = 3 * model_.depth + 1;
    for (int b : placed_) out.branch_vertices.push_back(trees_[b].sigma);
    for (const Edge& e : out.pattern.edges()) {
      // Paths were stored from the later vertex to the earlier one.
      std::vector<Vertex> path = paths_[{e.v, e.u}];
      std::reverse(path.begin(), path.end());
      out.edge_paths.push_back(std::move(path));
    }
    if (Verification v = VerifyTopoModel(host_, out); !v) {
      throw std::logic_error("topologization produced an invalid model: " + v.detail);
    }
    return out;
  }

 private:
  bool IsAncestorOrSelf(int u, Vertex anc, Vertex v) const {
    for (; v >= 0; v = parent_[u][v]) {
      if (v == anc) return true;
    }
    return false;
  }

  Tree BuildTree(int u, int threshold) const {
    Tree tree;
    const VertexSet& set = model_.branch_sets[u];
    int best = -1;
    for (Vertex s : set) {
      int children = 0;
      for (Vertex t : set) children += parent_[u][t] == s;
      for (int v = 0; v < k_; ++v) children += endpoint_[u][v] == s;
      if (children > best) {
        best = children;
        tree.sigma = s;
      }
    }
    if (best < threshold) return tree;
    tree.usable = true;
    Vertex sigma = tree.sigma;
    for (Vertex t : set) {
      if (parent_[u][t] != sigma) continue;
      for (int v = 0; v < k_; ++v) {
        if (endpoint_[u][v] >= 0 && IsAncestorOrSelf(u, t, endpoint_[u][v])) {
          tree.slots.push_back({v, false});
          break;
        }
      }
    }
    for (int v = 0; v < k_; ++v) {
      if (endpoint_[u][v] == sigma) tree.slots.push_back({v, false});
    }
    return tree;
  }

  // Tree path from sigma(u) down to the endpoint of the edge towards x.
  std::vector<Vertex> DownPath(int u, int x) const {
    std::vector<Vertex> up;
    for (Vertex v = endpoint_[u][x]; v != trees_[u].sigma; v = parent_[u][v]) up.push_back(v);
    up.push_back(trees_[u].sigma);
    std::reverse(up.begin(), up.end());
    return up;
  }

  // Path between two vertices of the branch tree of u.
  std::vector<Vertex> TreePath(int u, Vertex a, Vertex b) const {
    std::vector<Vertex> from_a;
    std::vector<Vertex> from_b;
    for (Vertex v = a; v >= 0; v = parent_[u][v]) from_a.push_back(v);
    for (Vertex v = b; v >= 0; v = parent_[u][v]) from_b.push_back(v);
    while (from_a.size() > 1 && from_b.size() > 1 &&
           from_a[from_a.size() - 2] == from_b[from_b.size() - 2]) {
      from_a.pop_back();
      from_b.pop_back();
    }
    // Both now end at the lowest common ancestor.
    from_b.pop_back();
    from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
    return from_a;
  }

  static int FreeSlot(const std::vector<Tree>& trees, int u, int rep) {
    for (std::size_t i = 0; i < trees[u].slots.size(); ++i) {
      if (!trees[u].slots[i].used && trees[u].slots[i].rep == rep) return static_cast<int>(i);
    }
    return -1;
  }

  static void Append(std::vector<Vertex>& path, const std::vector<Vertex>& more) {
    path.insert(path.end(), more.begin(), more.end());
  }

  std::vector<Vertex> Reversed(std::vector<Vertex> v) const {
    std::reverse(v.begin(), v.end());
    return v;
  }

  // Routes b -> a with the cheapest available option, updating the scratch
  // copies. Returns an empty path on failure.
  std::vector<Vertex> Route(int b, int a, std::vector<Tree>& trees,
                            std::vector<char>& consumed) const {
    int sa = FreeSlot(trees, a, b);
    int sb = FreeSlot(trees, b, a);
    if (sa >= 0 && sb >= 0) {
      trees[a].slots[sa].used = trees[b].slots[sb].used = true;
      std::vector<Vertex> path = DownPath(b, a);
      Append(path, Reversed(DownPath(a, b)));
      return path;
    }
    auto free_tree = [&](int x) { return x != a && x != b && !consumed[x]; };
    for (int x = 0; x < k_; ++x) {
      if (!free_tree(x)) continue;
      int xa = FreeSlot(trees, a, x);
      int xb = FreeSlot(trees, b, x);
      if (xa < 0 || xb < 0) continue;
      trees[a].slots[xa].used = trees[b].slots[xb].used = true;
      consumed[x] = 1;
      std::vector<Vertex> path = DownPath(b, x);
      Append(path, TreePath(x, endpoint_[x][b], endpoint_[x][a]));
      Append(path, Reversed(DownPath(a, x)));
      return path;
    }
    for (int y = 0; y < k_; ++y) {
      if (!free_tree(y)) continue;
      int yb = FreeSlot(trees, b, y);
      if (yb < 0) continue;
      for (int x = 0; x < k_; ++x) {
        if (x == y || !free_tree(x)) continue;
        int xa = FreeSlot(trees, a, x);
        if (xa < 0) continue;
        trees[a].slots[xa].used = trees[b].slots[yb].used = true;
        consumed[x] = consumed[y] = 1;
        std::vector<Vertex> path = DownPath(b, y);
        Append(path, TreePath(y, endpoint_[y][b], endpoint_[y][x]));
        Append(path, TreePath(x, endpoint_[x][y], endpoint_[x][a]));
        Append(path, Reversed(DownPath(a, x)));
        return path;
      }
    }
    return {};
  }

  void TryPlace(int b) {
    std::vector<Tree> trees = trees_;
    std::vector<char> consumed = consumed_;
    consumed[b] = 1;
    std::vector<std::vector<Vertex>> routed;
    for (int a : placed_) {
      std::vector<Vertex> path = Route(b, a, trees, consumed);
      if (path.empty()) return;
      routed.push_back(std::move(path));
    }
    trees_ = std::move(trees);
    consumed_ = std::move(consumed);
    int index = static_cast<int>(placed_.size());
    for (int i = 0; i < index; ++i) paths_[{index, i}] = std::move(routed[i]);
    placed_.push_back(b);
  }

  const Graph& host_;
  const MinorModel& model_;
  int k_;
  std::vector<std::vector<Vertex>> endpoint_;  // [u][v]: vertex of B(u) on the edge to B(v)
  std::vector<std::vector<Vertex>> parent_;
  std::vector<Tree> trees_;
  std::vector<char> consumed_;
  std::vector<int> placed_;
  std::map<std::pair<int, int>, std::vector<Vertex>> paths_;
};

}  // namespace

std::optional<TopoMinorModel> TopologizeCliqueMinor(const Graph& host, const MinorModel& model,
                                                    int threshold) {
  if (threshold < 2) throw std::invalid_argument("threshold must be at least 2");
  if (!IsCompleteGraph(model.pattern)) {
    throw std::invalid_argument("topologization needs a clique pattern");
  }
  MinorModel tree_model = NormalizeToTreeModel(host, model);
  return Topologizer(host, tree_model, threshold).Run();
}

}  // namespace sparsity
