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

#include "sparsity/wideness.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "sparsity/families.h"

namespace sparsity {
namespace {

std::string Str(long long v) { return std::to_string(v); }

// Include-first branch and bound over ascending ids; the first optimum met
// is the lexicographically least one.
class MisSearch {
 public:
  MisSearch(std::vector<std::uint32_t> adj, int cap) : adj_(std::move(adj)), cap_(cap) {}

  std::uint32_t Run() {
    std::uint32_t all = adj_.empty() ? 0 : (std::uint32_t{1} << adj_.size()) - 1;
    Rec(all, 0);
    return best_;
  }

 private:
  void Rec(std::uint32_t cand, std::uint32_t cur) {
    int size = std::popcount(cur);
    if (size > best_size_) {
      best_size_ = size;
      best_ = cur;
    }
    if (best_size_ >= cap_) return;
    if (size + std::popcount(cand) <= best_size_) return;
    if (cand == 0) return;
    int v = std::countr_zero(cand);
    std::uint32_t bit = std::uint32_t{1} << v;
    Rec(cand & ~bit & ~adj_[v], cur | bit);
    if (best_size_ >= cap_) return;
    Rec(cand & ~bit, cur);
  }

  std::vector<std::uint32_t> adj_;
  int cap_;
  int best_size_ = -1;
  std::uint32_t best_ = 0;
};

// Candidates in priority order, then by (key ascending, id ascending).
std::vector<Vertex> PriorityOrder(const std::vector<Vertex>& items,
                                  const std::vector<Vertex>& priority,
                                  const std::vector<int>& key) {
  std::vector<Vertex> out;
  std::vector<char> taken(key.size(), 0);
  std::vector<char> member(key.size(), 0);
  for (Vertex v : items) member[v] = 1;
  for (Vertex v : priority) {
    if (v >= 0 && v < static_cast<int>(key.size()) && member[v] && !taken[v]) {
      taken[v] = 1;
      out.push_back(v);
    }
  }
  std::vector<Vertex> rest;
  for (Vertex v : items) {
    if (!taken[v]) rest.push_back(v);
  }
  std::stable_sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) {
    return key[a] != key[b] ? key[a] < key[b] : a < b;
  });
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

VertexSet MapToOriginal(const InducedSubgraph& sub, const VertexSet& local) {
  VertexSet out;
  for (Vertex v : local) out.push_back(sub.to_original[v]);
  return Normalized(std::move(out));
}

VertexSet MapToLocal(const InducedSubgraph& sub, const VertexSet& original) {
  VertexSet out;
  for (Vertex v : original) {
    if (sub.from_original[v] != kUnreachable) out.push_back(sub.from_original[v]);
  }
  return out;
}

// Depth-1 clique model inside a complete bipartite subgraph with sides p, q:
// pair up the smaller side with the larger, plus one extra singleton if the
// larger side has a spare vertex.
MinorModel BicliqueCliqueModel(const std::vector<Vertex>& p, const std::vector<Vertex>& q) {
  const auto& small = p.size() <= q.size() ? p : q;
  const auto& large = p.size() <= q.size() ? q : p;
  int s = static_cast<int>(small.size());
  int k = s + (static_cast<int>(large.size()) > s ? 1 : 0);
  MinorModel model{CliquePattern(k), 1, {}, {}};
  for (int j = 0; j < s; ++j) {
    model.branch_sets.push_back(Normalized({large[j], small[j]}));
    model.centers.push_back(large[j]);
  }
  if (k > s) {
    model.branch_sets.push_back({large[s]});
    model.centers.push_back(large[s]);
  }
  return model;
}

// Lifts a model living in H (whose vertices stand for balls or single host
// vertices) back into the host through composition.
MinorModel LiftThroughH(const Graph& g, const Graph& h, const std::vector<VertexSet>& sets,
                        const std::vector<Vertex>& centers, int ball_radius,
                        const MinorModel& in_h) {
  MinorModel inner{h, ball_radius, sets, centers};
  return ComposeModels(g, inner, in_h);
}

std::vector<int> GreedyClique(const std::vector<std::vector<char>>& adj, int want) {
  int k = static_cast<int>(adj.size());
  for (int s = 0; s < k; ++s) {
    std::vector<int> clique{s};
    for (int v = s + 1; v < k && static_cast<int>(clique.size()) < want; ++v) {
      bool ok = true;
      for (int c : clique) {
        if (!adj[c][v]) {
          ok = false;
          break;
        }
      }
      if (ok) clique.push_back(v);
    }
    if (static_cast<int>(clique.size()) >= want) return clique;
  }
  return {};
}

}  // namespace

VertexSet MaxScatteredExact(const Graph& g, int d, std::optional<int> size_cap) {
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  int n = g.num_vertices();
  if (n > kMaxExactScatterVertices) {
    throw std::invalid_argument("exact scattered-set search supports at most " +
                                Str(kMaxExactScatterVertices) + " vertices (got " + Str(n) +
                                "); use the wideness construction for larger graphs");
  }
  int cap = size_cap.value_or(n);
  if (cap < 0) throw std::invalid_argument("size cap must be non-negative");
  std::vector<std::uint32_t> adj(n, 0);
  if (d > 0) {
    Graph power = PowerGraph(g, 2 * d);
    for (const Edge& e : power.edges()) {
      adj[e.u] |= std::uint32_t{1} << e.v;
      adj[e.v] |= std::uint32_t{1} << e.u;
    }
  }
  std::uint32_t best = MisSearch(std::move(adj), cap).Run();
  VertexSet out;
  for (int v = 0; v < n; ++v) {
    if (best >> v & 1) out.push_back(v);
  }
  return out;
}

DisjointNeighborhoodResult DisjointNeighborhoodSubset(const Graph& h, const VertexSet& side_a,
                                                      int target,
                                                      const std::vector<Vertex>& priority) {
  int n = h.num_vertices();
  std::vector<char> in_a(n, 0);
  for (Vertex v : side_a) {
    if (!h.contains(v)) throw std::out_of_range("side A vertex " + Str(v) + " out of range");
    in_a[v] = 1;
  }
  for (const Edge& e : h.edges()) {
    if (in_a[e.u] == in_a[e.v]) {
      throw std::invalid_argument("sides are not a bipartition: edge " + Str(e.u) + " " +
                                  Str(e.v) + " lies inside one side");
    }
  }
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = h.degree(v);
  std::vector<Vertex> order = PriorityOrder(Normalized(side_a), priority, degree);

  DisjointNeighborhoodResult result;
  std::vector<char> covered(n, 0);
  for (Vertex a : order) {
    if (static_cast<int>(result.subset.size()) >= target) break;
    bool free = true;
    for (Vertex b : h.neighbors(a)) {
      if (covered[b]) {
        free = false;
        break;
      }
    }
    if (!free) continue;
    for (Vertex b : h.neighbors(a)) covered[b] = 1;
    result.subset.push_back(a);
  }
  result.subset = Normalized(std::move(result.subset));
  if (static_cast<int>(result.subset.size()) >= target) return result;

  // Common-neighbor clique: picks u_1, u_2, ...; shared[j] collects the
  // neighbors that u_j contributes to later picks.
  std::vector<Vertex> picks;
  std::vector<VertexSet> shared;
  std::vector<char> used(n, 0);
  for (Vertex u : order) {
    std::vector<Vertex> chosen;
    std::vector<char> tentative = used;
    bool ok = true;
    for (Vertex p : picks) {
      Vertex found = -1;
      for (Vertex b : h.neighbors(p)) {
        if (!tentative[b] && h.HasEdge(b, u)) {
          found = b;
          break;
        }
      }
      if (found < 0) {
        ok = false;
        break;
      }
      tentative[found] = 1;
      chosen.push_back(found);
    }
    if (!ok) continue;
    used = std::move(tentative);
    for (std::size_t j = 0; j < picks.size(); ++j) shared[j].push_back(chosen[j]);
    picks.push_back(u);
    shared.emplace_back();
  }
  MinorModel model{CliquePattern(static_cast<int>(picks.size())), 1, {}, {}};
  for (std::size_t j = 0; j < picks.size(); ++j) {
    VertexSet set = shared[j];
    set.push_back(picks[j]);
    model.branch_sets.push_back(Normalized(std::move(set)));
    model.centers.push_back(picks[j]);
  }
  if (Verification v = VerifyMinorModel(h, model); !v) {
    throw std::logic_error("common-neighbor clique model does not verify: " + v.detail);
  }
  if (picks.size() > result.subset.size()) {
    result.larger = DisjointNeighborhoodResult::Larger::kCliqueMinor;
  }
  result.clique_model = std::move(model);
  return result;
}

std::string_view WitnessSourceName(WitnessSource source) {
  switch (source) {
    case WitnessSource::kBallClique: return "ball_clique";
    case WitnessSource::kBiclique: return "biclique";
    case WitnessSource::kCommonNeighbors: return "common_neighbors";
  }
  return "unknown";
}

WitnessSource ParseWitnessSource(std::string_view name) {
  for (auto s : {WitnessSource::kBallClique, WitnessSource::kBiclique,
                 WitnessSource::kCommonNeighbors}) {
    if (WitnessSourceName(s) == name) return s;
  }
  throw std::invalid_argument("unknown witness source '" + std::string(name) + "'");
}

std::string_view UqwOutcomeName(UqwOutcome outcome) {
  switch (outcome) {
    case UqwOutcome::kCertificate: return "certificate";
    case UqwOutcome::kDensityWitness: return "witness";
    case UqwOutcome::kTargetUnmet: return "target_unmet";
  }
  return "unknown";
}

Verification ValidateCertificate(const Graph& g, const WidenessCertificate& cert) {
  for (const VertexSet* set : {&cert.S, &cert.X, &cert.W}) {
    for (Vertex v : *set) {
      if (!g.contains(v)) throw std::out_of_range("certificate vertex " + Str(v) + " out of range");
    }
  }
  VertexSet w = Normalized(cert.W);
  VertexSet s = Normalized(cert.S);
  for (Vertex x : cert.X) {
    if (!std::binary_search(w.begin(), w.end(), x)) {
      return {false, ModelClause::kNone, "X vertex " + Str(x) + " is not in W"};
    }
    if (std::binary_search(s.begin(), s.end(), x)) {
      return {false, ModelClause::kNone, "X vertex " + Str(x) + " is in S"};
    }
  }
  if (Normalized(cert.X).size() != cert.X.size()) {
    return {false, ModelClause::kNone, "X repeats a vertex"};
  }
  InducedSubgraph rest = DeleteVertices(g, s);
  ScatterCheck check = IsScattered(rest.graph, MapToLocal(rest, cert.X), cert.d);
  if (!check.scattered) {
    Vertex a = rest.to_original[check.violation->first];
    Vertex b = rest.to_original[check.violation->second];
    return {false, ModelClause::kNone,
            "vertices " + Str(a) + " and " + Str(b) + " are within distance " +
                Str(2 * cert.d) + " after deleting S"};
  }
  return {};
}

UqwResult UqwConstruct(const Graph& g, const VertexSet& w, int d, const UqwParams& params) {
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  if (params.target < 2) throw std::invalid_argument("target must be at least 2");
  int h_threshold = params.effective_h();
  int kappa = params.effective_kappa();
  if (h_threshold < 2) throw std::invalid_argument("h must be at least 2");
  if (kappa < 1) throw std::invalid_argument("kappa_cap must be at least 1");
  for (Vertex v : w) {
    if (!g.contains(v)) throw std::invalid_argument("W vertex " + Str(v) + " out of range");
  }

  UqwResult result;
  WidenessCertificate cert;
  cert.d = d;
  cert.W = Normalized(w);
  cert.X = cert.W;
  std::optional<DensityWitness> best_witness;

  auto emit_witness = [&](MinorModel model, WitnessSource source, int round) {
    if (Verification v = VerifyMinorModel(g, model); !v) {
      throw std::logic_error("density witness does not verify: " + v.detail);
    }
    result.outcome = UqwOutcome::kDensityWitness;
    result.witness = DensityWitness{std::move(model), source, round};
    return result;
  };

  for (int i = 0; i < d; ++i) {
    InducedSubgraph gp = DeleteVertices(g, cert.S);
    const Graph& G = gp.graph;
    int n = G.num_vertices();
    VertexSet xs = MapToLocal(gp, cert.X);
    int k = static_cast<int>(xs.size());

    // (1) Radius-i balls around the current scattered set.
    std::vector<VertexSet> balls(k);
    std::vector<int> owner(n, -1);
    for (int j = 0; j < k; ++j) {
      balls[j] = Ball(G, xs[j], i);
      for (Vertex v : balls[j]) {
        if (owner[v] >= 0) {
          throw std::logic_error("round " + Str(i) + ": balls around " +
                                 Str(gp.to_original[xs[owner[v]]]) + " and " +
                                 Str(gp.to_original[xs[j]]) + " overlap");
        }
        owner[v] = j;
      }
    }
    std::vector<std::vector<char>> touch(k, std::vector<char>(k, 0));
    std::vector<int> touch_degree(k, 0);
    for (int j = 0; j < k; ++j) {
      for (Vertex v : balls[j]) {
        for (Vertex x : G.neighbors(v)) {
          int o = owner[x];
          if (o >= 0 && o != j && !touch[j][o]) {
            touch[j][o] = touch[o][j] = 1;
            ++touch_degree[j];
            ++touch_degree[o];
          }
        }
      }
    }
    auto original_ball = [&](int j) { return MapToOriginal(gp, balls[j]); };

    // (2) Many pairwise touching balls already form a clique minor.
    std::vector<int> clique = GreedyClique(touch, kappa + 1);
    if (!clique.empty()) {
      MinorModel model{CliquePattern(static_cast<int>(clique.size())), i, {}, {}};
      for (int j : clique) {
        model.branch_sets.push_back(original_ball(j));
        model.centers.push_back(gp.to_original[xs[j]]);
      }
      return emit_witness(std::move(model), WitnessSource::kBallClique, i);
    }

    // Seed order: a greedy packing at distance > 2(i+1), which is what the
    // round is trying to reach. Fewest conflicts first, then fewest contacts.
    std::vector<std::vector<int>> conflicts(k);
    for (int j = 0; j < k; ++j) {
      std::vector<int> dist = BfsDistances(G, xs[j], 2 * (i + 1));
      for (int o = 0; o < k; ++o) {
        if (o != j && dist[xs[o]] != kUnreachable) conflicts[j].push_back(o);
      }
    }
    std::vector<int> seed;
    {
      std::vector<int> idx(k);
      for (int j = 0; j < k; ++j) idx[j] = j;
      std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (conflicts[a].size() != conflicts[b].size()) {
          return conflicts[a].size() < conflicts[b].size();
        }
        return touch_degree[a] < touch_degree[b];
      });
      std::vector<char> blocked(k, 0);
      for (int j : idx) {
        if (blocked[j]) continue;
        seed.push_back(j);
        for (int o : conflicts[j]) blocked[o] = 1;
      }
    }

    // X': pairwise non-touching balls, seeds first, then fewest contacts.
    std::vector<int> all(k);
    for (int j = 0; j < k; ++j) all[j] = j;
    std::vector<int> xprime;
    {
      std::vector<char> blocked(k, 0);
      for (int j : PriorityOrder(all, seed, touch_degree)) {
        if (blocked[j]) continue;
        xprime.push_back(j);
        for (int o = 0; o < k; ++o) {
          if (touch[j][o]) blocked[o] = 1;
        }
      }
      std::sort(xprime.begin(), xprime.end());
    }

    // (3) Bipartite H: A = X' (as balls), B = the rest of G' outside those balls.
    int a_count = static_cast<int>(xprime.size());
    std::vector<int> a_of_ball(k, -1);
    for (int a = 0; a < a_count; ++a) a_of_ball[xprime[a]] = a;
    std::vector<Vertex> b_vertices;
    for (Vertex v = 0; v < n; ++v) {
      if (owner[v] < 0 || a_of_ball[owner[v]] < 0) b_vertices.push_back(v);
    }
    int b_count = static_cast<int>(b_vertices.size());
    std::vector<Edge> h_edges;
    for (int b = 0; b < b_count; ++b) {
      std::vector<char> seen(a_count, 0);
      for (Vertex x : G.neighbors(b_vertices[b])) {
        if (owner[x] < 0) continue;
        int a = a_of_ball[owner[x]];
        if (a >= 0 && !seen[a]) {
          seen[a] = 1;
          h_edges.push_back({a, a_count + b});
        }
      }
    }
    Graph H(a_count + b_count, std::move(h_edges));
    std::vector<VertexSet> h_sets;
    std::vector<Vertex> h_centers;
    for (int a = 0; a < a_count; ++a) {
      h_sets.push_back(original_ball(xprime[a]));
      h_centers.push_back(gp.to_original[xs[xprime[a]]]);
    }
    for (Vertex b : b_vertices) {
      h_sets.push_back({gp.to_original[b]});
      h_centers.push_back(gp.to_original[b]);
    }

    // (4) R-loop: while the disjoint-neighborhood pass (5) falls short,
    // move a B-vertex with >= h neighbors in Y into R and shrink Y to them.
    std::vector<char> in_y(a_count, 1);
    std::vector<char> in_r(b_count, 0);
    std::vector<int> r_list;
    InducedSubgraph sub;
    DisjointNeighborhoodResult dn;
    auto disjoint_pass = [&] {
      VertexSet keep;
      for (int a = 0; a < a_count; ++a) {
        if (in_y[a]) keep.push_back(a);
      }
      for (int b = 0; b < b_count; ++b) {
        if (!in_r[b]) keep.push_back(a_count + b);
      }
      sub = InduceOn(H, keep);
      VertexSet y_local;
      for (int a = 0; a < a_count; ++a) {
        if (in_y[a]) y_local.push_back(sub.from_original[a]);
      }
      std::vector<Vertex> priority;
      for (int j : seed) {
        int a = a_of_ball[j];
        if (a >= 0 && in_y[a]) priority.push_back(sub.from_original[a]);
      }
      // Keep every vertex the greedy pass can take; later rounds only shrink X.
      int want = std::max(params.target, static_cast<int>(y_local.size()));
      dn = DisjointNeighborhoodSubset(sub.graph, y_local, want, priority);
    };
    while (true) {
      disjoint_pass();
      if (static_cast<int>(dn.subset.size()) >= params.target) break;
      int best_b = -1;
      int best_count = -1;
      for (int b = 0; b < b_count; ++b) {
        if (in_r[b]) continue;
        int count = 0;
        for (Vertex a : H.neighbors(a_count + b)) count += in_y[a];
        if (count >= h_threshold && count > best_count) {
          best_b = b;
          best_count = count;
        }
      }
      if (best_b < 0) break;
      in_r[best_b] = 1;
      r_list.push_back(best_b);
      std::vector<char> next(a_count, 0);
      for (Vertex a : H.neighbors(a_count + best_b)) next[a] = in_y[a];
      in_y = std::move(next);
      if (static_cast<int>(r_list.size()) > kappa) {
        std::vector<Vertex> p;
        std::vector<Vertex> q;
        for (int b : r_list) p.push_back(a_count + b);
        for (int a = 0; a < a_count; ++a) {
          if (in_y[a]) q.push_back(a);
        }
        MinorModel in_h = BicliqueCliqueModel(p, q);
        return emit_witness(LiftThroughH(g, H, h_sets, h_centers, i, in_h),
                            WitnessSource::kBiclique, i);
      }
    }

    // (5) Disjoint neighborhoods among Y against B \ R (computed above); a
    // common-neighbor clique explains a shortfall.
    if (static_cast<int>(dn.subset.size()) < params.target &&
        dn.larger == DisjointNeighborhoodResult::Larger::kCliqueMinor && dn.clique_model &&
        dn.clique_model->pattern.num_vertices() >= 2) {
      std::vector<VertexSet> sets;
      std::vector<Vertex> centers;
      for (Vertex v : sub.to_original) {
        sets.push_back(h_sets[v]);
        centers.push_back(h_centers[v]);
      }
      MinorModel lifted = LiftThroughH(g, sub.graph, sets, centers, i, *dn.clique_model);
      if (!best_witness ||
          lifted.pattern.num_vertices() > best_witness->model.pattern.num_vertices()) {
        best_witness = DensityWitness{std::move(lifted), WitnessSource::kCommonNeighbors, i};
      }
    }

    // (6) Next round.
    VertexSet r_original;
    for (int b : r_list) r_original.push_back(gp.to_original[b_vertices[b]]);
    r_original = Normalized(std::move(r_original));
    VertexSet z;
    for (Vertex v : dn.subset) z.push_back(h_centers[sub.to_original[v]]);
    cert.S = Normalized([&] {
      VertexSet s = cert.S;
      s.insert(s.end(), r_original.begin(), r_original.end());
      return s;
    }());
    cert.X = Normalized(std::move(z));
    cert.rounds.push_back({r_original, static_cast<int>(cert.X.size())});

    WidenessCertificate partial = cert;
    partial.d = i + 1;
    if (Verification v = ValidateCertificate(g, partial); !v) {
      throw std::logic_error("round " + Str(i) + " broke the scattering invariant: " + v.detail);
    }
  }

  if (Verification v = ValidateCertificate(g, cert); !v) {
    throw std::logic_error("final certificate does not validate: " + v.detail);
  }
  if (static_cast<int>(cert.X.size()) >= params.target) {
    result.outcome = UqwOutcome::kCertificate;
    result.certificate = std::move(cert);
    return result;
  }
  if (best_witness) {
    if (Verification v = VerifyMinorModel(g, best_witness->model); !v) {
      throw std::logic_error("density witness does not verify: " + v.detail);
    }
    result.outcome = UqwOutcome::kDensityWitness;
    result.witness = std::move(best_witness);
    result.certificate = std::move(cert);
    return result;
  }
  result.outcome = UqwOutcome::kTargetUnmet;
  result.certificate = std::move(cert);
  return result;
}

QwAnalysis QwCounterexample(int m, int t, int d, int s_cap) {
  if (m < 2) throw std::invalid_argument("need at least 2 hubs");
  if (m > 16) throw std::invalid_argument("analysis supports at most 16 hubs");
  if (d < 0 || s_cap < 0) throw std::invalid_argument("d and s_cap must be non-negative");
  QwAnalysis out;
  out.graph = Generate(FamilySpec::SubdividedClique(m, t));
  out.applicable = t <= 2 * d;
  out.s_cap = s_cap;
  const Graph& g = out.graph;
  int n = g.num_vertices();

  auto examine = [&](const VertexSet& s) {
    InducedSubgraph rest = DeleteVertices(g, s);
    const Graph& r = rest.graph;
    std::vector<Vertex> hubs;
    for (Vertex hub = 0; hub < m; ++hub) {
      if (rest.from_original[hub] != kUnreachable) hubs.push_back(rest.from_original[hub]);
    }
    std::vector<int> comp(r.num_vertices(), -1);
    int comps = 0;
    int max_diam = 0;
    for (Vertex hub : hubs) {
      if (comp[hub] >= 0) continue;
      std::vector<int> dist = BfsDistances(r, hub);
      VertexSet members;
      for (Vertex v = 0; v < r.num_vertices(); ++v) {
        if (dist[v] != kUnreachable) {
          comp[v] = comps;
          members.push_back(v);
        }
      }
      ++comps;
      for (Vertex v : members) {
        std::vector<int> dv = BfsDistances(r, v);
        for (Vertex u : members) max_diam = std::max(max_diam, dv[u]);
      }
    }
    int hub_count = static_cast<int>(hubs.size());
    std::vector<std::uint32_t> adj(hub_count, 0);
    for (int a = 0; a < hub_count; ++a) {
      std::vector<int> dist = BfsDistances(r, hubs[a], 2 * d);
      for (int b = 0; b < hub_count; ++b) {
        if (a != b && dist[hubs[b]] != kUnreachable) adj[a] |= std::uint32_t{1} << b;
      }
    }
    int scattered = std::popcount(MisSearch(std::move(adj), hub_count).Run());
    out.max_components = std::max(out.max_components, comps);
    out.max_component_diameter = std::max(out.max_component_diameter, max_diam);
    out.max_scattered_hubs = std::max(out.max_scattered_hubs, scattered);
    if (comps > 1) out.hubs_always_connected = false;
    ++out.sets_examined;
    return scattered;
  };

  out.baseline_scattered_hubs = examine({});
  if (m <= 6) {
    out.exhaustive = true;
    VertexSet s;
    auto rec = [&](auto&& self, Vertex from) -> void {
      if (!s.empty()) examine(s);
      if (static_cast<int>(s.size()) == s_cap) return;
      for (Vertex v = from; v < n; ++v) {
        s.push_back(v);
        self(self, v + 1);
        s.pop_back();
      }
    };
    rec(rec, 0);
  } else {
    std::mt19937_64 rng(0x5eedULL);
    for (int sample = 0; sample < 200; ++sample) {
      int size = static_cast<int>(rng() % static_cast<std::uint64_t>(s_cap + 1));
      VertexSet s;
      for (int j = 0; j < size; ++j) s.push_back(static_cast<Vertex>(rng() % n));
      examine(Normalized(std::move(s)));
    }
  }
  return out;
}

}  // namespace sparsity
