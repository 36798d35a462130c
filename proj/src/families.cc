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

#include "sparsity/families.h"

#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace sparsity {
namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 8> kNames = {{
    {FamilyKind::kClique, "clique"},
    {FamilyKind::kCycle, "cycle"},
    {FamilyKind::kPath, "path"},
    {FamilyKind::kStar, "star"},
    {FamilyKind::kGrid, "grid"},
    {FamilyKind::kSubdividedClique, "subdivided_clique"},
    {FamilyKind::kErdosRenyi, "erdos_renyi"},
    {FamilyKind::kEdgeless, "edgeless"},
}};

// Interactive and sweep use never needs more.
constexpr int kMaxGeneratedVertices = 100000;

[[noreturn]] void Reject(const FamilySpec& spec, const std::string& why) {
  throw std::invalid_argument(std::string(FamilyKindName(spec.kind)) + ": " + why);
}

void ExpectArity(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
  if (spec.params.size() < lo || spec.params.size() > hi) {
    Reject(spec, "expected " + std::to_string(lo) +
                     (lo == hi ? "" : ".." + std::to_string(hi)) + " parameters, got " +
                     std::to_string(spec.params.size()));
  }
}

void ExpectVertexCount(const FamilySpec& spec, long long n) {
  if (n > kMaxGeneratedVertices) {
    Reject(spec, "would have " + std::to_string(n) + " vertices, limit is " +
                     std::to_string(kMaxGeneratedVertices));
  }
}

Graph MakeClique(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

}  // namespace

std::string_view FamilyKindName(FamilyKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

FamilyKind ParseFamilyKind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) +
                              "' (expected clique, cycle, path, star, grid, "
                              "subdivided_clique, erdos_renyi or edgeless)");
}

Graph Generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::kClique: {
      ExpectArity(spec, 1, 1);
      if (p[0] < 1) Reject(spec, "needs n >= 1");
      ExpectVertexCount(spec, p[0]);
      if (static_cast<long long>(p[0]) * p[0] > 4LL * kMaxGeneratedVertices) {
        Reject(spec, "too many edges");
      }
      return MakeClique(p[0]);
    }
    case FamilyKind::kCycle: {
      ExpectArity(spec, 1, 1);
      if (p[0] < 3) Reject(spec, "needs n >= 3, got " + std::to_string(p[0]));
      ExpectVertexCount(spec, p[0]);
      std::vector<Edge> edges;
      for (int i = 0; i < p[0]; ++i) edges.push_back({i, (i + 1) % p[0]});
      return Graph(p[0], std::move(edges));
    }
    case FamilyKind::kPath: {
      ExpectArity(spec, 1, 1);
      if (p[0] < 1) Reject(spec, "needs n >= 1");
      ExpectVertexCount(spec, p[0]);
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < p[0]; ++i) edges.push_back({i, i + 1});
      return Graph(p[0], std::move(edges));
    }
    case FamilyKind::kStar: {
      ExpectArity(spec, 1, 1);
      if (p[0] < 0) Reject(spec, "needs leaves >= 0");
      ExpectVertexCount(spec, p[0] + 1LL);
      std::vector<Edge> edges;
      for (int i = 1; i <= p[0]; ++i) edges.push_back({0, i});
      return Graph(p[0] + 1, std::move(edges));
    }
    case FamilyKind::kGrid: {
      ExpectArity(spec, 1, 2);
      int rows = p[0];
      int cols = p.size() == 2 ? p[1] : p[0];
      if (rows < 1 || cols < 1) Reject(spec, "needs positive dimensions");
      ExpectVertexCount(spec, static_cast<long long>(rows) * cols);
      std::vector<Edge> edges;
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          int v = r * cols + c;
          if (c + 1 < cols) edges.push_back({v, v + 1});
          if (r + 1 < rows) edges.push_back({v, v + cols});
        }
      }
      return Graph(rows * cols, std::move(edges));
    }
    case FamilyKind::kSubdividedClique: {
      ExpectArity(spec, 2, 2);
      int m = p[0];
      int t = p[1];
      if (m < 1) Reject(spec, "needs m >= 1 hubs");
      if (t < 0) Reject(spec, "needs t >= 0 subdivisions");
      long long pairs = static_cast<long long>(m) * (m - 1) / 2;
      ExpectVertexCount(spec, m + pairs * t);
      std::vector<Edge> edges;
      int next = m;
      for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
          int prev = a;
          for (int k = 0; k < t; ++k) {
            edges.push_back({prev, next});
            prev = next++;
          }
          edges.push_back({prev, b});
        }
      }
      return Graph(next, std::move(edges));
    }
    case FamilyKind::kErdosRenyi: {
      ExpectArity(spec, 3, 3);
      int n = p[0];
      int percent = p[1];
      if (n < 0) Reject(spec, "needs n >= 0");
      if (percent < 0 || percent > 100) Reject(spec, "edge percentage must be in [0, 100]");
      ExpectVertexCount(spec, n);
      // mt19937_64's output sequence is fixed by the standard; distributions
      // are not, so the draw is done on raw words.
      std::mt19937_64 rng(static_cast<std::uint64_t>(static_cast<std::uint32_t>(p[2])));
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (rng() % 100 < static_cast<std::uint64_t>(percent)) edges.push_back({u, v});
        }
      }
      return Graph(n, std::move(edges));
    }
    case FamilyKind::kEdgeless: {
      ExpectArity(spec, 1, 1);
      if (p[0] < 0) Reject(spec, "needs n >= 0");
      ExpectVertexCount(spec, p[0]);
      return Graph::Edgeless(p[0]);
    }
  }
  Reject(spec, "unhandled family");
}

VertexSet SubdividedCliqueHubs(int m) {
  VertexSet hubs(m);
  for (int i = 0; i < m; ++i) hubs[i] = i;
  return hubs;
}

}  // namespace sparsity
