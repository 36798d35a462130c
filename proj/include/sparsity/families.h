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

#ifndef SPARSITY_FAMILIES_H_
#define SPARSITY_FAMILIES_H_

#include <string>
#include <string_view>
#include <vector>

#include "sparsity/graph.h"

namespace sparsity {

enum class FamilyKind {
  kClique,
  kCycle,
  kPath,
  kStar,
  kGrid,
  kSubdividedClique,
  kErdosRenyi,
  kEdgeless,
};

// Parameters per kind (all integers):
//   clique(n)                 n >= 1
//   cycle(n)                  n >= 3, vertices in cyclic order
//   path(n)                   n >= 1, vertices in path order
//   star(leaves)              center 0, leaves 1..leaves
//   grid(side) / grid(r, c)   row-major, vertex = row * c + col
//   subdivided_clique(m, t)   hubs 0..m-1, then t vertices per hub pair in
//                             lexicographic pair order, listed hub-to-hub
//   erdos_renyi(n, p, seed)   each pair kept with probability p percent
//   edgeless(n)
struct FamilySpec {
  FamilyKind kind = FamilyKind::kEdgeless;
  std::vector<int> params;

  bool operator==(const FamilySpec&) const = default;

  static FamilySpec Clique(int n) { return {FamilyKind::kClique, {n}}; }
  static FamilySpec Cycle(int n) { return {FamilyKind::kCycle, {n}}; }
  static FamilySpec Path(int n) { return {FamilyKind::kPath, {n}}; }
  static FamilySpec Star(int leaves) { return {FamilyKind::kStar, {leaves}}; }
  static FamilySpec Grid(int rows, int cols) { return {FamilyKind::kGrid, {rows, cols}}; }
  static FamilySpec SubdividedClique(int m, int t) {
    return {FamilyKind::kSubdividedClique, {m, t}};
  }
  static FamilySpec ErdosRenyi(int n, int percent, int seed) {
    return {FamilyKind::kErdosRenyi, {n, percent, seed}};
  }
  static FamilySpec EdgelessGraph(int n) { return {FamilyKind::kEdgeless, {n}}; }
};

std::string_view FamilyKindName(FamilyKind kind);

// Throws std::invalid_argument for unknown names.
FamilyKind ParseFamilyKind(std::string_view name);

// Deterministic in (kind, params). Throws std::invalid_argument with an
// explanation when the parameters are out of range.
Graph Generate(const FamilySpec& spec);

// Hub vertices of subdivided_clique(m, t): 0..m-1.
VertexSet SubdividedCliqueHubs(int m);

}  // namespace sparsity

#endif  // SPARSITY_FAMILIES_H_
