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

#ifndef SPARSITY_SRC_MINOR_INTERNAL_H_
#define SPARSITY_SRC_MINOR_INTERNAL_H_

#include <vector>

#include "sparsity/minors.h"

namespace sparsity::internal {

// Parent pointers (indexed by host vertex, -1 outside the set and at the
// center) of the canonical BFS tree of G[set].
std::vector<Vertex> BranchTreeParents(const Graph& host, const VertexSet& set, Vertex center);

// One host edge {x in B(u), y in B(v)} per pattern edge (u, v), the first in
// lexicographic order; {-1, -1} if the edge is not realized.
std::vector<Edge> RealizingEdges(const Graph& host, const MinorModel& model);

}  // namespace sparsity::internal

#endif  // SPARSITY_SRC_MINOR_INTERNAL_H_
