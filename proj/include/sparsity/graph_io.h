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

#ifndef SPARSITY_GRAPH_IO_H_
#define SPARSITY_GRAPH_IO_H_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sparsity/graph.h"

namespace sparsity {

// Raised by the edge-list reader; line() is 1-based (0 when the problem is
// not tied to a line, e.g. too few edge lines).
class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Format: optional '#' comment lines, a header line "n m", then exactly m
// lines "u v" with 0 <= u < v < n, each pair unique.
Graph ReadEdgeList(std::istream& in);
Graph ReadEdgeListString(const std::string& text);
Graph ReadEdgeListFile(const std::filesystem::path& path);

// Writes the header and edges in lexicographic order.
void WriteEdgeList(const Graph& g, std::ostream& out);
std::string WriteEdgeListString(const Graph& g);

}  // namespace sparsity

#endif  // SPARSITY_GRAPH_IO_H_
