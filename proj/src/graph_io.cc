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

#include "sparsity/graph_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

namespace sparsity {
namespace {

bool IsBlankOrComment(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

// Parses exactly `count` non-negative integers from the line, nothing else.
bool ParseInts(const std::string& line, int count, long long* out) {
  std::istringstream ss(line);
  for (int i = 0; i < count; ++i) {
    if (!(ss >> out[i])) return false;
  }
  std::string rest;
  return !(ss >> rest);
}

}  // namespace

EdgeListError::EdgeListError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

Graph ReadEdgeList(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    long long vals[2];
    if (!ParseInts(line, 2, vals)) {
      throw EdgeListError(line_no, have_header ? "expected \"u v\"" : "expected header \"n m\"");
    }
    if (!have_header) {
      n = vals[0];
      m = vals[1];
      if (n < 0 || m < 0 || n > 100000000 || m > 1000000000) {
        throw EdgeListError(line_no, "header counts out of range");
      }
      have_header = true;
      continue;
    }
    long long u = vals[0];
    long long v = vals[1];
    if (static_cast<long long>(edges.size()) == m) {
      throw EdgeListError(line_no, "more than " + std::to_string(m) + " edge lines");
    }
    if (u == v) throw EdgeListError(line_no, "self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw EdgeListError(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
    }
    if (u > v) throw EdgeListError(line_no, "edge must be written with u < v");
    if (!seen.emplace(static_cast<int>(u), static_cast<int>(v)).second) {
      throw EdgeListError(line_no, "duplicate edge " + std::to_string(u) + " " +
                                       std::to_string(v));
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (!have_header) throw EdgeListError(0, "missing header line \"n m\"");
  if (static_cast<long long>(edges.size()) != m) {
    throw EdgeListError(0, "header announces " + std::to_string(m) + " edges, found " +
                               std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph ReadEdgeListString(const std::string& text) {
  std::istringstream in(text);
  return ReadEdgeList(in);
}

Graph ReadEdgeListFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return ReadEdgeList(in);
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string WriteEdgeListString(const Graph& g) {
  std::ostringstream out;
  WriteEdgeList(g, out);
  return out.str();
}

}  // namespace sparsity
