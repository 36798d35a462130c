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

#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "sparsity/families.h"
#include "sparsity/graph_io.h"

namespace sparsity {
namespace {

namespace fs = std::filesystem;

TEST_CASE("edge lists round trip") {
  for (const auto& entry : fs::directory_iterator(FIXTURE_DIR)) {
    if (!entry.is_regular_file()) continue;
    CAPTURE(entry.path().string());
    Graph g = ReadEdgeListFile(entry.path());
    CHECK(ReadEdgeListString(WriteEdgeListString(g)) == g);
  }
  Graph grid = Generate(FamilySpec::Grid(4, 3));
  CHECK(ReadEdgeListString(WriteEdgeListString(grid)) == grid);
}

TEST_CASE("comments and blank lines are skipped") {
  Graph g = ReadEdgeListString("# hi\n\n3 2\n# edge\n0 1\n  \n1 2\n");
  CHECK(g.num_edges() == 2);
}

TEST_CASE("malformed inputs name the line") {
  auto line_of = [](const std::string& text) {
    try {
      ReadEdgeListString(text);
    } catch (const EdgeListError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("3 1\n1 1\n") == 2);
  CHECK(line_of("3 2\n0 1\n0 1\n") == 3);
  CHECK(line_of("3 1\n0 3\n") == 2);
  CHECK(line_of("x y\n") == 1);
  CHECK(line_of("3 1\n2 1\n") == 2);
  CHECK(line_of("3 1\n0 1 2\n") == 2);
  CHECK(line_of("3 2\n0 1\n") == 0);
  CHECK(line_of("") == 0);
  CHECK(line_of("3 1\n0 1\n1 2\n") == 3);
}

TEST_CASE("every malformed fixture is rejected") {
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(fs::path(FIXTURE_DIR) / "malformed")) {
    CAPTURE(entry.path().string());
    CHECK_THROWS_AS(ReadEdgeListFile(entry.path()), EdgeListError);
    ++seen;
  }
  CHECK(seen >= 5);
}

}  // namespace
}  // namespace sparsity
