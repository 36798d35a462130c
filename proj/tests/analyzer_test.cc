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

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sparsity/analyzer.h"

namespace sparsity {
namespace {

std::string ReadGolden(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/../golden/" + name, std::ios::binary);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST_CASE("grid profile matches the golden file") {
  AnalyzeOptions o;
  o.family = FamilyKind::kGrid;
  o.n_lo = 2;
  o.n_hi = 5;
  o.depths = {1};
  CHECK(Render(Analyze(o), "csv") == ReadGolden("grid_d1.csv"));
}

TEST_CASE("profile rows and formats") {
  AnalyzeOptions o;
  o.family = FamilyKind::kCycle;
  o.n_lo = 4;
  o.n_hi = 8;
  o.n_step = 2;
  o.depths = {0, 1};
  FamilyProfile p = Analyze(o);
  REQUIRE(p.rows.size() == 6);
  CHECK(p.rows[0].n == 4);
  CHECK(p.rows[0].d == 0);
  CHECK(p.rows[1].d == 1);
  CHECK(p.rows[0].omega_d == 2);
  std::string csv = Render(p, "csv");
  CHECK(csv.rfind(std::string(kProfileCsvHeader) + "\n", 0) == 0);
  CHECK(ProfileFromJson(ParseJson(Render(p, "json"))) == p);
  CHECK_THROWS_AS(Render(p, "xml"), std::invalid_argument);
}

TEST_CASE("analyzer input checks") {
  AnalyzeOptions o;
  o.family = FamilyKind::kCycle;
  o.n_lo = 2;
  o.n_hi = 4;
  CHECK_THROWS_AS(Analyze(o), std::invalid_argument);
  o.n_lo = 5;
  CHECK_THROWS_AS(Analyze(o), std::invalid_argument);
  o.n_lo = 3;
  o.n_step = 0;
  CHECK_THROWS_AS(Analyze(o), std::invalid_argument);
}

TEST_CASE("subdivided cliques take the extra parameter") {
  AnalyzeOptions o;
  o.family = FamilyKind::kSubdividedClique;
  o.extra_params = {1};
  o.n_lo = 3;
  o.n_hi = 4;
  o.depths = {1};
  FamilyProfile p = Analyze(o);
  REQUIRE(p.rows.size() == 2);
  CHECK(p.rows[1].omega_d == 4);
}

}  // namespace
}  // namespace sparsity
