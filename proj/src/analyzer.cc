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

#include "sparsity/analyzer.h"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "sparsity/splitter.h"
#include "sparsity/wideness.h"

namespace sparsity {
namespace {

VertexSet AllVertices(const Graph& g) {
  VertexSet all(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
  return all;
}

int MaxScattered(const Graph& g, int d) {
  if (g.num_vertices() <= kMaxExactScatterVertices) {
    return static_cast<int>(MaxScatteredExact(g, d).size());
  }
  // Lower bound. With h = target = n no vertex can join S, so X is
  // scattered in g itself.
  UqwParams params;
  params.target = g.num_vertices();
  params.kappa_cap = g.num_vertices();
  UqwResult r = UqwConstruct(g, AllVertices(g), d, params);
  return r.certificate ? static_cast<int>(r.certificate->X.size()) : 0;
}

}  // namespace

FamilyProfile Analyze(const AnalyzeOptions& options) {
  if (options.n_step < 1 || options.n_lo > options.n_hi) {
    throw std::invalid_argument("n range must be A:B:STEP with A <= B and STEP >= 1");
  }
  if (options.depths.empty()) throw std::invalid_argument("at least one depth is required");
  for (int d : options.depths) {
    if (d < 0) throw std::invalid_argument("depths must be non-negative");
  }
  if (options.uqw_target < 2) throw std::invalid_argument("uqw target must be at least 2");
  FamilyProfile profile;
  profile.family = std::string(FamilyKindName(options.family));
  int d_max = *std::max_element(options.depths.begin(), options.depths.end());
  for (int n = options.n_lo; n <= options.n_hi; n += options.n_step) {
    FamilySpec spec{options.family, {n}};
    spec.params.insert(spec.params.end(), options.extra_params.begin(),
                       options.extra_params.end());
    auto g = std::make_shared<const Graph>(Generate(spec));
    std::optional<CliqueProfile> cliques;
    if (g->num_vertices() <= kMaxSearchHostVertices) {
      cliques = ComputeCliqueProfile(*g, d_max, options.max_clique, options.budget);
    }
    for (int d : options.depths) {
      ProfileRow row;
      row.family = profile.family;
      row.n = n;
      row.d = d;
      if (cliques) {
        row.omega_d = cliques->cells[d].omega;
        row.omega_truncated = cliques->cells[d].truncated;
      } else {
        row.omega_truncated = true;
      }
      row.max_scattered = MaxScattered(*g, d);
      UqwParams params;
      params.target = options.uqw_target;
      row.uqw_outcome = std::string(UqwOutcomeName(UqwConstruct(*g, AllVertices(*g), d, params).outcome));
      StrategyTrace trace = PlayMatch(g, GameConfig{d, std::nullopt, std::nullopt},
                                      PathUnionSplitter(), GreedyBallConnector());
      row.splitter_rounds = GameLength(trace);
      profile.rows.push_back(std::move(row));
    }
  }
  return profile;
}

Json ProfileToJson(const FamilyProfile& profile) {
  Json rows = Json::array();
  for (const ProfileRow& r : profile.rows) {
    rows.push_back({{"family", r.family},
                    {"n", r.n},
                    {"d", r.d},
                    {"omega_d", r.omega_d},
                    {"omega_truncated", r.omega_truncated},
                    {"max_scattered", r.max_scattered},
                    {"uqw_outcome", r.uqw_outcome},
                    {"splitter_rounds", r.splitter_rounds}});
  }
  return {{"family", profile.family}, {"rows", std::move(rows)}};
}

FamilyProfile ProfileFromJson(const Json& j) {
  try {
    FamilyProfile profile;
    profile.family = j.at("family").get<std::string>();
    for (const Json& r : j.at("rows")) {
      ProfileRow row;
      row.family = r.at("family").get<std::string>();
      row.n = r.at("n").get<int>();
      row.d = r.at("d").get<int>();
      row.omega_d = r.at("omega_d").get<int>();
      row.omega_truncated = r.at("omega_truncated").get<bool>();
      row.max_scattered = r.at("max_scattered").get<int>();
      row.uqw_outcome = r.at("uqw_outcome").get<std::string>();
      row.splitter_rounds = r.at("splitter_rounds").get<int>();
      profile.rows.push_back(std::move(row));
    }
    return profile;
  } catch (const Json::exception& err) {
    throw FormatError(std::string("malformed profile: ") + err.what());
  }
}

std::string Render(const FamilyProfile& profile, std::string_view format) {
  if (format == "json") return ProfileToJson(profile).dump(2) + "\n";
  if (format != "csv") {
    throw std::invalid_argument("unknown format '" + std::string(format) + "' (csv or json)");
  }
  std::ostringstream out;
  out << kProfileCsvHeader << '\n';
  for (const ProfileRow& r : profile.rows) {
    out << r.family << ',' << r.n << ',' << r.d << ',' << r.omega_d << ','
        << (r.omega_truncated ? "true" : "false") << ',' << r.max_scattered << ','
        << r.uqw_outcome << ',' << r.splitter_rounds << '\n';
  }
  return out.str();
}

}  // namespace sparsity
