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

// Family sweeps: one row of sparsity statistics per (n, d).

#ifndef SPARSITY_ANALYZER_H_
#define SPARSITY_ANALYZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "sparsity/families.h"
#include "sparsity/minors.h"
#include "sparsity/serialization.h"

namespace sparsity {

struct AnalyzeOptions {
  FamilyKind family = FamilyKind::kCycle;
  // Parameters after the size parameter n, e.g. {t} for subdivided_clique
  // (n = hubs) or {percent, seed} for erdos_renyi. For grid, n is the side.
  std::vector<int> extra_params;
  int n_lo = 1;
  int n_hi = 1;
  int n_step = 1;
  std::vector<int> depths{1};
  SearchBudget budget{2'000'000};
  int max_clique = 8;
  int uqw_target = 4;  // target (and default h, kappa_cap) for the outcome tag
};

struct ProfileRow {
  std::string family;
  int n = 0;
  int d = 0;
  int omega_d = 0;
  bool omega_truncated = false;
  int max_scattered = 0;
  std::string uqw_outcome;
  int splitter_rounds = 0;

  bool operator==(const ProfileRow&) const = default;
};

struct FamilyProfile {
  std::string family;
  std::vector<ProfileRow> rows;  // n major, d minor

  bool operator==(const FamilyProfile&) const = default;
};

// Row semantics:
//   omega_d          largest clique found at depth d (capped at max_clique);
//                    omega_truncated marks a budget stop or an oversized host
//   max_scattered    exact optimum up to 14 vertices, otherwise the size the
//                    wideness construction reaches with W = V
//   uqw_outcome      certificate | witness | target_unmet at uqw_target
//   splitter_rounds  path-union splitter vs the largest-ball connector
// Throws std::invalid_argument for empty or inverted ranges.
FamilyProfile Analyze(const AnalyzeOptions& options);

inline constexpr std::string_view kProfileCsvHeader =
    "family,n,d,omega_d,omega_truncated,max_scattered,uqw_outcome,splitter_rounds";

// format is "csv" or "json"; anything else throws std::invalid_argument.
std::string Render(const FamilyProfile& profile, std::string_view format);

Json ProfileToJson(const FamilyProfile& profile);
FamilyProfile ProfileFromJson(const Json& j);

}  // namespace sparsity

#endif  // SPARSITY_ANALYZER_H_
