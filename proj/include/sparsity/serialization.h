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

// JSON forms of graphs, certificates, and game traces.
//
//   graph        {"n": 4, "edges": [[0, 1], ...]}
//   minor        {"kind": "minor", "depth": d, "pattern": graph,
//                 "branch_sets": {"0": [..], ...}, "centers": {"0": c, ...}}
//   topo         {"kind": "topo", "depth": d, "pattern": graph,
//                 "branch_vertices": {"0": x, ...}, "edge_paths": {"0-1": [..], ...}}
//   certificate  {"kind": "certificate", "d": d, "S": [..], "X": [..], "W": [..],
//                 "rounds": [{"R": [..], "X_size": k}, ...]}
//   witness      {"kind": "witness", "source": "biclique", "round": i, "model": minor}
//   trace        {"config": {"d": d, "ell": int|null, "m": int|null},
//                 "moves": [{"v": v, "W": [..]}, ...], "winner": "splitter"|"connector",
//                 "arena_sizes": [..], "end_reason": "..."}
//
// Readers validate shape and throw FormatError; semantic checks (is the model
// valid?) are left to the verifiers.

#ifndef SPARSITY_SERIALIZATION_H_
#define SPARSITY_SERIALIZATION_H_

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "sparsity/graph.h"
#include "sparsity/minors.h"
#include "sparsity/splitter.h"
#include "sparsity/wideness.h"

namespace sparsity {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json GraphToJson(const Graph& g);
Graph GraphFromJson(const Json& j);

Json MinorModelToJson(const MinorModel& model);
MinorModel MinorModelFromJson(const Json& j);

Json TopoModelToJson(const TopoMinorModel& model);
TopoMinorModel TopoModelFromJson(const Json& j);

Json CertificateToJson(const WidenessCertificate& cert);
WidenessCertificate CertificateFromJson(const Json& j);

Json WitnessToJson(const DensityWitness& witness);
DensityWitness WitnessFromJson(const Json& j);

// {"outcome": "certificate"|"witness"|"target_unmet", "certificate": ..., "witness": ...}
Json UqwResultToJson(const UqwResult& result);

Json ConfigToJson(const GameConfig& config);
GameConfig ConfigFromJson(const Json& j);

Json MoveToJson(const Move& move);
Move MoveFromJson(const Json& j);

Json TraceToJson(const StrategyTrace& trace);
StrategyTrace TraceFromJson(const Json& j);

// Parses text, mapping parse errors to FormatError.
Json ParseJson(const std::string& text);

}  // namespace sparsity

#endif  // SPARSITY_SERIALIZATION_H_
