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

#include "sparsity/serialization.h"

#include <string>
#include <vector>

namespace sparsity {
namespace {

[[noreturn]] void Bad(const std::string& what) { throw FormatError(what); }

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) Bad(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) Bad(std::string("missing field \"") + key + "\"");
  return *it;
}

int Int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) Bad(what + " must be an integer");
  long long v = j.get<long long>();
  if (v < -2147483647LL || v > 2147483647LL) Bad(what + " out of range");
  return static_cast<int>(v);
}

std::vector<int> IntList(const Json& j, const std::string& what) {
  if (!j.is_array()) Bad(what + " must be an array");
  std::vector<int> out;
  for (const Json& x : j) out.push_back(Int(x, what + " entry"));
  return out;
}

void ExpectKind(const Json& j, const char* kind) {
  const Json& k = Field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    Bad(std::string("expected kind \"") + kind + "\"");
  }
}

// {"0": x, "1": y, ...} indexed by pattern vertex, all keys present.
template <typename T, typename F>
std::vector<T> IndexedMap(const Json& j, int count, const char* what, F convert) {
  if (!j.is_object()) Bad(std::string(what) + " must be an object");
  if (static_cast<int>(j.size()) != count) {
    Bad(std::string(what) + " must have one entry per pattern vertex");
  }
  std::vector<T> out(count);
  for (int u = 0; u < count; ++u) {
    auto it = j.find(std::to_string(u));
    if (it == j.end()) Bad(std::string(what) + " lacks vertex " + std::to_string(u));
    out[u] = convert(*it);
  }
  return out;
}

std::string EdgeKey(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Json OptionalInt(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<int> OptionalIntFrom(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return Int(*it, key);
}

}  // namespace

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw FormatError(std::string("malformed JSON: ") + err.what());
  }
}

Json GraphToJson(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Graph GraphFromJson(const Json& j) {
  int n = Int(Field(j, "n"), "n");
  if (n < 0) Bad("n must be non-negative");
  const Json& edges = Field(j, "edges");
  if (!edges.is_array()) Bad("edges must be an array");
  std::vector<Edge> out;
  for (const Json& e : edges) {
    std::vector<int> pair = IntList(e, "edge");
    if (pair.size() != 2) Bad("edge must have two endpoints");
    out.push_back({pair[0], pair[1]});
  }
  try {
    return Graph(n, std::move(out));
  } catch (const std::invalid_argument& err) {
    Bad(err.what());
  }
}

Json MinorModelToJson(const MinorModel& model) {
  Json sets = Json::object();
  Json centers = Json::object();
  for (std::size_t u = 0; u < model.branch_sets.size(); ++u) {
    sets[std::to_string(u)] = model.branch_sets[u];
    centers[std::to_string(u)] = model.centers[u];
  }
  return {{"kind", "minor"},
          {"depth", model.depth},
          {"pattern", GraphToJson(model.pattern)},
          {"branch_sets", std::move(sets)},
          {"centers", std::move(centers)}};
}

MinorModel MinorModelFromJson(const Json& j) {
  ExpectKind(j, "minor");
  MinorModel model;
  model.depth = Int(Field(j, "depth"), "depth");
  model.pattern = GraphFromJson(Field(j, "pattern"));
  int k = model.pattern.num_vertices();
  model.branch_sets = IndexedMap<VertexSet>(Field(j, "branch_sets"), k, "branch_sets",
                                            [](const Json& x) {
                                              return Normalized(IntList(x, "branch set"));
                                            });
  model.centers = IndexedMap<Vertex>(Field(j, "centers"), k, "centers",
                                     [](const Json& x) { return Int(x, "center"); });
  return model;
}

Json TopoModelToJson(const TopoMinorModel& model) {
  Json branch = Json::object();
  for (std::size_t u = 0; u < model.branch_vertices.size(); ++u) {
    branch[std::to_string(u)] = model.branch_vertices[u];
  }
  Json paths = Json::object();
  for (int e = 0; e < model.pattern.num_edges(); ++e) {
    paths[EdgeKey(model.pattern.edges()[e])] = model.edge_paths[e];
  }
  return {{"kind", "topo"},
          {"depth", model.depth},
          {"pattern", GraphToJson(model.pattern)},
          {"branch_vertices", std::move(branch)},
          {"edge_paths", std::move(paths)}};
}

TopoMinorModel TopoModelFromJson(const Json& j) {
  ExpectKind(j, "topo");
  TopoMinorModel model;
  model.depth = Int(Field(j, "depth"), "depth");
  model.pattern = GraphFromJson(Field(j, "pattern"));
  model.branch_vertices =
      IndexedMap<Vertex>(Field(j, "branch_vertices"), model.pattern.num_vertices(),
                         "branch_vertices", [](const Json& x) { return Int(x, "branch vertex"); });
  const Json& paths = Field(j, "edge_paths");
  if (!paths.is_object() || static_cast<int>(paths.size()) != model.pattern.num_edges()) {
    Bad("edge_paths must have one entry per pattern edge");
  }
  for (const Edge& e : model.pattern.edges()) {
    auto it = paths.find(EdgeKey(e));
    if (it == paths.end()) Bad("edge_paths lacks edge " + EdgeKey(e));
    model.edge_paths.push_back(IntList(*it, "edge path"));
  }
  return model;
}

Json CertificateToJson(const WidenessCertificate& cert) {
  Json rounds = Json::array();
  for (const UqwRound& r : cert.rounds) rounds.push_back({{"R", r.R}, {"X_size", r.X_size}});
  return {{"kind", "certificate"}, {"d", cert.d}, {"S", cert.S},
          {"X", cert.X},           {"W", cert.W}, {"rounds", std::move(rounds)}};
}

WidenessCertificate CertificateFromJson(const Json& j) {
  ExpectKind(j, "certificate");
  WidenessCertificate cert;
  cert.d = Int(Field(j, "d"), "d");
  cert.S = IntList(Field(j, "S"), "S");
  cert.X = IntList(Field(j, "X"), "X");
  cert.W = IntList(Field(j, "W"), "W");
  const Json& rounds = Field(j, "rounds");
  if (!rounds.is_array()) Bad("rounds must be an array");
  for (const Json& r : rounds) {
    cert.rounds.push_back({IntList(Field(r, "R"), "R"), Int(Field(r, "X_size"), "X_size")});
  }
  return cert;
}

Json WitnessToJson(const DensityWitness& witness) {
  return {{"kind", "witness"},
          {"source", std::string(WitnessSourceName(witness.source))},
          {"round", witness.round},
          {"model", MinorModelToJson(witness.model)}};
}

DensityWitness WitnessFromJson(const Json& j) {
  ExpectKind(j, "witness");
  DensityWitness w;
  const Json& source = Field(j, "source");
  if (!source.is_string()) Bad("source must be a string");
  try {
    w.source = ParseWitnessSource(source.get<std::string>());
  } catch (const std::invalid_argument& err) {
    Bad(err.what());
  }
  w.round = Int(Field(j, "round"), "round");
  w.model = MinorModelFromJson(Field(j, "model"));
  return w;
}

Json UqwResultToJson(const UqwResult& result) {
  Json out = {{"outcome", std::string(UqwOutcomeName(result.outcome))}};
  out["certificate"] = result.certificate ? CertificateToJson(*result.certificate) : Json(nullptr);
  out["witness"] = result.witness ? WitnessToJson(*result.witness) : Json(nullptr);
  return out;
}

Json ConfigToJson(const GameConfig& config) {
  return {{"d", config.d}, {"ell", OptionalInt(config.ell)}, {"m", OptionalInt(config.m)}};
}

GameConfig ConfigFromJson(const Json& j) {
  GameConfig config;
  config.d = Int(Field(j, "d"), "d");
  config.ell = OptionalIntFrom(j, "ell");
  config.m = OptionalIntFrom(j, "m");
  try {
    ValidateConfig(config);
  } catch (const std::invalid_argument& err) {
    Bad(err.what());
  }
  return config;
}

Json MoveToJson(const Move& move) { return {{"v", move.v}, {"W", move.W}}; }

Move MoveFromJson(const Json& j) {
  return {Int(Field(j, "v"), "v"), IntList(Field(j, "W"), "W")};
}

Json TraceToJson(const StrategyTrace& trace) {
  Json moves = Json::array();
  for (const Move& m : trace.moves) moves.push_back(MoveToJson(m));
  return {{"config", ConfigToJson(trace.config)},
          {"moves", std::move(moves)},
          {"winner", std::string(OutcomeName(trace.winner))},
          {"arena_sizes", trace.arena_sizes},
          {"end_reason", trace.end_reason}};
}

StrategyTrace TraceFromJson(const Json& j) {
  StrategyTrace trace;
  trace.config = ConfigFromJson(Field(j, "config"));
  const Json& moves = Field(j, "moves");
  if (!moves.is_array()) Bad("moves must be an array");
  for (const Json& m : moves) trace.moves.push_back(MoveFromJson(m));
  const Json& winner = Field(j, "winner");
  if (!winner.is_string()) Bad("winner must be a string");
  std::string w = winner.get<std::string>();
  if (w == "splitter") {
    trace.winner = Outcome::kSplitterWins;
  } else if (w == "connector") {
    trace.winner = Outcome::kConnectorWins;
  } else if (w == "ongoing") {
    trace.winner = Outcome::kOngoing;
  } else {
    Bad("winner must be \"splitter\" or \"connector\"");
  }
  trace.arena_sizes = IntList(Field(j, "arena_sizes"), "arena_sizes");
  if (auto it = j.find("end_reason"); it != j.end()) {
    if (!it->is_string()) Bad("end_reason must be a string");
    trace.end_reason = it->get<std::string>();
  }
  return trace;
}

}  // namespace sparsity
