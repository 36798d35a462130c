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

// Command-line front end.
//
// Exit codes: 0 found / valid / won as queried, 1 not found / invalid / lost,
// 2 usage error or malformed input, 3 search budget exhausted.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sparsity/analyzer.h"
#include "sparsity/families.h"
#include "sparsity/graph_io.h"
#include "sparsity/http_service.h"
#include "sparsity/minors.h"
#include "sparsity/serialization.h"
#include "sparsity/session.h"
#include "sparsity/splitter.h"
#include "sparsity/wideness.h"

namespace sparsity {
namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kTruncated = 3;

// Raised for bad input discovered after argument parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> ParseIntList(const std::string& text, char sep) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + item + "'");
    }
  }
  return out;
}

// "kind:p1,p2" using the family generator, e.g. clique:4 or cycle:5.
Graph ParsePattern(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("pattern must look like KIND:PARAMS, e.g. clique:4");
  FamilySpec spec{ParseFamilyKind(text.substr(0, colon)), ParseIntList(text.substr(colon + 1), ',')};
  return Generate(spec);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

VertexSet ReadVertexList(const std::string& path) {
  std::stringstream in(ReadFile(path));
  VertexSet out;
  std::string token;
  while (in >> token) {
    if (token[0] == '#') {
      std::getline(in, token);
      continue;
    }
    auto ids = ParseIntList(token, ',');
    out.insert(out.end(), ids.begin(), ids.end());
  }
  return Normalized(std::move(out));
}

void Emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int StatusExit(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound: return kOk;
    case SearchStatus::kAbsent: return kNegative;
    case SearchStatus::kBudgetExhausted: return kTruncated;
  }
  return kNegative;
}

template <typename Result, typename ToJson>
int ReportSearch(const Result& r, ToJson to_json) {
  Json out = {{"status", std::string(SearchStatusName(r.status))}, {"nodes", r.nodes}};
  out["model"] = r.model ? to_json(*r.model) : Json(nullptr);
  Emit(out);
  return StatusExit(r.status);
}

// Text-mode game against an engine; moves are read from stdin.
int PlayInteractive(std::shared_ptr<const Graph> g, const GameConfig& config,
                    const std::string& as, const std::string& engine) {
  GameState state = GameState::Start(g, config);
  std::shared_ptr<GameSolver> solver;
  if (engine == "solver") solver = std::make_shared<GameSolver>(g, config.d);
  bool human_connects = as == "connector";
  auto engine_split = [&](const GameState& s) {
    return solver ? SolverSplitter(solver)(s) : PathUnionReply(s);
  };
  VertexSet hubs;
  for (Vertex v = 0; v < g->num_vertices(); ++v) {
    if (g->degree(v) == g->max_degree()) hubs.push_back(v);
  }
  auto engine_connect = [&](const GameState& s) {
    return solver ? SolverConnector(solver)(s) : HubConnector(hubs)(s);
  };
  std::string reason;
  auto show = [&] {
    std::cout << "round " << state.rounds_played() + 1 << ", arena:";
    for (Vertex v : state.arena()) std::cout << ' ' << v;
    std::cout << '\n';
  };
  while (!state.over()) {
    show();
    if (human_connects) {
      std::cout << "connector> " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) {
        reason = "connector_resigned";
        break;
      }
      try {
        state = state.ApplyConnectorMove(std::stoi(line));
      } catch (const IllegalMove& err) {
        std::cout << err.what() << '\n';
        continue;
      } catch (const std::exception&) {
        std::cout << "enter a vertex id\n";
        continue;
      }
      VertexSet w = engine_split(state);
      state = state.ApplySplitterMove(w);
      std::cout << "splitter removes:";
      for (Vertex x : w) std::cout << ' ' << x;
      std::cout << '\n';
    } else {
      std::optional<Vertex> v = engine_connect(state);
      if (!v) {
        reason = "connector_resigned";
        break;
      }
      state = state.ApplyConnectorMove(*v);
      std::cout << "connector plays " << *v << "; ball:";
      for (Vertex x : state.BallInArena(*v)) std::cout << ' ' << x;
      std::cout << "\nsplitter> " << std::flush;
      while (true) {
        std::string line;
        if (!std::getline(std::cin, line)) return kNegative;
        try {
          std::stringstream ss(line);
          VertexSet w;
          int x;
          while (ss >> x) w.push_back(x);
          state = state.ApplySplitterMove(w);
          break;
        } catch (const IllegalMove& err) {
          std::cout << err.what() << "\nsplitter> " << std::flush;
        }
      }
    }
  }
  StrategyTrace trace;
  trace.config = config;
  trace.moves = state.history();
  for (const VertexSet& a : state.arenas()) trace.arena_sizes.push_back(static_cast<int>(a.size()));
  if (reason.empty()) {
    trace.winner = state.outcome();
    trace.end_reason = state.outcome() == Outcome::kSplitterWins ? "arena_empty" : "round_limit";
  } else {
    trace.winner = Outcome::kSplitterWins;
    trace.end_reason = reason;
  }
  Emit(TraceToJson(trace));
  bool human_won = (trace.winner == Outcome::kConnectorWins) == human_connects;
  return human_won ? kOk : kNegative;
}

int Verify(const Graph& g, const Json& j) {
  auto report = [](bool ok, const std::string& what, const std::string& detail) {
    Emit({{"valid", ok}, {"kind", what}, {"detail", detail}});
    return ok ? kOk : kNegative;
  };
  std::string kind = j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  try {
    if (kind == "minor") {
      Verification v = VerifyMinorModel(g, MinorModelFromJson(j));
      return report(v.ok, kind, v.ok ? "" : std::string(ClauseName(v.clause)) + ": " + v.detail);
    }
    if (kind == "topo") {
      Verification v = VerifyTopoModel(g, TopoModelFromJson(j));
      return report(v.ok, kind, v.ok ? "" : std::string(ClauseName(v.clause)) + ": " + v.detail);
    }
    if (kind == "certificate") {
      Verification v = ValidateCertificate(g, CertificateFromJson(j));
      return report(v.ok, kind, v.detail);
    }
    if (kind == "witness") {
      DensityWitness w = WitnessFromJson(j);
      Verification v = VerifyMinorModel(g, w.model);
      return report(v.ok, kind, v.ok ? "" : std::string(ClauseName(v.clause)) + ": " + v.detail);
    }
    if (j.contains("config") && j.contains("moves")) {
      bool ok = TraceReplays(g, TraceFromJson(j));
      return report(ok, "trace", ok ? "" : "trace does not replay through the rules engine");
    }
  } catch (const std::out_of_range& err) {
    return report(false, kind, err.what());
  }
  throw UsageError("unrecognized certificate JSON (expected kind minor, topo, certificate, "
                   "witness, or a game trace)");
}

int Run(int argc, char** argv) {
  CLI::App app{"Structural sparsity toolkit: shallow minors, scattered sets, splitter game"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a family graph as an edge list");
  std::string family;
  std::string params;
  std::string out_path;
  gen->add_option("--family", family, "clique, cycle, path, star, grid, subdivided_clique, "
                                      "erdos_renyi or edgeless")->required();
  gen->add_option("--params", params, "Comma-separated integer parameters")->required();
  gen->add_option("-o,--output", out_path, "Output file (default stdout)");

  // minor / topo-minor
  std::string pattern;
  int depth = 0;
  std::int64_t budget = SearchBudget{}.max_nodes;
  std::string graph_path;
  auto* minor = app.add_subcommand("minor", "Search for a shallow minor");
  auto* topo = app.add_subcommand("topo-minor", "Search for a shallow topological minor");
  for (auto* sub : {minor, topo}) {
    sub->add_option("--pattern", pattern, "Pattern as KIND:PARAMS, e.g. clique:4")->required();
    sub->add_option("--depth", depth, "Depth d")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--budget", budget, "Search node budget")->check(CLI::PositiveNumber);
    sub->add_option("file", graph_path, "Edge-list file")->required();
  }

  // scatter
  int d = 1;
  bool exact = false;
  auto* scatter = app.add_subcommand("scatter", "Find a large d-scattered set");
  scatter->add_option("--d", d, "Radius d")->required()->check(CLI::NonNegativeNumber);
  scatter->add_flag("--exact", exact, "Exact optimum (at most 14 vertices)");
  scatter->add_option("file", graph_path, "Edge-list file")->required();

  // wideness
  int target = 2;
  std::optional<int> h;
  std::optional<int> kappa;
  std::string target_set;
  auto* wide = app.add_subcommand("wideness", "Run the wideness construction");
  wide->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  wide->add_option("--d", d, "Radius d")->required()->check(CLI::NonNegativeNumber);
  wide->add_option("--target", target, "Wanted size of X")->required();
  wide->add_option("--h", h, "Neighbor threshold (default: target)");
  wide->add_option("--kappa-cap", kappa, "Per-round cap (default: target)");
  wide->add_option("--target-set", target_set, "File listing W (default: all vertices)");
  wide->add_option("file", graph_path, "Edge-list file")->required();

  // game
  auto* game = app.add_subcommand("game", "Splitter game");
  game->require_subcommand(1);
  std::optional<int> rounds;
  std::optional<int> budget_m;
  auto* solve = game->add_subcommand("solve", "Exact solution for m = 1 (at most 12 vertices)");
  solve->add_option("--d", d, "Radius d")->required()->check(CLI::NonNegativeNumber);
  solve->add_option("--rounds", rounds, "Round limit ell")->required()->check(CLI::PositiveNumber);
  solve->add_option("file", graph_path, "Edge-list file")->required();
  std::string as = "connector";
  std::string engine;
  auto* play = game->add_subcommand("play", "Play against an engine on the terminal");
  play->add_option("--d", d, "Radius d")->required()->check(CLI::NonNegativeNumber);
  play->add_option("--as", as, "Your role")->check(CLI::IsMember({"connector", "splitter"}));
  play->add_option("--rounds", rounds, "Round limit ell")->check(CLI::PositiveNumber);
  play->add_option("--m", budget_m, "Splitter budget per round")->check(CLI::PositiveNumber);
  play->add_option("--engine", engine, "path_union, hub or solver")
      ->check(CLI::IsMember({"path_union", "hub", "solver"}));
  play->add_option("file", graph_path, "Edge-list file")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Sparsity profile of a graph family");
  std::string n_range;
  std::string depths = "1";
  std::string format = "csv";
  int uqw_target = AnalyzeOptions{}.uqw_target;
  std::int64_t analyze_budget = AnalyzeOptions{}.budget.max_nodes;
  analyze->add_option("--family", family, "Family kind")->required();
  analyze->add_option("--params", params, "Extra parameters after n (e.g. t, or percent,seed)");
  analyze->add_option("--n-range", n_range, "A:B:STEP")->required();
  analyze->add_option("--depths", depths, "Comma-separated depths");
  analyze->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  analyze->add_option("--budget", analyze_budget, "Search node budget per minor query")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--uqw-target", uqw_target, "Target size for the wideness outcome column");
  analyze->add_option("-o,--output", out_path, "Output file (default stdout)");

  // serve
  auto* serve = app.add_subcommand("serve", "Run the game HTTP service");
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string state_file;
  std::string static_dir;
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--state", state_file, "JSON snapshot file for sessions");
  serve->add_option("--static", static_dir, "Directory with the board UI");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a certificate or trace against a graph");
  std::string cert_path;
  verify->add_option("certificate", cert_path, "JSON certificate, witness, or trace")->required();
  verify->add_option("file", graph_path, "Edge-list file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  auto load_graph = [&] { return ReadEdgeListFile(graph_path); };

  if (*gen) {
    Graph g = Generate({ParseFamilyKind(family), ParseIntList(params, ',')});
    if (out_path.empty()) {
      WriteEdgeList(g, std::cout);
    } else {
      std::ofstream out(out_path);
      if (!out) throw UsageError("cannot write " + out_path);
      WriteEdgeList(g, out);
    }
    return kOk;
  }
  if (*minor) {
    Graph g = load_graph();
    return ReportSearch(FindShallowMinor(g, ParsePattern(pattern), depth, {budget}),
                        MinorModelToJson);
  }
  if (*topo) {
    Graph g = load_graph();
    return ReportSearch(FindTopoMinor(g, ParsePattern(pattern), depth, {budget}),
                        TopoModelToJson);
  }
  if (*scatter) {
    Graph g = load_graph();
    VertexSet x;
    if (exact) {
      x = MaxScatteredExact(g, d);
    } else {
      // Greedy by ascending degree, then id.
      std::vector<Vertex> order(g.num_vertices());
      for (Vertex v = 0; v < g.num_vertices(); ++v) order[v] = v;
      std::stable_sort(order.begin(), order.end(),
                       [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
      std::vector<char> blocked(g.num_vertices(), 0);
      for (Vertex v : order) {
        if (blocked[v]) continue;
        x.push_back(v);
        std::vector<int> dist = BfsDistances(g, v, 2 * d);
        for (Vertex u = 0; u < g.num_vertices(); ++u) {
          if (dist[u] != kUnreachable) blocked[u] = 1;
        }
      }
      x = Normalized(std::move(x));
    }
    Emit({{"d", d}, {"exact", exact}, {"size", x.size()}, {"X", x}});
    return kOk;
  }
  if (*wide) {
    Graph g = load_graph();
    VertexSet w;
    if (target_set.empty()) {
      for (Vertex v = 0; v < g.num_vertices(); ++v) w.push_back(v);
    } else {
      w = ReadVertexList(target_set);
    }
    UqwParams p;
    p.target = target;
    p.h = h;
    p.kappa_cap = kappa;
    UqwResult r = UqwConstruct(g, w, d, p);
    Emit(UqwResultToJson(r));
    return r.outcome == UqwOutcome::kCertificate ? kOk : kNegative;
  }
  if (*solve) {
    Graph g = load_graph();
    SolveResult r = SolveGame(g, GameConfig{d, rounds, 1});
    Emit({{"winner", std::string(OutcomeName(r.winner))},
          {"value", r.value},
          {"config", ConfigToJson(GameConfig{d, rounds, 1})},
          {"table_size", r.table.size()}});
    return r.winner == Outcome::kSplitterWins ? kOk : kNegative;
  }
  if (*play) {
    auto g = std::make_shared<const Graph>(load_graph());
    if (engine.empty()) engine = as == "connector" ? "path_union" : "hub";
    bool engine_splits = as == "connector";
    if (engine_splits ? engine == "hub" : engine == "path_union") {
      throw UsageError("engine " + engine + " cannot play the " +
                       (engine_splits ? "splitter" : "connector"));
    }
    if (engine == "path_union" && budget_m) {
      throw UsageError("path_union removes whole path sets; leave --m unset");
    }
    return PlayInteractive(g, GameConfig{d, rounds, budget_m}, as, engine);
  }
  if (*analyze) {
    AnalyzeOptions options;
    options.family = ParseFamilyKind(family);
    options.extra_params = ParseIntList(params, ',');
    std::vector<int> range = ParseIntList(n_range, ':');
    if (range.size() == 2) range.push_back(1);
    if (range.size() != 3) throw UsageError("--n-range must be A:B or A:B:STEP");
    options.n_lo = range[0];
    options.n_hi = range[1];
    options.n_step = range[2];
    options.depths = ParseIntList(depths, ',');
    options.budget = {analyze_budget};
    options.uqw_target = uqw_target;
    FamilyProfile profile = Analyze(options);
    std::string text = Render(profile, format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw UsageError("cannot write " + out_path);
      out << text;
    }
    bool truncated = false;
    for (const ProfileRow& row : profile.rows) truncated |= row.omega_truncated;
    return truncated ? kTruncated : kOk;
  }
  if (*serve) {
    SessionStore store;
    ServiceOptions options;
    if (!state_file.empty()) options.state_file = state_file;
    if (!static_dir.empty()) options.static_dir = static_dir;
    HttpService service(store, options);
    std::cerr << "listening on http://" << host << ':' << port << '\n';
    if (!service.Listen(host, port)) {
      std::cerr << "cannot listen on " << host << ':' << port << '\n';
      return kUsage;
    }
    return kOk;
  }
  if (*verify) {
    Graph g = load_graph();
    return Verify(g, ParseJson(ReadFile(cert_path)));
  }
  return kUsage;
}

}  // namespace
}  // namespace sparsity

int main(int argc, char** argv) {
  try {
    return sparsity::Run(argc, argv);
  } catch (const sparsity::EdgeListError& err) {
    std::cerr << "error: malformed edge list: " << err.what() << '\n';
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
  }
  return sparsity::kUsage;
}
