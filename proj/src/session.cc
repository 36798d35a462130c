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

#include "sparsity/session.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "sparsity/families.h"
#include "sparsity/graph_io.h"

namespace sparsity {
namespace {

constexpr std::string_view kHumanConnector = "human_connector";
constexpr std::string_view kHumanSplitter = "human_splitter";

std::int64_t NowMillis() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

ServiceError BadRequest(std::string code, std::string detail) {
  return ServiceError(400, std::move(code), std::move(detail));
}

ServiceError FromIllegalMove(const IllegalMove& err) {
  int status = err.rule_code() == rules::kOutOfTurn || err.rule_code() == rules::kGameOver ? 409
                                                                                            : 400;
  return ServiceError(status, status == 409 ? "conflict" : "illegal_move",
                      std::string(PlayerName(err.offender())) + ": " +
                          std::string(RuleText(err.rule_code())) + " (" + err.detail() + ")",
                      err.rule_code());
}

std::string StringField(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw BadRequest("bad_request", std::string("\"") + key + "\" must be a string");
  }
  return it->get<std::string>();
}

VertexSet MaxDegreeVertices(const Graph& g) {
  VertexSet out;
  int best = g.num_vertices() == 0 ? 0 : g.max_degree();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == best) out.push_back(v);
  }
  return out;
}

}  // namespace

ServiceError::ServiceError(int status, std::string code, std::string detail, std::string rule)
    : std::runtime_error(code + ": " + detail),
      status_(status),
      code_(std::move(code)),
      rule_(std::move(rule)),
      detail_(std::move(detail)) {}

Json ServiceError::ToJson() const {
  Json error = {{"code", code_}, {"detail", detail_}, {"rule", rule_.empty() ? Json(nullptr) : Json(rule_)}};
  if (!rule_.empty()) error["rule_text"] = std::string(RuleText(rule_));
  return {{"error", std::move(error)}};
}

struct SessionStore::Session {
  std::string id;
  std::uint64_t seq = 0;
  std::int64_t created_ms = 0;
  std::int64_t updated_ms = 0;
  std::shared_ptr<const Graph> graph;
  GameConfig config;
  std::string mode;
  std::string engine;
  VertexSet hubs;
  Json family;  // null unless created from a family
  GameState state;
  std::string end_reason;  // set when the engine connector resigns
  std::shared_ptr<GameSolver> solver;

  bool finished() const { return state.over() || !end_reason.empty(); }

  Outcome winner() const {
    if (end_reason == "connector_resigned") return Outcome::kSplitterWins;
    return state.outcome();
  }

  VertexSet EngineSplitterReply() const {
    if (engine == "solver") {
      return solver->BestSplitterReply(state.arena(), *state.pending_connector_move());
    }
    return PathUnionReply(state);
  }

  // Plays the engine's connector move, or records its resignation.
  void EngineConnectorTurn() {
    if (finished()) return;
    std::optional<Vertex> v;
    if (engine == "solver") {
      v = solver->BestConnectorMove(state.arena());
    } else {
      v = HubConnector(hubs)(state);
    }
    if (!v) {
      end_reason = "connector_resigned";
      return;
    }
    state = state.ApplyConnectorMove(*v);
  }
};

std::shared_ptr<SessionStore::Entry> SessionStore::Find(const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(404, "not_found", "no session with id " + id);
  return it->second;
}

std::string SessionStore::NewId() const {
  std::random_device rd;
  std::ostringstream out;
  for (int i = 0; i < 4; ++i) {
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(rd()));
    out << buf;
  }
  return out.str();
}

Json SessionStore::View(const Session& s) {
  Json moves = Json::array();
  for (const Move& m : s.state.history()) moves.push_back(MoveToJson(m));
  Json sizes = Json::array();
  for (const VertexSet& a : s.state.arenas()) sizes.push_back(a.size());
  bool done = s.finished();
  auto pending = s.state.pending_connector_move();
  return {{"id", s.id},
          {"mode", s.mode},
          {"engine", s.engine},
          {"status", done ? "finished" : "active"},
          {"graph", GraphToJson(*s.graph)},
          {"config", ConfigToJson(s.config)},
          {"hubs", s.hubs},
          {"family", s.family},
          {"arena", s.state.arena()},
          {"round", s.state.rounds_played()},
          {"to_move", done ? Json(nullptr) : Json(std::string(PlayerName(s.state.to_move())))},
          {"pending_v", pending ? Json(*pending) : Json(nullptr)},
          {"moves", std::move(moves)},
          {"arena_sizes", std::move(sizes)},
          {"winner", done ? Json(std::string(OutcomeName(s.winner()))) : Json(nullptr)},
          {"end_reason", s.end_reason.empty() ? Json(nullptr) : Json(s.end_reason)},
          {"created_at", s.created_ms},
          {"updated_at", s.updated_ms}};
}

Json SessionStore::Create(const Json& request) {
  if (!request.is_object()) throw BadRequest("bad_request", "request body must be a JSON object");
  auto s = std::make_unique<Session>();
  s->family = nullptr;
  Graph graph;
  try {
    if (request.contains("graph")) {
      graph = GraphFromJson(request["graph"]);
    } else if (request.contains("edge_list")) {
      graph = ReadEdgeListString(StringField(request, "edge_list"));
    } else if (request.contains("family")) {
      const Json& f = request["family"];
      if (!f.is_object() || !f.contains("kind") || !f["kind"].is_string()) {
        throw BadRequest("invalid_family", "family needs a string \"kind\" and \"params\"");
      }
      FamilySpec spec{ParseFamilyKind(f["kind"].get<std::string>()), {}};
      for (const Json& p : f.value("params", Json::array())) {
        if (!p.is_number_integer()) throw BadRequest("invalid_family", "params must be integers");
        spec.params.push_back(p.get<int>());
      }
      graph = Generate(spec);
      s->family = {{"kind", std::string(FamilyKindName(spec.kind))}, {"params", spec.params}};
      if (spec.kind == FamilyKind::kSubdividedClique) s->hubs = SubdividedCliqueHubs(spec.params[0]);
    } else {
      throw BadRequest("bad_request", "provide \"graph\", \"edge_list\" or \"family\"");
    }
  } catch (const EdgeListError& err) {
    throw BadRequest("invalid_graph", err.what());
  } catch (const FormatError& err) {
    throw BadRequest("invalid_graph", err.what());
  } catch (const std::invalid_argument& err) {
    throw BadRequest(request.contains("family") ? "invalid_family" : "invalid_graph", err.what());
  }
  if (graph.num_vertices() > kMaxSessionVertices) {
    throw BadRequest("graph_too_large", "interactive play supports at most " +
                                            std::to_string(kMaxSessionVertices) + " vertices");
  }
  s->graph = std::make_shared<const Graph>(std::move(graph));
  if (s->hubs.empty()) s->hubs = MaxDegreeVertices(*s->graph);

  try {
    s->config = request.contains("config") ? ConfigFromJson(request["config"]) : GameConfig{};
  } catch (const FormatError& err) {
    throw BadRequest("invalid_config", err.what());
  }
  s->mode = StringField(request, "mode");
  s->engine = StringField(request, "engine");
  if (s->mode != kHumanConnector && s->mode != kHumanSplitter) {
    throw BadRequest("invalid_mode", "mode must be human_connector or human_splitter");
  }
  bool engine_splits = s->mode == kHumanConnector;
  bool known = s->engine == "solver" ||
               (engine_splits ? s->engine == "path_union" : s->engine == "hub");
  if (!known) {
    throw BadRequest("unknown_engine",
                     engine_splits ? "engine for a human connector must be path_union or solver"
                                   : "engine for a human splitter must be hub or solver");
  }
  if (s->engine == "path_union" && s->config.m) {
    throw BadRequest("unknown_engine", "path_union removes whole path sets; leave m unset");
  }
  if (s->engine == "solver") {
    if (s->graph->num_vertices() > GameSolver::kMaxSolverVertices) {
      throw BadRequest("graph_too_large", "the solver engine supports at most " +
                                              std::to_string(GameSolver::kMaxSolverVertices) +
                                              " vertices");
    }
    s->solver = std::make_shared<GameSolver>(s->graph, s->config.d);
  }
  s->state = GameState::Start(s->graph, s->config);
  if (!engine_splits) s->EngineConnectorTurn();

  s->created_ms = s->updated_ms = NowMillis();
  auto entry = std::make_shared<Entry>();
  Json view;
  {
    std::unique_lock lock(mu_);
    do {
      s->id = NewId();
    } while (sessions_.count(s->id));
    s->seq = next_seq_++;
    view = View(*s);
    entry->session = std::move(s);
    sessions_.emplace(entry->session->id, entry);
  }
  return view;
}

Json SessionStore::Get(const std::string& id) const {
  auto entry = Find(id);
  std::lock_guard lock(entry->mu);
  return View(*entry->session);
}

Json SessionStore::List(int offset, int limit) const {
  if (offset < 0 || limit < 1 || limit > 100) {
    throw BadRequest("bad_request", "offset must be >= 0 and limit in [1, 100]");
  }
  std::vector<std::shared_ptr<Entry>> entries;
  {
    std::shared_lock lock(mu_);
    for (const auto& [id, e] : sessions_) entries.push_back(e);
  }
  std::vector<Json> summaries;
  for (const auto& e : entries) {
    std::lock_guard lock(e->mu);
    const Session& s = *e->session;
    summaries.push_back({{"id", s.id},
                         {"mode", s.mode},
                         {"engine", s.engine},
                         {"status", s.finished() ? "finished" : "active"},
                         {"round", s.state.rounds_played()},
                         {"created_at", s.created_ms},
                         {"seq", s.seq}});
  }
  std::sort(summaries.begin(), summaries.end(), [](const Json& a, const Json& b) {
    return a["seq"].get<std::uint64_t>() > b["seq"].get<std::uint64_t>();
  });
  Json page = Json::array();
  for (std::size_t i = offset; i < summaries.size() && page.size() < static_cast<std::size_t>(limit); ++i) {
    summaries[i].erase("seq");
    page.push_back(std::move(summaries[i]));
  }
  return {{"sessions", std::move(page)},
          {"total", summaries.size()},
          {"offset", offset},
          {"limit", limit}};
}

Json SessionStore::SubmitMove(const std::string& id, const Json& move) {
  auto entry = Find(id);
  std::unique_lock lock(entry->mu, std::try_to_lock);
  if (!lock.owns_lock()) {
    throw ServiceError(409, "conflict", "another move for this session is being processed");
  }
  Session& s = *entry->session;
  if (s.finished()) {
    throw ServiceError(409, "conflict", "the game has ended; finished sessions are immutable",
                       std::string(rules::kGameOver));
  }
  if (!move.is_object()) throw BadRequest("bad_request", "move must be a JSON object");
  bool human_connects = s.mode == kHumanConnector;
  VertexSet before = s.state.arena();
  Session next = s;
  Json engine_move = nullptr;
  try {
    if (human_connects) {
      if (!move.contains("v")) {
        if (move.contains("W")) {
          throw IllegalMove(Player::kSplitter, rules::kOutOfTurn,
                            "you play the connector; send {\"v\": vertex}");
        }
        throw BadRequest("bad_request", "expected {\"v\": vertex}");
      }
      if (!move["v"].is_number_integer()) throw BadRequest("bad_request", "v must be an integer");
      next.state = next.state.ApplyConnectorMove(move["v"].get<int>());
      VertexSet reply = next.EngineSplitterReply();
      next.state = next.state.ApplySplitterMove(reply);
      engine_move = {{"W", reply}};
    } else {
      if (!move.contains("W")) {
        if (move.contains("v")) {
          throw IllegalMove(Player::kConnector, rules::kOutOfTurn,
                            "you play the splitter; send {\"W\": [vertices]}");
        }
        throw BadRequest("bad_request", "expected {\"W\": [vertices]}");
      }
      const Json& w = move["W"];
      if (!w.is_array()) throw BadRequest("bad_request", "W must be an array of vertices");
      VertexSet set;
      for (const Json& x : w) {
        if (!x.is_number_integer()) throw BadRequest("bad_request", "W must hold integers");
        set.push_back(x.get<int>());
      }
      next.state = next.state.ApplySplitterMove(set);
      next.EngineConnectorTurn();
      auto pending = next.state.pending_connector_move();
      engine_move = pending ? Json{{"v", *pending}} : Json(nullptr);
    }
  } catch (const IllegalMove& err) {
    throw FromIllegalMove(err);
  }
  next.updated_ms = NowMillis();
  s = std::move(next);
  VertexSet removed;
  std::set_difference(before.begin(), before.end(), s.state.arena().begin(), s.state.arena().end(),
                      std::back_inserter(removed));
  Json view = View(s);
  view["engine_move"] = std::move(engine_move);
  view["arena_diff"] = {{"removed", removed}};
  return view;
}

Json SessionStore::Ball(const std::string& id, Vertex v) const {
  auto entry = Find(id);
  std::lock_guard lock(entry->mu);
  const Session& s = *entry->session;
  if (!s.state.InArena(v)) {
    throw ServiceError(400, "illegal_move", "vertex " + std::to_string(v) + " is not in the arena",
                       std::string(rules::kConnectorOutsideArena));
  }
  return {{"v", v}, {"ball", s.state.BallInArena(v)}};
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(mu_);
  return sessions_.size();
}

Json SessionStore::Snapshot() const {
  std::shared_lock lock(mu_);
  Json sessions = Json::array();
  for (const auto& [id, e] : sessions_) {
    std::lock_guard entry_lock(e->mu);
    const Session& s = *e->session;
    Json moves = Json::array();
    for (const Move& m : s.state.history()) moves.push_back(MoveToJson(m));
    auto pending = s.state.pending_connector_move();
    sessions.push_back({{"id", s.id},
                        {"seq", s.seq},
                        {"created_at", s.created_ms},
                        {"updated_at", s.updated_ms},
                        {"mode", s.mode},
                        {"engine", s.engine},
                        {"graph", GraphToJson(*s.graph)},
                        {"config", ConfigToJson(s.config)},
                        {"hubs", s.hubs},
                        {"family", s.family},
                        {"moves", std::move(moves)},
                        {"pending_v", pending ? Json(*pending) : Json(nullptr)},
                        {"end_reason", s.end_reason}});
  }
  return {{"version", 1}, {"next_seq", next_seq_}, {"sessions", std::move(sessions)}};
}

void SessionStore::Load(const Json& snapshot) {
  std::map<std::string, std::shared_ptr<Entry>> loaded;
  std::uint64_t next_seq = 0;
  try {
    next_seq = snapshot.at("next_seq").get<std::uint64_t>();
    for (const Json& j : snapshot.at("sessions")) {
      auto s = std::make_unique<Session>();
      s->id = j.at("id").get<std::string>();
      s->seq = j.at("seq").get<std::uint64_t>();
      s->created_ms = j.at("created_at").get<std::int64_t>();
      s->updated_ms = j.at("updated_at").get<std::int64_t>();
      s->mode = j.at("mode").get<std::string>();
      s->engine = j.at("engine").get<std::string>();
      s->graph = std::make_shared<const Graph>(GraphFromJson(j.at("graph")));
      s->config = ConfigFromJson(j.at("config"));
      s->hubs = j.at("hubs").get<VertexSet>();
      s->family = j.at("family");
      std::vector<Move> moves;
      for (const Json& m : j.at("moves")) moves.push_back(MoveFromJson(m));
      s->state = Replay(s->graph, s->config, moves);
      if (!j.at("pending_v").is_null()) {
        s->state = s->state.ApplyConnectorMove(j.at("pending_v").get<int>());
      }
      s->end_reason = j.at("end_reason").get<std::string>();
      if (s->engine == "solver") s->solver = std::make_shared<GameSolver>(s->graph, s->config.d);
      auto entry = std::make_shared<Entry>();
      entry->session = std::move(s);
      loaded.emplace(entry->session->id, std::move(entry));
    }
  } catch (const Json::exception& err) {
    throw FormatError(std::string("malformed session snapshot: ") + err.what());
  } catch (const IllegalMove& err) {
    throw FormatError(std::string("session snapshot does not replay: ") + err.what());
  } catch (const std::invalid_argument& err) {
    throw FormatError(std::string("malformed session snapshot: ") + err.what());
  }
  std::unique_lock lock(mu_);
  sessions_ = std::move(loaded);
  next_seq_ = next_seq;
}

void SessionStore::SaveFile(const std::filesystem::path& path) const {
  std::string text = Snapshot().dump(2) + "\n";
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

void SessionStore::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  Load(ParseJson(buf.str()));
}

}  // namespace sparsity
