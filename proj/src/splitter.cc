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

#include "sparsity/splitter.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>
#include <utility>

namespace sparsity {
namespace {

std::string Str(long long v) { return std::to_string(v); }

std::vector<char> Membership(int n, const VertexSet& set) {
  std::vector<char> in(n, 0);
  for (Vertex v : set) in[v] = 1;
  return in;
}

}  // namespace

void ValidateConfig(const GameConfig& config) {
  if (config.d < 0) throw std::invalid_argument("d must be non-negative");
  if (config.ell && *config.ell < 1) throw std::invalid_argument("ell must be at least 1");
  if (config.m && *config.m < 1) throw std::invalid_argument("m must be at least 1");
}

std::string_view PlayerName(Player player) {
  return player == Player::kConnector ? "connector" : "splitter";
}

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kOngoing: return "ongoing";
    case Outcome::kSplitterWins: return "splitter";
    case Outcome::kConnectorWins: return "connector";
  }
  return "unknown";
}

std::string_view RuleText(std::string_view rule_code) {
  if (rule_code == rules::kGameOver) return "no moves are accepted once the game has ended";
  if (rule_code == rules::kOutOfTurn) {
    return "each round the connector moves first and the splitter answers";
  }
  if (rule_code == rules::kConnectorOutsideArena) {
    return "connector must pick a vertex of the current arena";
  }
  if (rule_code == rules::kSplitterOutsideArena) {
    return "splitter may only remove vertices of the current arena";
  }
  if (rule_code == rules::kSplitterOverBudget) {
    return "splitter may remove at most m vertices per round";
  }
  return "unknown rule";
}

IllegalMove::IllegalMove(Player offender, std::string_view rule_code, const std::string& detail)
    : std::invalid_argument(std::string(PlayerName(offender)) + ": " +
                            std::string(RuleText(rule_code)) + " (" + detail + ")"),
      offender_(offender),
      rule_code_(rule_code),
      detail_(detail) {}

GameState GameState::Start(std::shared_ptr<const Graph> graph, GameConfig config) {
  if (!graph) throw std::invalid_argument("null graph");
  ValidateConfig(config);
  GameState state;
  state.graph_ = std::move(graph);
  state.config_ = config;
  VertexSet all(state.graph_->num_vertices());
  for (int v = 0; v < state.graph_->num_vertices(); ++v) all[v] = v;
  state.arenas_.push_back(std::move(all));
  if (state.arena().empty()) state.outcome_ = Outcome::kSplitterWins;
  return state;
}

GameState GameState::Start(const Graph& graph, GameConfig config) {
  return Start(std::make_shared<const Graph>(graph), config);
}

int GameState::round_cap() const { return config_.ell.value_or(graph_->num_vertices()); }

bool GameState::InArena(Vertex v) const {
  return std::binary_search(arena().begin(), arena().end(), v);
}

VertexSet GameState::BallInArena(Vertex v) const {
  if (!InArena(v)) throw std::out_of_range("vertex " + Str(v) + " is not in the arena");
  std::vector<char> allowed = Membership(graph_->num_vertices(), arena());
  std::vector<int> dist = BfsDistancesWithin(*graph_, v, allowed, config_.d);
  VertexSet ball;
  for (Vertex u : arena()) {
    if (dist[u] != kUnreachable) ball.push_back(u);
  }
  return ball;
}

GameState GameState::ApplyConnectorMove(Vertex v) const {
  if (over()) throw IllegalMove(Player::kConnector, rules::kGameOver, "game already decided");
  if (pending_) {
    throw IllegalMove(Player::kConnector, rules::kOutOfTurn, "it is the splitter's turn");
  }
  if (!InArena(v)) {
    throw IllegalMove(Player::kConnector, rules::kConnectorOutsideArena,
                      "vertex " + Str(v) + " is not in the arena");
  }
  GameState next = *this;
  next.pending_ = v;
  return next;
}

GameState GameState::ApplySplitterMove(const VertexSet& w) const {
  if (over()) throw IllegalMove(Player::kSplitter, rules::kGameOver, "game already decided");
  if (!pending_) {
    throw IllegalMove(Player::kSplitter, rules::kOutOfTurn, "the connector has not moved yet");
  }
  VertexSet removed = Normalized(w);
  for (Vertex x : removed) {
    if (!InArena(x)) {
      throw IllegalMove(Player::kSplitter, rules::kSplitterOutsideArena,
                        "vertex " + Str(x) + " is not in the arena");
    }
  }
  if (config_.m && static_cast<int>(removed.size()) > *config_.m) {
    throw IllegalMove(Player::kSplitter, rules::kSplitterOverBudget,
                      Str(removed.size()) + " vertices, budget " + Str(*config_.m));
  }
  VertexSet ball = BallInArena(*pending_);
  VertexSet next_arena;
  std::set_difference(ball.begin(), ball.end(), removed.begin(), removed.end(),
                      std::back_inserter(next_arena));
  GameState next = *this;
  next.history_.push_back({*pending_, std::move(removed)});
  next.pending_.reset();
  next.arenas_.push_back(std::move(next_arena));
  if (next.arena().empty()) {
    next.outcome_ = Outcome::kSplitterWins;
  } else if (next.rounds_played() >= next.round_cap()) {
    next.outcome_ = Outcome::kConnectorWins;
  }
  return next;
}

GameState GameState::ApplyRound(Vertex v, const VertexSet& w) const {
  return ApplyConnectorMove(v).ApplySplitterMove(w);
}

GameState Replay(std::shared_ptr<const Graph> graph, const GameConfig& config,
                 const std::vector<Move>& moves) {
  GameState state = GameState::Start(std::move(graph), config);
  for (const Move& move : moves) state = state.ApplyRound(move.v, move.W);
  return state;
}

// Solver.

GameSolver::GameSolver(std::shared_ptr<const Graph> graph, int d)
    : graph_(std::move(graph)), d_(d) {
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  if (graph_->num_vertices() > kMaxSolverVertices) {
    throw std::invalid_argument("exact solver supports at most " + Str(kMaxSolverVertices) +
                                " vertices (got " + Str(graph_->num_vertices()) + ")");
  }
  memo_.assign(std::size_t{1} << graph_->num_vertices(), -1);
}

GameSolver::GameSolver(const Graph& graph, int d)
    : GameSolver(std::make_shared<const Graph>(graph), d) {}

std::uint32_t GameSolver::Mask(const VertexSet& set) const {
  std::uint32_t mask = 0;
  for (Vertex v : set) {
    if (!graph_->contains(v)) throw std::out_of_range("vertex " + Str(v) + " out of range");
    mask |= std::uint32_t{1} << v;
  }
  return mask;
}

VertexSet GameSolver::Members(std::uint32_t mask) const {
  VertexSet out;
  for (int v = 0; v < graph_->num_vertices(); ++v) {
    if (mask >> v & 1) out.push_back(v);
  }
  return out;
}

std::uint32_t GameSolver::BallMask(std::uint32_t arena, Vertex v) const {
  std::uint32_t ball = std::uint32_t{1} << v;
  std::uint32_t frontier = ball;
  for (int step = 0; step < d_ && frontier; ++step) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) {
      for (Vertex w : graph_->neighbors(std::countr_zero(f))) next |= std::uint32_t{1} << w;
    }
    next &= arena & ~ball;
    ball |= next;
    frontier = next;
  }
  return ball;
}

int GameSolver::Value(std::uint32_t arena) {
  if (arena == 0) return 0;
  if (memo_[arena] >= 0) return memo_[arena];
  int worst = 0;
  for (std::uint32_t a = arena; a; a &= a - 1) {
    Vertex v = std::countr_zero(a);
    std::uint32_t ball = BallMask(arena, v);
    // W = {} only makes progress when the ball is smaller than the arena.
    int best = ball == arena ? 1 << 20 : Value(ball);
    for (std::uint32_t b = ball; b; b &= b - 1) {
      best = std::min(best, Value(ball & ~(b & -b)));
    }
    worst = std::max(worst, best);
  }
  memo_[arena] = static_cast<std::int8_t>(1 + worst);
  return memo_[arena];
}

int GameSolver::Value(const VertexSet& arena) { return Value(Mask(arena)); }

Vertex GameSolver::BestConnectorMove(const VertexSet& arena) {
  std::uint32_t mask = Mask(arena);
  if (!mask) throw std::invalid_argument("empty arena");
  Vertex best_v = -1;
  int best = -1;
  for (std::uint32_t a = mask; a; a &= a - 1) {
    Vertex v = std::countr_zero(a);
    std::uint32_t ball = BallMask(mask, v);
    int reply = ball == mask ? 1 << 20 : Value(ball);
    for (std::uint32_t b = ball; b; b &= b - 1) reply = std::min(reply, Value(ball & ~(b & -b)));
    if (reply > best) {
      best = reply;
      best_v = v;
    }
  }
  return best_v;
}

VertexSet GameSolver::BestSplitterReply(const VertexSet& arena, Vertex v) {
  std::uint32_t mask = Mask(arena);
  if (!(mask >> v & 1)) throw std::invalid_argument("connector move outside arena");
  std::uint32_t ball = BallMask(mask, v);
  Vertex best_w = -1;
  int best = 1 << 20;
  for (std::uint32_t b = ball; b; b &= b - 1) {
    int value = Value(ball & ~(b & -b));
    if (value < best) {
      best = value;
      best_w = std::countr_zero(b);
    }
  }
  if (ball != mask && Value(ball) < best) return {};
  return {best_w};
}

SolveResult SolveGame(const Graph& g, const GameConfig& config) {
  ValidateConfig(config);
  if (config.m.value_or(0) != 1) {
    throw std::invalid_argument("the exact solver only handles m = 1");
  }
  auto solver = std::make_shared<GameSolver>(g, config.d);
  SolveResult result;
  std::uint32_t all = g.num_vertices() == 0 ? 0 : (std::uint32_t{1} << g.num_vertices()) - 1;
  result.value = solver->Value(all);
  int cap = config.ell.value_or(g.num_vertices());
  result.winner = result.value <= cap ? Outcome::kSplitterWins : Outcome::kConnectorWins;
  std::deque<std::uint32_t> queue;
  if (all) queue.push_back(all);
  while (!queue.empty()) {
    std::uint32_t arena = queue.front();
    queue.pop_front();
    if (result.table.count(arena)) continue;
    VertexSet members = solver->Members(arena);
    StrategyEntry entry;
    entry.connector_move = solver->BestConnectorMove(members);
    for (Vertex v : members) {
      VertexSet reply = solver->BestSplitterReply(members, v);
      std::uint32_t next = solver->BallMask(arena, v) & ~solver->Mask(reply);
      if (next && !result.table.count(next)) queue.push_back(next);
      entry.splitter_reply[v] = std::move(reply);
    }
    result.table.emplace(arena, std::move(entry));
  }
  return result;
}

// Strategies.

VertexSet PathUnionReply(const GameState& state) {
  if (!state.pending_connector_move()) {
    throw IllegalMove(Player::kSplitter, rules::kOutOfTurn, "the connector has not moved yet");
  }
  const Graph& g = state.graph();
  Vertex vi = *state.pending_connector_move();
  const auto& history = state.history();
  const auto& arenas = state.arenas();
  VertexSet w{vi};
  for (std::size_t j = 0; j < history.size(); ++j) {
    // history[j].v was played in arenas[j]; the path lives there.
    const VertexSet& arena = arenas[j];
    std::vector<char> allowed = Membership(g.num_vertices(), arena);
    std::vector<int> dist = BfsDistancesWithin(g, history[j].v, allowed, state.config().d);
    if (dist[vi] == kUnreachable) {
      throw std::logic_error("path-union: no short path from " + Str(history[j].v) + " to " +
                             Str(vi) + " in its historical arena");
    }
    for (Vertex x = vi; x != history[j].v;) {
      w.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (allowed[y] && dist[y] == dist[x] - 1) {
          x = y;
          break;
        }
      }
    }
    w.push_back(history[j].v);
  }
  w = Normalized(std::move(w));
  VertexSet out;
  for (Vertex x : w) {
    if (state.InArena(x)) out.push_back(x);
  }
  return out;
}

SplitterStrategy PathUnionSplitter() { return PathUnionReply; }

ConnectorStrategy HubConnector(VertexSet hubs) {
  hubs = Normalized(std::move(hubs));
  return [hubs](const GameState& state) -> std::optional<Vertex> {
    for (Vertex h : hubs) {
      if (state.InArena(h)) return h;
    }
    return std::nullopt;
  };
}

ConnectorStrategy GreedyBallConnector() {
  return [](const GameState& state) -> std::optional<Vertex> {
    Vertex best = -1;
    std::size_t best_size = 0;
    for (Vertex v : state.arena()) {
      std::size_t size = state.BallInArena(v).size();
      if (best < 0 || size > best_size) {
        best = v;
        best_size = size;
      }
    }
    if (best < 0) return std::nullopt;
    return best;
  };
}

SplitterStrategy SolverSplitter(std::shared_ptr<GameSolver> solver) {
  return [solver](const GameState& state) {
    return solver->BestSplitterReply(state.arena(), *state.pending_connector_move());
  };
}

ConnectorStrategy SolverConnector(std::shared_ptr<GameSolver> solver) {
  return [solver](const GameState& state) -> std::optional<Vertex> {
    if (state.arena().empty()) return std::nullopt;
    return solver->BestConnectorMove(state.arena());
  };
}

SplitterStrategy TransformOneMove(SplitterStrategy inner, GameConfig inner_config) {
  ValidateConfig(inner_config);
  return [inner = std::move(inner), inner_config](const GameState& real) -> VertexSet {
    if (!real.pending_connector_move()) {
      throw IllegalMove(Player::kSplitter, rules::kOutOfTurn, "the connector has not moved yet");
    }
    GameState virt = GameState::Start(real.graph_ptr(), inner_config);
    std::deque<Vertex> buffer;
    int rounds = real.rounds_played();
    for (int r = 0; r <= rounds; ++r) {
      Vertex v = r < rounds ? real.history()[r].v : *real.pending_connector_move();
      const VertexSet& arena = real.arenas()[r];
      auto in_arena = [&](Vertex x) { return std::binary_search(arena.begin(), arena.end(), x); };
      while (!buffer.empty() && !in_arena(buffer.front())) buffer.pop_front();
      VertexSet emit;
      if (buffer.empty()) {
        // A fresh round of the wrapped game starts with this connector move.
        virt = virt.ApplyConnectorMove(v);
        VertexSet w = inner(virt);
        virt = virt.ApplySplitterMove(w);
        for (Vertex x : Normalized(w)) {
          if (in_arena(x)) buffer.push_back(x);
        }
      }
      if (!buffer.empty()) {
        emit.push_back(buffer.front());
        buffer.pop_front();
      }
      if (r == rounds) return emit;
    }
    return {};
  };
}

StrategyTrace PlayMatch(std::shared_ptr<const Graph> graph, const GameConfig& config,
                        const SplitterStrategy& splitter, const ConnectorStrategy& connector) {
  GameState state = GameState::Start(graph, config);
  StrategyTrace trace;
  trace.config = config;
  trace.arena_sizes.push_back(static_cast<int>(state.arena().size()));
  auto finish = [&](Outcome winner, std::string reason) {
    trace.winner = winner;
    trace.end_reason = std::move(reason);
    return trace;
  };
  while (!state.over()) {
    std::optional<Vertex> v;
    try {
      v = connector(state);
      if (!v) return finish(Outcome::kSplitterWins, "connector_resigned");
      state = state.ApplyConnectorMove(*v);
    } catch (const IllegalMove&) {
      return finish(Outcome::kSplitterWins, "connector_forfeit");
    }
    try {
      VertexSet w = splitter(state);
      state = state.ApplySplitterMove(w);
    } catch (const IllegalMove&) {
      return finish(Outcome::kConnectorWins, "splitter_forfeit");
    }
    trace.moves.push_back(state.history().back());
    trace.arena_sizes.push_back(static_cast<int>(state.arena().size()));
  }
  return finish(state.outcome(), state.outcome() == Outcome::kSplitterWins ? "arena_empty"
                                                                           : "round_limit");
}

StrategyTrace PlayMatch(std::shared_ptr<const Graph> graph, const GameConfig& config,
                        const SplitterStrategy& splitter, const ConnectorStrategy& connector,
                        int round_cap) {
  if (round_cap < 1) throw std::invalid_argument("round cap must be at least 1");
  GameConfig capped = config;
  capped.ell = std::min(round_cap, config.ell.value_or(round_cap));
  return PlayMatch(std::move(graph), capped, splitter, connector);
}

int GameLength(const StrategyTrace& trace) {
  // Only completed rounds are recorded, so a resignation inside round r
  // leaves r - 1 moves.
  return static_cast<int>(trace.moves.size());
}

bool TraceReplays(const Graph& g, const StrategyTrace& trace) {
  try {
    GameState state = GameState::Start(g, trace.config);
    std::vector<int> sizes{static_cast<int>(state.arena().size())};
    for (const Move& move : trace.moves) {
      state = state.ApplyRound(move.v, move.W);
      sizes.push_back(static_cast<int>(state.arena().size()));
    }
    if (sizes != trace.arena_sizes) return false;
    if (trace.end_reason == "arena_empty" || trace.end_reason == "round_limit") {
      return state.outcome() == trace.winner;
    }
    if (state.over()) return false;
    if (trace.end_reason == "connector_resigned" || trace.end_reason == "connector_forfeit") {
      return trace.winner == Outcome::kSplitterWins;
    }
    if (trace.end_reason == "splitter_forfeit") return trace.winner == Outcome::kConnectorWins;
    return false;
  } catch (const std::exception&) {
    return false;
  }
}

bool SplitterWinsAgainstAllConnectors(std::shared_ptr<const Graph> graph,
                                      const GameConfig& config,
                                      const SplitterStrategy& splitter) {
  auto explore = [&](auto&& self, const GameState& state) -> bool {
    if (state.over()) return state.outcome() == Outcome::kSplitterWins;
    for (Vertex v : state.arena()) {
      GameState next = state.ApplyConnectorMove(v);
      try {
        next = next.ApplySplitterMove(splitter(next));
      } catch (const IllegalMove&) {
        return false;
      }
      if (!self(self, next)) return false;
    }
    return true;
  };
  return explore(explore, GameState::Start(std::move(graph), config));
}

int MinConnectorSurvival(std::shared_ptr<const Graph> graph, int d,
                         const ConnectorStrategy& connector) {
  if (graph->num_vertices() > 64) throw std::invalid_argument("at most 64 vertices");
  // Every splitter line shrinks the arena, so n + 1 rounds never bind.
  GameConfig config{d, graph->num_vertices() + 1, 1};
  std::unordered_map<std::uint64_t, int> memo;
  auto key = [](const VertexSet& arena) {
    std::uint64_t k = 0;
    for (Vertex v : arena) k |= std::uint64_t{1} << v;
    return k;
  };
  // Rounds still to be survived from this position. The splitter may pass
  // (W = {}) only when that still shrinks the arena, so every line ends.
  auto survive = [&](auto&& self, const GameState& state) -> int {
    if (state.arena().empty()) return 0;
    std::uint64_t k = key(state.arena());
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    std::optional<Vertex> v = connector(state);
    int best = 0;
    if (v) {
      GameState after = state.ApplyConnectorMove(*v);
      VertexSet ball = after.BallInArena(*v);
      best = 1 << 20;
      if (ball.size() < state.arena().size()) {
        best = 1 + self(self, after.ApplySplitterMove({}));
      }
      for (Vertex w : ball) best = std::min(best, 1 + self(self, after.ApplySplitterMove({w})));
    }
    memo[k] = best;
    return best;
  };
  return survive(survive, GameState::Start(std::move(graph), config));
}

}  // namespace sparsity
