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

// The splitter game.
//
// Each round the connector picks a vertex v of the current arena and the
// splitter answers with a set W. The next arena is the radius-d ball around
// v, measured inside the current arena, minus W. The splitter wins once the
// arena has no vertices; the connector wins if the round limit runs out
// first. An edgeless but non-empty arena is not a splitter win.

#ifndef SPARSITY_SPLITTER_H_
#define SPARSITY_SPLITTER_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sparsity/graph.h"

namespace sparsity {

struct GameConfig {
  int d = 1;
  std::optional<int> ell;  // round limit; absent means |V|
  std::optional<int> m;    // splitter budget per round; absent means unbounded

  bool operator==(const GameConfig&) const = default;
};

// Throws std::invalid_argument unless d >= 0, ell >= 1 and m >= 1 (when set).
void ValidateConfig(const GameConfig& config);

struct Move {
  Vertex v = 0;
  VertexSet W;

  bool operator==(const Move&) const = default;
};

enum class Player { kConnector, kSplitter };
enum class Outcome { kOngoing, kSplitterWins, kConnectorWins };

std::string_view PlayerName(Player player);
std::string_view OutcomeName(Outcome outcome);  // "ongoing", "splitter", "connector"

// Stable rule codes carried by IllegalMove.
namespace rules {
inline constexpr std::string_view kGameOver = "game_over";
inline constexpr std::string_view kOutOfTurn = "out_of_turn";
inline constexpr std::string_view kConnectorOutsideArena = "connector_vertex_outside_arena";
inline constexpr std::string_view kSplitterOutsideArena = "splitter_set_outside_arena";
inline constexpr std::string_view kSplitterOverBudget = "splitter_set_over_budget";
}  // namespace rules

// Human-readable statement of a rule code.
std::string_view RuleText(std::string_view rule_code);

class IllegalMove : public std::invalid_argument {
 public:
  IllegalMove(Player offender, std::string_view rule_code, const std::string& detail);

  Player offender() const { return offender_; }
  const std::string& rule_code() const { return rule_code_; }
  const std::string& detail() const { return detail_; }

 private:
  Player offender_;
  std::string rule_code_;
  std::string detail_;
};

// Immutable game position. Keeps every past arena: arenas()[i] is the arena
// before round i+1.
class GameState {
 public:
  static GameState Start(std::shared_ptr<const Graph> graph, GameConfig config);
  static GameState Start(const Graph& graph, GameConfig config);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const GameConfig& config() const { return config_; }

  const VertexSet& arena() const { return arenas_.back(); }
  const std::vector<VertexSet>& arenas() const { return arenas_; }
  const std::vector<Move>& history() const { return history_; }
  std::optional<Vertex> pending_connector_move() const { return pending_; }

  int rounds_played() const { return static_cast<int>(history_.size()); }
  int round_cap() const;
  Outcome outcome() const { return outcome_; }
  bool over() const { return outcome_ != Outcome::kOngoing; }
  Player to_move() const { return pending_ ? Player::kSplitter : Player::kConnector; }
  bool InArena(Vertex v) const;

  // Radius-d ball around v inside the current arena.
  VertexSet BallInArena(Vertex v) const;

  GameState ApplyConnectorMove(Vertex v) const;
  GameState ApplySplitterMove(const VertexSet& w) const;
  GameState ApplyRound(Vertex v, const VertexSet& w) const;

 private:
  std::shared_ptr<const Graph> graph_;
  GameConfig config_;
  std::vector<VertexSet> arenas_;
  std::vector<Move> history_;
  std::optional<Vertex> pending_;
  Outcome outcome_ = Outcome::kOngoing;
};

// Replays moves from the start; throws IllegalMove on the first bad one.
GameState Replay(std::shared_ptr<const Graph> graph, const GameConfig& config,
                 const std::vector<Move>& moves);

using SplitterStrategy = std::function<VertexSet(const GameState&)>;
// Returning nullopt resigns.
using ConnectorStrategy = std::function<std::optional<Vertex>(const GameState&)>;

// Exact solver for m = 1 on at most kMaxSolverVertices vertices.
//
// Value(A) is the number of rounds the splitter needs to empty arena A under
// optimal play without a round limit: Value({}) = 0 and
// Value(A) = 1 + max_v min_{W} Value(ball_A(v) \ W) with |W| <= 1. The
// splitter wins the game with limit ell iff Value(V) <= ell.
class GameSolver {
 public:
  static constexpr int kMaxSolverVertices = 12;

  GameSolver(std::shared_ptr<const Graph> graph, int d);
  GameSolver(const Graph& graph, int d);

  int Value(const VertexSet& arena);
  int Value(std::uint32_t arena);

  // Connector move maximizing the value (smallest id on ties).
  Vertex BestConnectorMove(const VertexSet& arena);
  // Splitter reply minimizing the value; smallest id on ties, the empty set
  // only if it is strictly better than every single removal.
  VertexSet BestSplitterReply(const VertexSet& arena, Vertex v);

  int d() const { return d_; }
  const Graph& graph() const { return *graph_; }

  std::uint32_t Mask(const VertexSet& set) const;
  VertexSet Members(std::uint32_t mask) const;
  std::uint32_t BallMask(std::uint32_t arena, Vertex v) const;

 private:
  std::shared_ptr<const Graph> graph_;
  int d_;
  std::vector<std::int8_t> memo_;
};

struct StrategyEntry {
  Vertex connector_move = 0;                 // optimal connector move here
  std::map<Vertex, VertexSet> splitter_reply;  // optimal reply to each connector move
};

struct SolveResult {
  Outcome winner = Outcome::kSplitterWins;
  int value = 0;  // rounds the splitter needs from the full graph
  // Arenas reachable from V(g) under any connector play and optimal splitter
  // replies, keyed by bitmask of original ids.
  std::map<std::uint32_t, StrategyEntry> table;
};

// Throws std::invalid_argument when m != 1 or the graph is too large.
SolveResult SolveGame(const Graph& g, const GameConfig& config);

// Strategies.

// Answers v_i with {v_i} plus shortest paths (length <= d) from every earlier
// connector move v_j to v_i, each computed in the arena that v_j was played
// in, all intersected with the current arena. BFS parents are the smallest
// id one step closer.
VertexSet PathUnionReply(const GameState& state);
SplitterStrategy PathUnionSplitter();

// Smallest-id hub still in the arena, or resign.
ConnectorStrategy HubConnector(VertexSet hubs);

// Arena vertex with the largest ball in the arena (smallest id on ties).
ConnectorStrategy GreedyBallConnector();

SplitterStrategy SolverSplitter(std::shared_ptr<GameSolver> solver);
ConnectorStrategy SolverConnector(std::shared_ptr<GameSolver> solver);

// Plays the (ell * m, 1, d) game with a strategy for the (ell, m, d) game:
// each set the wrapped strategy proposes is handed out one vertex per round,
// ascending, dropping vertices that already left the arena; connector moves
// made meanwhile are not shown to the wrapped strategy. The wrapper is a pure
// function of the real history, which it replays against a virtual game
// with `inner_config`.
SplitterStrategy TransformOneMove(SplitterStrategy inner, GameConfig inner_config);

struct StrategyTrace {
  GameConfig config;
  std::vector<Move> moves;
  Outcome winner = Outcome::kOngoing;
  std::vector<int> arena_sizes;  // before round 1, then after every round
  std::string end_reason;        // arena_empty, round_limit, connector_resigned,
                                 // connector_forfeit, splitter_forfeit

  bool operator==(const StrategyTrace&) const = default;
};

// Alternates the strategies through the rules engine until a win condition.
// An illegal move (or IllegalMove thrown by a strategy) forfeits the game.
StrategyTrace PlayMatch(std::shared_ptr<const Graph> graph, const GameConfig& config,
                        const SplitterStrategy& splitter, const ConnectorStrategy& connector);
// Same with config.ell lowered to round_cap (>= 1).
StrategyTrace PlayMatch(std::shared_ptr<const Graph> graph, const GameConfig& config,
                        const SplitterStrategy& splitter, const ConnectorStrategy& connector,
                        int round_cap);

// Number of the round the game ended in for the splitter's win; a resignation
// in round r counts as r - 1 rounds survived. For a connector win: rounds played.
int GameLength(const StrategyTrace& trace);

// Replays the trace and checks moves, sizes, and winner.
bool TraceReplays(const Graph& g, const StrategyTrace& trace);

// Does `splitter` win against every possible connector? Explores all
// connector moves at every position (exponential; meant for small graphs).
bool SplitterWinsAgainstAllConnectors(std::shared_ptr<const Graph> graph,
                                      const GameConfig& config,
                                      const SplitterStrategy& splitter);

// Fewest rounds a positional connector (one whose move depends only on the
// arena) survives over all splitter plays with |W| <= 1, no round limit.
// Resigning in round r counts as r - 1.
int MinConnectorSurvival(std::shared_ptr<const Graph> graph, int d,
                         const ConnectorStrategy& connector);

}  // namespace sparsity

#endif  // SPARSITY_SPLITTER_H_
