#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "scss/digraph.h"
#include "scss/shortest_paths.h"

namespace scss {

// Position of the backward token and the multiset of forward-token positions.
// Forward tokens are interchangeable, so the multiset is kept sorted.
struct TokenState {
  VertexId backward = 0;
  std::vector<VertexId> forward;

  static TokenState canonical(VertexId backward, std::vector<VertexId> forward);
  // All k+1 tokens on `v`.
  static TokenState uniform(VertexId v, int k);

  std::size_t num_forward() const { return forward.size(); }
  friend bool operator==(const TokenState&, const TokenState&) = default;
};

enum class MoveKind : std::uint8_t { kBackward, kForward, kFlip };

// Backward: backward token crosses `edge` = (w, v0) against its direction.
// Forward:  a forward token at `position` crosses `edge` = (position, x).
// Flip:     a forward token at `position` swaps with the backward token, paying
//           the shortest position~>v0 distance.
struct Move {
  MoveKind kind = MoveKind::kForward;
  EdgeId edge = kNoEdge;
  VertexId position = 0;
  Weight cost = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

// All moves out of `state`, each with its canonical successor. Self-loop
// edges and flips with position == v0 are omitted; forward tokens sharing a
// vertex contribute one move per out-edge, not one per token.
std::vector<std::pair<Move, TokenState>> neighbors(const TokenState& state, const Digraph& graph,
                                                   const ShortestPathTable& paths);

// d-(v0) + sum_i d+(v_i) + k: the per-state move count with labeled tokens.
std::size_t move_count_bound(const TokenState& state, const Digraph& graph);

// Throws std::invalid_argument if `move` is not legal from `state` or its
// cost does not match the move definition.
TokenState apply_move(const TokenState& state, const Move& move, const Digraph& graph,
                      const ShortestPathTable& paths);

struct GamePlay {
  TokenState start;
  std::vector<Move> moves;
  Weight cost = 0;
};

// Replays every move from play.start, checking legality and the cost total.
TokenState replay(const GamePlay& play, const Digraph& graph, const ShortestPathTable& paths);

struct SearchStats {
  std::size_t states_discovered = 0;
  std::size_t states_settled = 0;
  std::size_t moves_generated = 0;
};

struct SearchOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Called once per settled state with the number of moves generated from it.
  std::function<void(const TokenState&, std::size_t)> on_expand;
};

enum class GameStatus { kSolved, kInfeasible, kBudgetExceeded };

struct GameResult {
  GameStatus status = GameStatus::kInfeasible;
  std::optional<GamePlay> play;
  SearchStats stats;
};

// Minimum-cost play from (s, s^k) to (t, t^k) by label-setting search over
// the implicit game graph; states are interned as they are discovered.
GameResult solve_token_game(const Digraph& graph, VertexId s, VertexId t, int k,
                            const ShortestPathTable& paths, const SearchOptions& options = {});
GameResult solve_token_game(const Digraph& graph, VertexId s, VertexId t, int k,
                            const SearchOptions& options = {});

// n * C(n + k - 1, k), saturating at SIZE_MAX.
std::size_t canonical_state_bound(std::size_t n, int k);

}  // namespace scss
