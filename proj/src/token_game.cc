#include "scss/token_game.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>

namespace scss {
namespace {

// Packed state layout: [v0, f_1, ..., f_k] with f sorted ascending.

// Copies `state` into `out`, replacing forward entry `index` by `value` and
// restoring sorted order of the forward part.
void replace_forward(std::span<const VertexId> state, std::size_t index, VertexId value, std::vector<VertexId>& out) {
  out.assign(state.begin(), state.end());
  out[index] = value;
  std::size_t p = index;
  while (p > 1 && out[p - 1] > out[p]) {
    std::swap(out[p - 1], out[p]);
    --p;
  }
  while (p + 1 < out.size() && out[p + 1] < out[p]) {
    std::swap(out[p + 1], out[p]);
    ++p;
  }
}

template <typename Emit>
void for_each_move(std::span<const VertexId> state, const Digraph& graph, const ShortestPathTable& paths,
                   std::vector<VertexId>& scratch, Emit&& emit) {
  const VertexId v0 = state[0];
  for (EdgeId e : graph.in_edges(v0)) {
    const Edge& edge = graph.edge(e);
    if (edge.is_self_loop()) continue;
    scratch.assign(state.begin(), state.end());
    scratch[0] = edge.tail;
    emit(Move{MoveKind::kBackward, e, v0, edge.weight}, std::span<const VertexId>(scratch));
  }
  for (std::size_t i = 1; i < state.size(); ++i) {
    const VertexId v = state[i];
    if (i > 1 && state[i - 1] == v) continue;
    for (EdgeId e : graph.out_edges(v)) {
      const Edge& edge = graph.edge(e);
      if (edge.is_self_loop()) continue;
      replace_forward(state, i, edge.head, scratch);
      emit(Move{MoveKind::kForward, e, v, edge.weight}, std::span<const VertexId>(scratch));
    }
    if (v != v0 && paths.reachable(v, v0)) {
      replace_forward(state, i, v0, scratch);
      scratch[0] = v;
      emit(Move{MoveKind::kFlip, kNoEdge, v, paths.distance(v, v0)}, std::span<const VertexId>(scratch));
    }
  }
}

std::vector<VertexId> pack(const TokenState& state) {
  std::vector<VertexId> out;
  out.reserve(state.forward.size() + 1);
  out.push_back(state.backward);
  out.insert(out.end(), state.forward.begin(), state.forward.end());
  std::sort(out.begin() + 1, out.end());
  return out;
}

TokenState unpack(std::span<const VertexId> packed) {
  return TokenState{packed[0], std::vector<VertexId>(packed.begin() + 1, packed.end())};
}

// Interns fixed-width states into a flat arena; open addressing over ids.
class StateTable {
 public:
  explicit StateTable(std::size_t width) : width_(width), slots_(1024, 0) {}

  std::size_t size() const { return arena_.size() / width_; }

  std::span<const VertexId> get(std::uint32_t id) const {
    return std::span<const VertexId>(arena_).subspan(static_cast<std::size_t>(id) * width_, width_);
  }

  // (id, true) if the state was not present before.
  std::pair<std::uint32_t, bool> intern(std::span<const VertexId> state) {
    if ((size() + 1) * 2 > slots_.size()) grow();
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t slot = hash(state) & mask;; slot = (slot + 1) & mask) {
      const std::uint32_t entry = slots_[slot];
      if (entry == 0) {
        if (size() >= std::numeric_limits<std::uint32_t>::max() - 1) throw std::length_error("token game state space too large");
        const auto id = static_cast<std::uint32_t>(size());
        arena_.insert(arena_.end(), state.begin(), state.end());
        slots_[slot] = id + 1;
        return {id, true};
      }
      if (std::equal(state.begin(), state.end(), get(entry - 1).begin())) return {entry - 1, false};
    }
  }

 private:
  static std::size_t hash(std::span<const VertexId> state) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (VertexId v : state) {
      h ^= v;
      h *= 0xbf58476d1ce4e5b9ULL;
      h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
  }

  void grow() {
    std::vector<std::uint32_t> bigger(slots_.size() * 2, 0);
    const std::size_t mask = bigger.size() - 1;
    for (std::uint32_t id = 0; id < size(); ++id) {
      std::size_t slot = hash(get(id)) & mask;
      while (bigger[slot] != 0) slot = (slot + 1) & mask;
      bigger[slot] = id + 1;
    }
    slots_ = std::move(bigger);
  }

  std::size_t width_;
  std::vector<VertexId> arena_;
  std::vector<std::uint32_t> slots_;
};

// Predecessor move: kind in the top two bits, edge id (Backward/Forward) or
// flip position in the rest.
constexpr std::uint32_t kPayloadBits = 30;
constexpr std::uint32_t kPayloadMask = (1u << kPayloadBits) - 1;

std::uint32_t encode(const Move& move) {
  const std::uint32_t payload = move.kind == MoveKind::kFlip ? move.position : move.edge;
  return (static_cast<std::uint32_t>(move.kind) << kPayloadBits) | payload;
}

Move decode(std::uint32_t packed, std::span<const VertexId> from, const Digraph& graph, const ShortestPathTable& paths) {
  const auto kind = static_cast<MoveKind>(packed >> kPayloadBits);
  const std::uint32_t payload = packed & kPayloadMask;
  switch (kind) {
    case MoveKind::kBackward:
      return Move{kind, payload, from[0], graph.edge(payload).weight};
    case MoveKind::kForward:
      return Move{kind, payload, graph.edge(payload).tail, graph.edge(payload).weight};
    case MoveKind::kFlip:
      return Move{kind, kNoEdge, payload, paths.distance(payload, from[0])};
  }
  throw std::logic_error("corrupt move encoding");
}

void check_game_inputs(const Digraph& graph, VertexId s, VertexId t, int k, const ShortestPathTable& paths) {
  if (!graph.is_vertex(s) || !graph.is_vertex(t)) throw std::invalid_argument("terminal out of range");
  if (k < 1) throw std::invalid_argument("token game needs at least one forward token");
  if (paths.num_vertices() != graph.num_vertices()) throw std::invalid_argument("shortest-path table does not match graph");
  if (graph.num_edges() > kPayloadMask || graph.num_vertices() > kPayloadMask) {
    throw std::length_error("graph too large for the token game encoding");
  }
}

}  // namespace

TokenState TokenState::canonical(VertexId backward, std::vector<VertexId> forward) {
  std::sort(forward.begin(), forward.end());
  return TokenState{backward, std::move(forward)};
}

TokenState TokenState::uniform(VertexId v, int k) { return TokenState{v, std::vector<VertexId>(k, v)}; }

std::vector<std::pair<Move, TokenState>> neighbors(const TokenState& state, const Digraph& graph,
                                                   const ShortestPathTable& paths) {
  const std::vector<VertexId> packed = pack(state);
  std::vector<VertexId> scratch;
  std::vector<std::pair<Move, TokenState>> out;
  for_each_move(packed, graph, paths, scratch,
                [&](const Move& move, std::span<const VertexId> next) { out.emplace_back(move, unpack(next)); });
  return out;
}

std::size_t move_count_bound(const TokenState& state, const Digraph& graph) {
  std::size_t bound = graph.in_degree(state.backward) + state.forward.size();
  for (VertexId v : state.forward) bound += graph.out_degree(v);
  return bound;
}

TokenState apply_move(const TokenState& state, const Move& move, const Digraph& graph, const ShortestPathTable& paths) {
  auto fail = [](const std::string& why) -> TokenState { throw std::invalid_argument("illegal move: " + why); };
  TokenState next = state;
  auto take_forward = [&](VertexId from, VertexId to) {
    const auto it = std::find(next.forward.begin(), next.forward.end(), from);
    if (it == next.forward.end()) return false;
    *it = to;
    std::sort(next.forward.begin(), next.forward.end());
    return true;
  };
  switch (move.kind) {
    case MoveKind::kBackward: {
      if (move.edge >= graph.num_edges()) return fail("unknown edge");
      const Edge& e = graph.edge(move.edge);
      if (e.head != state.backward) return fail("backward edge does not enter the backward token's vertex");
      if (e.is_self_loop()) return fail("self-loop");
      if (move.cost != e.weight) return fail("backward cost mismatch");
      next.backward = e.tail;
      return next;
    }
    case MoveKind::kForward: {
      if (move.edge >= graph.num_edges()) return fail("unknown edge");
      const Edge& e = graph.edge(move.edge);
      if (e.tail != move.position) return fail("forward edge does not leave the acting position");
      if (e.is_self_loop()) return fail("self-loop");
      if (move.cost != e.weight) return fail("forward cost mismatch");
      if (!take_forward(e.tail, e.head)) return fail("no forward token at the acting position");
      return next;
    }
    case MoveKind::kFlip: {
      const VertexId v0 = state.backward;
      if (move.position == v0) return fail("flip with the backward token's own vertex");
      if (!paths.reachable(move.position, v0)) return fail("flip target unreachable");
      if (move.cost != paths.distance(move.position, v0)) return fail("flip cost mismatch");
      if (!take_forward(move.position, v0)) return fail("no forward token at the flip position");
      next.backward = move.position;
      return next;
    }
  }
  return fail("unknown move kind");
}

TokenState replay(const GamePlay& play, const Digraph& graph, const ShortestPathTable& paths) {
  TokenState at = TokenState::canonical(play.start.backward, play.start.forward);
  Weight total = 0;
  for (const Move& move : play.moves) {
    at = apply_move(at, move, graph, paths);
    total = checked_add(total, move.cost);
  }
  if (total != play.cost) {
    throw std::invalid_argument("play reports cost " + std::to_string(play.cost) + " but its moves sum to " +
                                std::to_string(total));
  }
  return at;
}

GameResult solve_token_game(const Digraph& graph, VertexId s, VertexId t, int k, const SearchOptions& options) {
  return solve_token_game(graph, s, t, k, all_pairs_shortest_paths(graph), options);
}

GameResult solve_token_game(const Digraph& graph, VertexId s, VertexId t, int k, const ShortestPathTable& paths,
                            const SearchOptions& options) {
  check_game_inputs(graph, s, t, k, paths);
  const std::size_t width = static_cast<std::size_t>(k) + 1;
  const std::vector<VertexId> start(width, s);
  const std::vector<VertexId> target(width, t);

  StateTable table(width);
  std::vector<Weight> dist;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> parent_move;
  std::vector<std::uint8_t> settled;

  using Entry = std::pair<Weight, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

  table.intern(start);
  dist.push_back(0);
  parent.push_back(0);
  parent_move.push_back(0);
  settled.push_back(0);
  queue.push({0, 0});

  GameResult result;
  std::vector<VertexId> current(width);
  std::vector<VertexId> scratch;
  std::size_t pops = 0;

  while (!queue.empty()) {
    const auto [d, id] = queue.top();
    queue.pop();
    if (settled[id] || d != dist[id]) continue;
    settled[id] = 1;
    ++result.stats.states_settled;

    if (options.deadline && (pops++ & 1023) == 0 && std::chrono::steady_clock::now() > *options.deadline) {
      result.status = GameStatus::kBudgetExceeded;
      result.stats.states_discovered = table.size();
      return result;
    }

    const auto state = table.get(id);
    current.assign(state.begin(), state.end());
    if (current == target) {
      GamePlay play;
      play.start = unpack(start);
      play.cost = d;
      for (std::uint32_t at = id; at != 0; at = parent[at]) {
        play.moves.push_back(decode(parent_move[at], table.get(parent[at]), graph, paths));
      }
      std::reverse(play.moves.begin(), play.moves.end());
      result.status = GameStatus::kSolved;
      result.play = std::move(play);
      result.stats.states_discovered = table.size();
      return result;
    }

    std::size_t generated = 0;
    for_each_move(current, graph, paths, scratch, [&](const Move& move, std::span<const VertexId> next) {
      ++generated;
      const Weight candidate = checked_add(d, move.cost);
      const auto [next_id, fresh] = table.intern(next);
      if (fresh) {
        dist.push_back(kInfiniteWeight);
        parent.push_back(0);
        parent_move.push_back(0);
        settled.push_back(0);
      }
      if (settled[next_id] || candidate >= dist[next_id]) return;
      dist[next_id] = candidate;
      parent[next_id] = id;
      parent_move[next_id] = encode(move);
      queue.push({candidate, next_id});
    });
    result.stats.moves_generated += generated;
    if (options.on_expand) options.on_expand(unpack(current), generated);
  }

  result.status = GameStatus::kInfeasible;
  result.stats.states_discovered = table.size();
  return result;
}

std::size_t canonical_state_bound(std::size_t n, int k) {
  // C(n + k - 1, k) built incrementally; each prefix product is an exact binomial.
  unsigned __int128 combos = 1;
  constexpr auto kMax = static_cast<unsigned __int128>(std::numeric_limits<std::size_t>::max());
  for (int i = 1; i <= k; ++i) {
    combos = combos * (n + static_cast<std::size_t>(i) - 1) / static_cast<unsigned>(i);
    if (combos > kMax) return std::numeric_limits<std::size_t>::max();
  }
  const unsigned __int128 total = combos * n;
  return total > kMax ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(total);
}

}  // namespace scss
