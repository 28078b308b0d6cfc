#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>

#include "scss/oracle.h"
#include "scss/random_instance.h"
#include "scss/token_game.h"
#include "testing/reference.h"

namespace scss {
namespace {

Digraph two_cycle(Weight a, Weight b) {
  Digraph g(2);
  g.add_edge(0, 1, a);
  g.add_edge(1, 0, b);
  return g;
}

TEST(Neighbors, TwoCycleFromStart) {
  const Digraph g = two_cycle(2, 3);
  const ShortestPathTable paths = all_pairs_shortest_paths(g);
  const auto moves = neighbors(TokenState::uniform(0, 1), g, paths);
  ASSERT_EQ(moves.size(), 2u);
  EXPECT_EQ(moves[0].first.kind, MoveKind::kBackward);
  EXPECT_EQ(moves[0].first.cost, 3u);
  EXPECT_EQ(moves[0].second, TokenState::canonical(1, {0}));
  EXPECT_EQ(moves[1].first.kind, MoveKind::kForward);
  EXPECT_EQ(moves[1].first.cost, 2u);
  EXPECT_EQ(moves[1].second, TokenState::canonical(0, {1}));
}

TEST(Neighbors, FlipPaysShortestDistance) {
  Digraph g(3);
  g.add_edge(2, 1, 4);
  g.add_edge(1, 0, 1);
  g.add_edge(2, 0, 9);
  const ShortestPathTable paths = all_pairs_shortest_paths(g);
  const auto moves = neighbors(TokenState::canonical(0, {2}), g, paths);
  const auto flip = std::find_if(moves.begin(), moves.end(), [](const auto& m) { return m.first.kind == MoveKind::kFlip; });
  ASSERT_NE(flip, moves.end());
  EXPECT_EQ(flip->first.cost, 5u);
  EXPECT_EQ(flip->second, TokenState::canonical(2, {0}));
}

TEST(Neighbors, UnreachableFlipIsSkipped) {
  Digraph g(3);
  g.add_edge(0, 2, 1);
  const ShortestPathTable paths = all_pairs_shortest_paths(g);
  for (const auto& [move, next] : neighbors(TokenState::canonical(0, {2}), g, paths)) {
    EXPECT_NE(move.kind, MoveKind::kFlip);
  }
}

TEST(Neighbors, CoincidingTokensShareForwardMoves) {
  Digraph g(3);
  g.add_edge(2, 1, 1);
  const ShortestPathTable paths = all_pairs_shortest_paths(g);
  const auto moves = neighbors(TokenState::canonical(0, {2, 2}), g, paths);
  const auto forward = std::count_if(moves.begin(), moves.end(),
                                     [](const auto& m) { return m.first.kind == MoveKind::kForward; });
  EXPECT_EQ(forward, 1);
  EXPECT_EQ(moves.front().second, TokenState::canonical(0, {1, 2}));
}

TEST(Neighbors, SelfLoopsIgnored) {
  Digraph g(2);
  g.add_edge(0, 0, 1);
  g.add_edge(0, 1, 1);
  const ShortestPathTable paths = all_pairs_shortest_paths(g);
  EXPECT_EQ(neighbors(TokenState::uniform(0, 1), g, paths).size(), 1u);
}

// Multiset difference size between two sorted forward vectors.
std::size_t changed_forward(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<VertexId> only;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only));
  return only.size();
}

TEST(Neighbors, BoundsAndLocalityOnRandomStates) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Instance inst = random_instance({6, 14, 5, 1, 1, seed, seed % 3 == 0});
    const ShortestPathTable paths = all_pairs_shortest_paths(inst.graph);
    SeededRng rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
      const int k = 1 + static_cast<int>(rng.below(3));
      std::vector<VertexId> fwd;
      for (int i = 0; i < k; ++i) fwd.push_back(static_cast<VertexId>(rng.below(6)));
      const TokenState state = TokenState::canonical(static_cast<VertexId>(rng.below(6)), fwd);
      const auto moves = neighbors(state, inst.graph, paths);
      EXPECT_LE(moves.size(), move_count_bound(state, inst.graph));
      for (const auto& [move, next] : moves) {
        EXPECT_TRUE(std::is_sorted(next.forward.begin(), next.forward.end()));
        EXPECT_EQ(next.num_forward(), state.num_forward());
        EXPECT_EQ(apply_move(state, move, inst.graph, paths), next);
        const std::size_t forward_changes = changed_forward(state.forward, next.forward);
        const bool backward_changed = next.backward != state.backward;
        switch (move.kind) {
          case MoveKind::kBackward:
            EXPECT_TRUE(backward_changed);
            EXPECT_EQ(forward_changes, 0u);
            break;
          case MoveKind::kForward:
            EXPECT_FALSE(backward_changed);
            EXPECT_EQ(forward_changes, 1u);
            break;
          case MoveKind::kFlip:
            EXPECT_TRUE(backward_changed);
            EXPECT_LE(forward_changes, 1u);
            break;
        }
      }
    }
  }
}

TEST(ApplyMove, RejectsIllegalMoves) {
  const Digraph g = two_cycle(2, 3);
  const ShortestPathTable paths = all_pairs_shortest_paths(g);
  const TokenState start = TokenState::uniform(0, 1);
  EXPECT_THROW(apply_move(start, Move{MoveKind::kForward, 1, 1, 3}, g, paths), std::invalid_argument);
  EXPECT_THROW(apply_move(start, Move{MoveKind::kForward, 0, 0, 7}, g, paths), std::invalid_argument);
  EXPECT_THROW(apply_move(start, Move{MoveKind::kBackward, 0, 0, 2}, g, paths), std::invalid_argument);
  EXPECT_THROW(apply_move(start, Move{MoveKind::kFlip, kNoEdge, 0, 0}, g, paths), std::invalid_argument);
  EXPECT_THROW(apply_move(start, Move{MoveKind::kForward, 9, 0, 2}, g, paths), std::invalid_argument);
}

TEST(SolveTokenGame, TwoCycle) {
  const GameResult r = solve_token_game(two_cycle(2, 3), 0, 1, 1);
  ASSERT_EQ(r.status, GameStatus::kSolved);
  EXPECT_EQ(r.play->cost, 5u);
  EXPECT_EQ(r.play->moves.size(), 2u);
}

TEST(SolveTokenGame, UnreachableTargetIsInfeasible) {
  Digraph g(3);
  g.add_edge(1, 0, 1);
  g.add_edge(0, 2, 1);
  EXPECT_EQ(solve_token_game(g, 0, 1, 2).status, GameStatus::kInfeasible);
}

TEST(SolveTokenGame, ExpiredDeadline) {
  SearchOptions options;
  options.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  EXPECT_EQ(solve_token_game(two_cycle(1, 1), 0, 1, 1, options).status, GameStatus::kBudgetExceeded);
}

TEST(SolveTokenGame, InvalidArguments) {
  EXPECT_THROW(solve_token_game(two_cycle(1, 1), 0, 5, 1), std::invalid_argument);
  EXPECT_THROW(solve_token_game(two_cycle(1, 1), 0, 1, 0), std::invalid_argument);
}

TEST(SolveTokenGame, MatchesOracleOnStronglyConnected) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = random_instance({5, 9, 10, 2, 1, seed, true});
    const GameResult r = solve_token_game(inst.graph, 0, 1, 2);
    ASSERT_EQ(r.status, GameStatus::kSolved);
    EXPECT_EQ(r.play->cost, oracle_opt(inst).cost) << "seed " << seed;
  }
}

TEST(SolveTokenGame, MatchesLabeledGame) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    const Instance inst = random_instance({5, 9, 6, k, 1, seed, seed % 2 == 0});
    const GameResult r = solve_token_game(inst.graph, 0, 1, k);
    const auto labeled = testing::labeled_token_game(inst.graph, 0, 1, k);
    ASSERT_EQ(r.status == GameStatus::kSolved, labeled.has_value()) << "seed " << seed;
    if (labeled) {
      EXPECT_EQ(r.play->cost, *labeled) << "seed " << seed;
    }
  }
}

TEST(SolveTokenGame, ReplayReachesEndStateAtReportedCost) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = random_instance({6, 12, 10, 2, 1, seed, true});
    const ShortestPathTable paths = all_pairs_shortest_paths(inst.graph);
    const GameResult r = solve_token_game(inst.graph, 0, 1, 2, paths);
    ASSERT_EQ(r.status, GameStatus::kSolved);
    EXPECT_EQ(replay(*r.play, inst.graph, paths), TokenState::uniform(1, 2));
    GamePlay tampered = *r.play;
    tampered.cost += 1;
    EXPECT_THROW(replay(tampered, inst.graph, paths), std::invalid_argument);
  }
}

TEST(SolveTokenGame, VisitedStatesWithinBounds) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    const Instance inst = random_instance({6, 14, 10, k, 1, seed, true});
    std::size_t expansions = 0;
    SearchOptions options;
    options.on_expand = [&](const TokenState& state, std::size_t generated) {
      ++expansions;
      EXPECT_LE(generated, move_count_bound(state, inst.graph));
    };
    const GameResult r = solve_token_game(inst.graph, 0, 1, k, options);
    EXPECT_EQ(expansions, r.stats.states_settled - 1);
    const std::size_t n = inst.graph.num_vertices();
    std::size_t power = 1;
    for (int i = 0; i <= k; ++i) power *= n;
    EXPECT_LE(r.stats.states_discovered, canonical_state_bound(n, k));
    EXPECT_LE(r.stats.states_discovered, power);
  }
}

TEST(TokenState, CanonicalIgnoresInputOrder) {
  EXPECT_EQ(TokenState::canonical(3, {5, 1, 4}), TokenState::canonical(3, {4, 5, 1}));
  EXPECT_EQ(TokenState::canonical(3, {5, 1, 4}).forward, (std::vector<VertexId>{1, 4, 5}));
}

TEST(CanonicalStateBound, SmallValuesAndSaturation) {
  EXPECT_EQ(canonical_state_bound(3, 2), 18u);
  EXPECT_EQ(canonical_state_bound(6, 1), 36u);
  EXPECT_EQ(canonical_state_bound(80, 3), 80u * 88560u);
  EXPECT_EQ(canonical_state_bound(1'000'000, 20), std::numeric_limits<std::size_t>::max());
}

}  // namespace
}  // namespace scss
