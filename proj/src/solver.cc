#include "scss/solver.h"

#include <algorithm>
#include <string>

#include "scss/cost.h"

namespace scss {

SolveResult solve(const Instance& instance, const SearchOptions& options) {
  validate(instance);
  if (instance.k2 != 1) {
    throw DemandShapeError("the exact solver handles k2 = 1 only (got k2 = " + std::to_string(instance.k2) + ")");
  }
  const ShortestPathTable paths = all_pairs_shortest_paths(instance.graph);
  GameResult game = solve_token_game(instance.graph, instance.s, instance.t, instance.k1, paths, options);

  SolveResult result;
  result.stats = game.stats;
  switch (game.status) {
    case GameStatus::kInfeasible:
      result.status = SolveStatus::kInfeasible;
      return result;
    case GameStatus::kBudgetExceeded:
      result.status = SolveStatus::kBudgetExceeded;
      return result;
    case GameStatus::kSolved:
      break;
  }
  Solution solution = reconstruct_solution(instance.graph, paths, *game.play);
  if (solution.cost > game.play->cost) {
    throw std::logic_error("reconstructed solution costs more than the play it came from");
  }
  result.status = SolveStatus::kSolved;
  result.solution = std::move(solution);
  result.play = std::move(game.play);
  return result;
}

Solution reconstruct_solution(const Digraph& graph, const ShortestPathTable& paths, const GamePlay& play) {
  replay(play, graph, paths);

  const VertexId s = play.start.backward;
  std::vector<VertexId> position(play.start.forward.begin(), play.start.forward.end());
  std::vector<Walk> forward(position.size());
  for (std::size_t i = 0; i < forward.size(); ++i) forward[i].start = position[i];
  std::vector<std::vector<EdgeId>> backward_segments;
  VertexId v0 = s;

  auto token_at = [&](VertexId v) {
    const auto it = std::find(position.begin(), position.end(), v);
    return static_cast<std::size_t>(it - position.begin());
  };

  for (const Move& move : play.moves) {
    switch (move.kind) {
      case MoveKind::kBackward:
        backward_segments.push_back({move.edge});
        v0 = graph.edge(move.edge).tail;
        break;
      case MoveKind::kForward: {
        const std::size_t i = token_at(move.position);
        forward[i].edges.push_back(move.edge);
        position[i] = graph.edge(move.edge).head;
        break;
      }
      case MoveKind::kFlip: {
        const std::size_t i = token_at(move.position);
        const std::vector<EdgeId> segment = paths.path(move.position, v0)->edges;
        forward[i].edges.insert(forward[i].edges.end(), segment.begin(), segment.end());
        backward_segments.push_back(segment);
        position[i] = v0;
        v0 = move.position;
        break;
      }
    }
  }

  Walk backward;
  backward.start = v0;
  for (auto it = backward_segments.rbegin(); it != backward_segments.rend(); ++it) {
    backward.edges.insert(backward.edges.end(), it->begin(), it->end());
  }

  Solution solution;
  solution.forward = std::move(forward);
  solution.backward.push_back(std::move(backward));
  solution.cost = phi_cost(graph, s, v0, solution.forward, solution.backward);
  return solution;
}

Verdict verify(const Instance& instance, const Solution& solution) {
  Verdict verdict;
  verdict.reported_cost = solution.cost;
  auto violation = [&](std::string message) {
    verdict.ok = false;
    verdict.violations.push_back(std::move(message));
  };

  if (solution.forward.size() != static_cast<std::size_t>(instance.k1)) {
    violation("expected " + std::to_string(instance.k1) + " forward walks, got " +
              std::to_string(solution.forward.size()));
  }
  if (solution.backward.size() != static_cast<std::size_t>(instance.k2)) {
    violation("expected " + std::to_string(instance.k2) + " backward walks, got " +
              std::to_string(solution.backward.size()));
  }

  bool walks_ok = true;
  auto check_walk = [&](const Walk& walk, VertexId from, VertexId to, const std::string& name) {
    try {
      if (walk.start != from) {
        violation(name + " starts at " + std::to_string(walk.start) + ", expected " + std::to_string(from));
        walks_ok = false;
      }
      const VertexId end = walk_end(instance.graph, walk);
      if (end != to) {
        violation(name + " ends at " + std::to_string(end) + ", expected " + std::to_string(to));
        walks_ok = false;
      }
    } catch (const WalkError& e) {
      violation(name + ": " + e.what());
      walks_ok = false;
    }
  };
  for (std::size_t i = 0; i < solution.forward.size(); ++i) {
    check_walk(solution.forward[i], instance.s, instance.t, "forward[" + std::to_string(i) + "]");
  }
  for (std::size_t i = 0; i < solution.backward.size(); ++i) {
    check_walk(solution.backward[i], instance.t, instance.s, "backward[" + std::to_string(i) + "]");
  }
  if (!walks_ok) return verdict;

  try {
    verdict.recomputed_cost = phi_cost(instance.graph, instance.s, instance.t, solution.forward, solution.backward);
  } catch (const OverflowError& e) {
    violation(std::string("cost overflows: ") + e.what());
    return verdict;
  }
  if (*verdict.recomputed_cost != solution.cost) {
    violation("reported cost " + std::to_string(solution.cost) + " differs from recomputed cost " +
              std::to_string(*verdict.recomputed_cost));
  }
  return verdict;
}

}  // namespace scss
