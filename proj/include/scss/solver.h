#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scss/instance.h"
#include "scss/shortest_paths.h"
#include "scss/token_game.h"

namespace scss {

class DemandShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SolveStatus { kSolved, kInfeasible, kBudgetExceeded };

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Solution> solution;
  std::optional<GamePlay> play;
  SearchStats stats;
};

// Exact 2-SCSS-(k,1) via the token game with k forward tokens. Throws
// DemandShapeError unless instance.k2 == 1.
SolveResult solve(const Instance& instance, const SearchOptions& options = {});

// Turns a start-to-end play into k forward walks and one backward walk.
// Forward edges and flip segments go to the forward token that made them;
// backward edges and flip segments, taken in reverse play order, form the
// backward walk. Throws std::invalid_argument on an illegal play.
Solution reconstruct_solution(const Digraph& graph, const ShortestPathTable& paths, const GamePlay& play);

struct Verdict {
  bool ok = true;
  std::vector<std::string> violations;
  Weight reported_cost = 0;
  std::optional<Weight> recomputed_cost;
};

Verdict verify(const Instance& instance, const Solution& solution);

}  // namespace scss
