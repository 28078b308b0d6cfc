#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "scss/instance.h"
#include "scss/min_cost_flow.h"
#include "scss/transforms.h"

namespace scss {

// Brute-force ground truth for small instances of 2-SCSS-(k1,k2).
struct OracleLimits {
  // Cap on enumerated simple paths per direction.
  std::size_t max_paths = 100'000;
  // Cap on path combinations examined.
  std::size_t max_combinations = 50'000'000;
  std::optional<std::chrono::milliseconds> time_budget;
};

enum class OracleStatus { kOptimal, kInfeasible, kLimitExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::kInfeasible;
  Weight cost = 0;
  // Paths (or combinations) examined; on kLimitExceeded, how far it got.
  std::size_t count_reached = 0;
};

// All vertex-simple from~>to paths as edge sequences, in lexicographic order
// of (vertex id, edge id) along the path. Self-loops never appear. nullopt if
// more than `max_paths` exist.
std::optional<std::vector<Walk>> enumerate_simple_paths(const Digraph& graph, VertexId from, VertexId to,
                                                        std::size_t max_paths);

// The forward subproblem for a fixed backward choice. Edge e stands for k1
// unit arcs, the first backward_use[e] of them free and the rest at w(e);
// equal-cost copies are merged into one arc. Self-loops are dropped.
FlowNetwork expanded_forward_network(const Instance& instance, std::span<const int> backward_use);

// Exact optimum: every k2-multiset of simple t~>s paths, each completed by a
// min-cost forward flow of value k1 on the expanded network.
OracleResult oracle_opt(const Instance& instance, const OracleLimits& limits = {});

struct EnumerateResult {
  OracleStatus status = OracleStatus::kInfeasible;
  Weight cost = 0;
  std::vector<Solution> optima;
  std::size_t count_reached = 0;
};

// Every (k1-multiset of simple s~>t paths, k2-multiset of simple t~>s paths)
// whose phi-cost equals the optimum, in deterministic order.
EnumerateResult oracle_enumerate_optima(const Instance& instance, const OracleLimits& limits = {});

// Exhaustive path-tuple search, no flow step. Slower than oracle_opt and
// independent of it.
OracleResult exhaustive_opt(const Instance& instance, const OracleLimits& limits = {});
OracleResult exhaustive_opt(const VertexWeightedInstance& instance, const OracleLimits& limits = {});

}  // namespace scss
