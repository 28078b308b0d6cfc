#include "scss/oracle.h"

#include <algorithm>

#include "scss/cost.h"

namespace scss {
namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_of(const OracleLimits& limits) {
  if (!limits.time_budget) return std::nullopt;
  return Clock::now() + *limits.time_budget;
}

bool expired(const std::optional<Clock::time_point>& deadline) {
  return deadline && Clock::now() > *deadline;
}

// Visits every nondecreasing index sequence of length k over [0, pool).
// Stops early when `visit` returns false; returns false in that case.
template <typename Visit>
bool for_each_multiset(std::size_t pool, int k, Visit&& visit) {
  if (pool == 0) return true;
  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  while (true) {
    if (!visit(std::span<const std::size_t>(pick))) return false;
    int i = k - 1;
    while (i >= 0 && pick[i] == pool - 1) --i;
    if (i < 0) return true;
    ++pick[i];
    std::fill(pick.begin() + i + 1, pick.end(), pick[i]);
  }
}

void add_usage(const Walk& path, std::vector<int>& usage, int delta) {
  for (EdgeId e : path.edges) usage[e] += delta;
}

struct PathSets {
  std::vector<Walk> forward;
  std::vector<Walk> backward;
};

// Returns false, with `status` set, when no search is needed or possible.
bool collect_paths(const Instance& instance, const OracleLimits& limits, PathSets& sets, OracleStatus& status,
                   std::size_t& count_reached) {
  auto forward = enumerate_simple_paths(instance.graph, instance.s, instance.t, limits.max_paths);
  auto backward = enumerate_simple_paths(instance.graph, instance.t, instance.s, limits.max_paths);
  if (!forward || !backward) {
    status = OracleStatus::kLimitExceeded;
    count_reached = limits.max_paths;
    return false;
  }
  sets.forward = std::move(*forward);
  sets.backward = std::move(*backward);
  if (sets.forward.empty() || sets.backward.empty()) {
    status = OracleStatus::kInfeasible;
    return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<Walk>> enumerate_simple_paths(const Digraph& graph, VertexId from, VertexId to,
                                                        std::size_t max_paths) {
  std::vector<Walk> out;
  if (from == to) {
    out.push_back(Walk{from, {}});
    return out;
  }
  // Out-edges ordered by (head, id) so paths come out lexicographically.
  std::vector<std::vector<EdgeId>> ordered(graph.num_vertices());
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    for (EdgeId e : graph.out_edges(v)) {
      if (!graph.edge(e).is_self_loop()) ordered[v].push_back(e);
    }
    std::sort(ordered[v].begin(), ordered[v].end(), [&](EdgeId a, EdgeId b) {
      return std::pair(graph.edge(a).head, a) < std::pair(graph.edge(b).head, b);
    });
  }

  std::vector<std::uint8_t> on_path(graph.num_vertices(), 0);
  std::vector<EdgeId> edges;
  bool overflow = false;
  auto dfs = [&](auto&& self, VertexId v) -> void {
    if (overflow) return;
    if (v == to) {
      if (out.size() == max_paths) {
        overflow = true;
        return;
      }
      out.push_back(Walk{from, edges});
      return;
    }
    on_path[v] = 1;
    for (EdgeId e : ordered[v]) {
      const VertexId next = graph.edge(e).head;
      if (on_path[next]) continue;
      edges.push_back(e);
      self(self, next);
      edges.pop_back();
      if (overflow) break;
    }
    on_path[v] = 0;
  };
  dfs(dfs, from);
  if (overflow) return std::nullopt;
  return out;
}

FlowNetwork expanded_forward_network(const Instance& instance, std::span<const int> backward_use) {
  const Digraph& g = instance.graph;
  FlowNetwork network(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_self_loop()) continue;
    const int free = std::min(backward_use[e], instance.k1);
    if (free > 0) network.add_arc(edge.tail, edge.head, free, 0);
    if (instance.k1 > free) network.add_arc(edge.tail, edge.head, instance.k1 - free, edge.weight);
  }
  return network;
}

OracleResult oracle_opt(const Instance& instance, const OracleLimits& limits) {
  validate(instance);
  const auto deadline = deadline_of(limits);
  OracleResult result;
  const Digraph& g = instance.graph;

  PathSets sets;
  if (!collect_paths(instance, limits, sets, result.status, result.count_reached)) return result;

  std::optional<Weight> best;
  std::vector<int> usage(g.num_edges(), 0);
  bool limited = false;
  for_each_multiset(sets.backward.size(), instance.k2, [&](std::span<const std::size_t> pick) {
    if (++result.count_reached > limits.max_combinations || expired(deadline)) {
      limited = true;
      return false;
    }
    std::fill(usage.begin(), usage.end(), 0);
    for (std::size_t p : pick) add_usage(sets.backward[p], usage, 1);
    Weight base = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (usage[e] != 0) base = checked_add(base, checked_mul(g.edge(e).weight, static_cast<Weight>(usage[e])));
    }
    if (best && base >= *best) return true;
    const auto flow = min_cost_flow(expanded_forward_network(instance, usage), instance.s, instance.t, instance.k1);
    if (!flow) return true;
    const Weight total = checked_add(base, *flow);
    if (!best || total < *best) best = total;
    return true;
  });

  if (limited) {
    result.status = OracleStatus::kLimitExceeded;
    return result;
  }
  if (!best) {
    result.status = OracleStatus::kInfeasible;
    return result;
  }
  result.status = OracleStatus::kOptimal;
  result.cost = *best;
  return result;
}

EnumerateResult oracle_enumerate_optima(const Instance& instance, const OracleLimits& limits) {
  EnumerateResult result;
  const OracleResult opt = oracle_opt(instance, limits);
  result.status = opt.status;
  result.count_reached = opt.count_reached;
  if (opt.status != OracleStatus::kOptimal) return result;
  result.cost = opt.cost;

  const auto deadline = deadline_of(limits);
  const Digraph& g = instance.graph;
  PathSets sets;
  OracleStatus status{};
  std::size_t unused = 0;
  collect_paths(instance, limits, sets, status, unused);

  const std::size_t k1 = static_cast<std::size_t>(instance.k1);
  const std::size_t k2 = static_cast<std::size_t>(instance.k2);
  std::vector<int> bwd(g.num_edges(), 0);
  std::vector<int> fwd(g.num_edges(), 0);
  std::vector<std::size_t> back_pick;
  std::vector<std::size_t> fwd_pick;
  std::size_t examined = 0;
  bool limited = false;

  auto record = [&] {
    Solution solution;
    for (std::size_t p : fwd_pick) solution.forward.push_back(sets.forward[p]);
    for (std::size_t p : back_pick) solution.backward.push_back(sets.backward[p]);
    solution.cost = opt.cost;
    result.optima.push_back(std::move(solution));
  };

  // Partial phi-cost never decreases as paths are added, so branches above
  // the optimum are cut.
  auto forward_dfs = [&](auto&& self, std::size_t from, Weight partial) -> void {
    if (limited) return;
    if (fwd_pick.size() == k1) {
      if (++examined > limits.max_combinations || expired(deadline)) {
        limited = true;
        return;
      }
      if (partial == opt.cost) record();
      return;
    }
    for (std::size_t p = from; p < sets.forward.size() && !limited; ++p) {
      Weight next = partial;
      for (EdgeId e : sets.forward[p].edges) {
        if (fwd[e]++ >= bwd[e]) next = checked_add(next, g.edge(e).weight);
      }
      if (next <= opt.cost) {
        fwd_pick.push_back(p);
        self(self, p, next);
        fwd_pick.pop_back();
      }
      add_usage(sets.forward[p], fwd, -1);
    }
  };

  auto backward_dfs = [&](auto&& self, std::size_t from, Weight partial) -> void {
    if (limited) return;
    if (back_pick.size() == k2) {
      const auto flow = min_cost_flow(expanded_forward_network(instance, bwd), instance.s, instance.t, instance.k1);
      if (!flow || checked_add(partial, *flow) > opt.cost) return;
      forward_dfs(forward_dfs, 0, partial);
      return;
    }
    for (std::size_t p = from; p < sets.backward.size() && !limited; ++p) {
      const Weight next = checked_add(partial, walk_weight(g, sets.backward[p]));
      if (next > opt.cost) continue;
      add_usage(sets.backward[p], bwd, 1);
      back_pick.push_back(p);
      self(self, p, next);
      back_pick.pop_back();
      add_usage(sets.backward[p], bwd, -1);
    }
  };
  backward_dfs(backward_dfs, 0, 0);

  result.count_reached = examined;
  if (limited) {
    result.status = OracleStatus::kLimitExceeded;
    result.optima.clear();
  }
  return result;
}

OracleResult exhaustive_opt(const Instance& instance, const OracleLimits& limits) {
  validate(instance);
  const auto deadline = deadline_of(limits);
  OracleResult result;
  PathSets sets;
  if (!collect_paths(instance, limits, sets, result.status, result.count_reached)) return result;

  std::optional<Weight> best;
  bool limited = false;
  std::vector<Walk> forward(static_cast<std::size_t>(instance.k1));
  std::vector<Walk> backward(static_cast<std::size_t>(instance.k2));
  for_each_multiset(sets.backward.size(), instance.k2, [&](std::span<const std::size_t> back) {
    for (std::size_t i = 0; i < back.size(); ++i) backward[i] = sets.backward[back[i]];
    return for_each_multiset(sets.forward.size(), instance.k1, [&](std::span<const std::size_t> fwd) {
      if (++result.count_reached > limits.max_combinations || expired(deadline)) {
        limited = true;
        return false;
      }
      for (std::size_t i = 0; i < fwd.size(); ++i) forward[i] = sets.forward[fwd[i]];
      const Weight cost = evaluate_phi_cost(instance, forward, backward);
      if (!best || cost < *best) best = cost;
      return true;
    });
  });

  if (limited) {
    result.status = OracleStatus::kLimitExceeded;
  } else {
    result.status = OracleStatus::kOptimal;
    result.cost = *best;
  }
  return result;
}

OracleResult exhaustive_opt(const VertexWeightedInstance& instance, const OracleLimits& limits) {
  validate(instance);
  const auto deadline = deadline_of(limits);
  OracleResult result;
  auto fwd_paths = enumerate_simple_paths(instance.graph, instance.s, instance.t, limits.max_paths);
  auto back_paths = enumerate_simple_paths(instance.graph, instance.t, instance.s, limits.max_paths);
  if (!fwd_paths || !back_paths) {
    result.status = OracleStatus::kLimitExceeded;
    result.count_reached = limits.max_paths;
    return result;
  }
  if (fwd_paths->empty() || back_paths->empty()) {
    result.status = OracleStatus::kInfeasible;
    return result;
  }

  std::optional<Weight> best;
  bool limited = false;
  std::vector<Walk> forward(static_cast<std::size_t>(instance.k1));
  std::vector<Walk> backward(static_cast<std::size_t>(instance.k2));
  for_each_multiset(back_paths->size(), instance.k2, [&](std::span<const std::size_t> back) {
    for (std::size_t i = 0; i < back.size(); ++i) backward[i] = (*back_paths)[back[i]];
    return for_each_multiset(fwd_paths->size(), instance.k1, [&](std::span<const std::size_t> fwd) {
      if (++result.count_reached > limits.max_combinations || expired(deadline)) {
        limited = true;
        return false;
      }
      for (std::size_t i = 0; i < fwd.size(); ++i) forward[i] = (*fwd_paths)[fwd[i]];
      const Weight cost = evaluate_vertex_phi_cost(instance, forward, backward);
      if (!best || cost < *best) best = cost;
      return true;
    });
  });

  if (limited) {
    result.status = OracleStatus::kLimitExceeded;
  } else {
    result.status = OracleStatus::kOptimal;
    result.cost = *best;
  }
  return result;
}

}  // namespace scss
