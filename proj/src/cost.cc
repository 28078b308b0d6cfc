#include "scss/cost.h"

#include <algorithm>
#include <string>
#include <vector>

namespace scss {
namespace {

void count_usage(const Digraph& graph, std::span<const Walk> walks, VertexId from, VertexId to,
                 const char* side, std::vector<Weight>& usage) {
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const Walk& w = walks[i];
    if (w.start != from || walk_end(graph, w) != to) {
      throw WalkError(std::string(side) + " walk " + std::to_string(i) + " does not run " +
                      std::to_string(from) + " ~> " + std::to_string(to));
    }
    for (EdgeId e : w.edges) ++usage[e];
  }
}

}  // namespace

Weight phi_cost(const Digraph& graph, VertexId s, VertexId t, std::span<const Walk> forward,
                std::span<const Walk> backward) {
  std::vector<Weight> fwd(graph.num_edges(), 0);
  std::vector<Weight> bwd(graph.num_edges(), 0);
  count_usage(graph, forward, s, t, "forward", fwd);
  count_usage(graph, backward, t, s, "backward", bwd);
  Weight total = 0;
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    const Weight uses = std::max(fwd[e], bwd[e]);
    if (uses != 0) total = checked_add(total, checked_mul(graph.edge(e).weight, uses));
  }
  return total;
}

Weight evaluate_phi_cost(const Instance& instance, std::span<const Walk> forward, std::span<const Walk> backward) {
  if (forward.size() != static_cast<std::size_t>(instance.k1) ||
      backward.size() != static_cast<std::size_t>(instance.k2)) {
    throw WalkError("expected " + std::to_string(instance.k1) + " forward and " + std::to_string(instance.k2) +
                    " backward walks, got " + std::to_string(forward.size()) + " and " +
                    std::to_string(backward.size()));
  }
  return phi_cost(instance.graph, instance.s, instance.t, forward, backward);
}

Weight evaluate_phi_cost(const Instance& instance, const Solution& solution) {
  return evaluate_phi_cost(instance, solution.forward, solution.backward);
}

}  // namespace scss
