#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scss/digraph.h"

namespace scss {

// Capacitated network with non-negative arc costs.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t num_vertices) : num_vertices_(num_vertices) {}

  struct Arc {
    VertexId from;
    VertexId to;
    std::int64_t capacity;
    Weight cost;
  };

  void add_arc(VertexId from, VertexId to, std::int64_t capacity, Weight cost);
  std::size_t num_vertices() const { return num_vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  std::size_t num_vertices_;
  std::vector<Arc> arcs_;
};

// Minimum total cost of an integral source->sink flow of exactly `value`
// units, by successive shortest augmenting paths with vertex potentials.
// nullopt when the maximum flow is below `value`.
std::optional<Weight> min_cost_flow(const FlowNetwork& network, VertexId source, VertexId sink,
                                    std::int64_t value);

}  // namespace scss
