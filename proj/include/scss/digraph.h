#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "scss/weight.h"

namespace scss {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;
  Weight weight = 0;

  bool is_self_loop() const { return tail == head; }
};

// Directed weighted multigraph. Parallel edges and self-loops are kept as
// distinct edges; edge ids are dense and assigned in insertion order.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t num_vertices);

  // Throws std::out_of_range if an endpoint is not a vertex.
  EdgeId add_edge(VertexId tail, VertexId head, Weight weight);
  VertexId add_vertex();

  std::size_t num_vertices() const { return out_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool is_vertex(VertexId v) const { return v < out_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> out_edges(VertexId v) const { return out_[v]; }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_[v]; }
  std::size_t out_degree(VertexId v) const { return out_[v].size(); }
  std::size_t in_degree(VertexId v) const { return in_[v].size(); }

  // Sum of all edge weights (overflow-checked).
  Weight total_weight() const;

  // Same vertex set, every edge reversed; edge ids are preserved.
  Digraph reversed() const;
  // Every weight multiplied by `factor` (overflow-checked); edge ids preserved.
  Digraph scaled(Weight factor) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

}  // namespace scss
