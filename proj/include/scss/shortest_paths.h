#pragma once

#include <optional>
#include <vector>

#include "scss/digraph.h"
#include "scss/walk.h"

namespace scss {

// Exact all-pairs distances with one shortest-path tree per source.
// Ties are resolved towards the lowest vertex id, so extracted paths are a
// deterministic function of the graph.
class ShortestPathTable {
 public:
  ShortestPathTable() = default;

  std::size_t num_vertices() const { return n_; }
  bool reachable(VertexId from, VertexId to) const { return distance(from, to) != kInfiniteWeight; }
  // kInfiniteWeight when `to` is unreachable from `from`.
  Weight distance(VertexId from, VertexId to) const { return dist_[index(from, to)]; }
  // Last edge on the stored from~>to path; kNoEdge for from == to or unreachable.
  EdgeId last_edge(VertexId from, VertexId to) const { return pred_[index(from, to)]; }
  std::optional<Walk> path(VertexId from, VertexId to) const;

 private:
  friend ShortestPathTable all_pairs_shortest_paths(const Digraph& graph);

  std::size_t index(VertexId from, VertexId to) const { return static_cast<std::size_t>(from) * n_ + to; }

  std::size_t n_ = 0;
  std::vector<Weight> dist_;
  std::vector<EdgeId> pred_;
  std::vector<VertexId> pred_vertex_;
};

ShortestPathTable all_pairs_shortest_paths(const Digraph& graph);

}  // namespace scss
