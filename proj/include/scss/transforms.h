#pragma once

#include <span>
#include <vector>

#include "scss/instance.h"

namespace scss {

// Vertex-weighted variant: edge weights of `graph` are ignored and the cost of
// a solution is sum over non-terminal v of vertex_weight[v] * max(forward
// visits of v, backward visits of v).
struct VertexWeightedInstance {
  Digraph graph;
  std::vector<Weight> vertex_weight;
  VertexId s = 0;
  VertexId t = 1;
  int k1 = 1;
  int k2 = 1;
};

void validate(const VertexWeightedInstance& instance);

Weight evaluate_vertex_phi_cost(const VertexWeightedInstance& instance, std::span<const Walk> forward,
                                std::span<const Walk> backward);

// Each non-terminal v becomes v_in -> v_out carrying its weight; an original
// edge (u, v) becomes (u_out, v_in) of weight 0. Terminals are not split.
struct VertexSplit {
  Instance instance;
  std::vector<VertexId> in_vertex;   // per original vertex
  std::vector<VertexId> out_vertex;  // per original vertex (== in_vertex for s, t)
  std::vector<EdgeId> split_edge;    // per original vertex; kNoEdge for s, t
  std::vector<EdgeId> edge_image;    // per original edge
};

VertexSplit vertex_to_edge_weighted(const VertexWeightedInstance& instance);

// Each edge (u, v) is subdivided by a new vertex carrying the edge weight;
// original vertices get weight 0 and keep their ids.
struct EdgeSubdivision {
  VertexWeightedInstance instance;
  std::vector<VertexId> edge_vertex;  // per original edge
};

EdgeSubdivision edge_to_vertex_weighted(const Instance& instance);

}  // namespace scss
