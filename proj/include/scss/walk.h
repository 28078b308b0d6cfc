#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "scss/digraph.h"

namespace scss {

class WalkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A walk is identified by its edge sequence; `start` pins the vertex of the
// empty walk and lets the implied vertex sequence be recovered.
struct Walk {
  VertexId start = 0;
  std::vector<EdgeId> edges;

  bool empty() const { return edges.empty(); }
  friend bool operator==(const Walk&, const Walk&) = default;
};

// Throws WalkError if an edge id is invalid or consecutive edges do not chain.
VertexId walk_end(const Digraph& graph, const Walk& walk);
std::vector<VertexId> walk_vertices(const Digraph& graph, const Walk& walk);
Weight walk_weight(const Digraph& graph, const Walk& walk);

// True if no edge id occurs twice.
bool is_edge_simple(const Walk& walk);
// True if no vertex occurs twice in the implied vertex sequence.
bool is_vertex_simple(const Digraph& graph, const Walk& walk);

// Builds a walk from a vertex sequence, picking the cheapest edge between
// consecutive vertices (lowest id on ties). Throws WalkError when some
// consecutive pair has no edge.
Walk walk_from_vertices(const Digraph& graph, std::span<const VertexId> vertices);

// Concatenation; `tail_part` must start where `head_part` ends.
Walk concatenate(const Digraph& graph, const Walk& head_part, const Walk& tail_part);

}  // namespace scss
