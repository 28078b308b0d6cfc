#include "scss/digraph.h"

#include <stdexcept>
#include <string>

namespace scss {

Digraph::Digraph(std::size_t num_vertices) : out_(num_vertices), in_(num_vertices) {}

EdgeId Digraph::add_edge(VertexId tail, VertexId head, Weight weight) {
  if (!is_vertex(tail) || !is_vertex(head)) {
    throw std::out_of_range("edge (" + std::to_string(tail) + ", " + std::to_string(head) +
                            ") has an endpoint outside 0.." + std::to_string(num_vertices()));
  }
  if (edges_.size() >= kNoEdge) throw std::length_error("too many edges");
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({tail, head, weight});
  out_[tail].push_back(id);
  in_[head].push_back(id);
  return id;
}

VertexId Digraph::add_vertex() {
  out_.emplace_back();
  in_.emplace_back();
  return static_cast<VertexId>(out_.size() - 1);
}

Weight Digraph::total_weight() const {
  Weight sum = 0;
  for (const Edge& e : edges_) sum = checked_add(sum, e.weight);
  return sum;
}

Digraph Digraph::reversed() const {
  Digraph out(num_vertices());
  for (const Edge& e : edges_) out.add_edge(e.head, e.tail, e.weight);
  return out;
}

Digraph Digraph::scaled(Weight factor) const {
  Digraph out(num_vertices());
  for (const Edge& e : edges_) out.add_edge(e.tail, e.head, checked_mul(e.weight, factor));
  return out;
}

}  // namespace scss
