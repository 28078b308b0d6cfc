#include "scss/walk.h"

#include <string>
#include <unordered_set>

namespace scss {

VertexId walk_end(const Digraph& graph, const Walk& walk) {
  if (!graph.is_vertex(walk.start)) throw WalkError("walk starts at unknown vertex " + std::to_string(walk.start));
  VertexId at = walk.start;
  for (std::size_t i = 0; i < walk.edges.size(); ++i) {
    const EdgeId e = walk.edges[i];
    if (e >= graph.num_edges()) throw WalkError("walk uses unknown edge " + std::to_string(e));
    if (graph.edge(e).tail != at) {
      throw WalkError("walk is broken at step " + std::to_string(i) + ": edge " + std::to_string(e) +
                      " does not leave vertex " + std::to_string(at));
    }
    at = graph.edge(e).head;
  }
  return at;
}

std::vector<VertexId> walk_vertices(const Digraph& graph, const Walk& walk) {
  walk_end(graph, walk);
  std::vector<VertexId> out;
  out.reserve(walk.edges.size() + 1);
  out.push_back(walk.start);
  for (EdgeId e : walk.edges) out.push_back(graph.edge(e).head);
  return out;
}

Weight walk_weight(const Digraph& graph, const Walk& walk) {
  walk_end(graph, walk);
  Weight sum = 0;
  for (EdgeId e : walk.edges) sum = checked_add(sum, graph.edge(e).weight);
  return sum;
}

bool is_edge_simple(const Walk& walk) {
  std::unordered_set<EdgeId> seen;
  for (EdgeId e : walk.edges) {
    if (!seen.insert(e).second) return false;
  }
  return true;
}

bool is_vertex_simple(const Digraph& graph, const Walk& walk) {
  std::unordered_set<VertexId> seen;
  for (VertexId v : walk_vertices(graph, walk)) {
    if (!seen.insert(v).second) return false;
  }
  return true;
}

Walk walk_from_vertices(const Digraph& graph, std::span<const VertexId> vertices) {
  if (vertices.empty()) throw WalkError("empty vertex sequence");
  for (VertexId v : vertices) {
    if (!graph.is_vertex(v)) throw WalkError("unknown vertex " + std::to_string(v));
  }
  Walk walk{vertices.front(), {}};
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    EdgeId best = kNoEdge;
    for (EdgeId e : graph.out_edges(vertices[i])) {
      if (graph.edge(e).head != vertices[i + 1]) continue;
      if (best == kNoEdge || graph.edge(e).weight < graph.edge(best).weight) best = e;
    }
    if (best == kNoEdge) {
      throw WalkError("no edge " + std::to_string(vertices[i]) + " -> " + std::to_string(vertices[i + 1]));
    }
    walk.edges.push_back(best);
  }
  return walk;
}

Walk concatenate(const Digraph& graph, const Walk& head_part, const Walk& tail_part) {
  if (walk_end(graph, head_part) != tail_part.start) throw WalkError("concatenated walks do not meet");
  Walk out = head_part;
  out.edges.insert(out.edges.end(), tail_part.edges.begin(), tail_part.edges.end());
  return out;
}

}  // namespace scss
