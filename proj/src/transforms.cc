#include "scss/transforms.h"

#include <algorithm>
#include <string>

namespace scss {

void validate(const VertexWeightedInstance& instance) {
  const Digraph& g = instance.graph;
  if (instance.vertex_weight.size() != g.num_vertices()) {
    throw std::invalid_argument("vertex weight table has " + std::to_string(instance.vertex_weight.size()) +
                                " entries for " + std::to_string(g.num_vertices()) + " vertices");
  }
  if (!g.is_vertex(instance.s) || !g.is_vertex(instance.t)) throw std::invalid_argument("terminal out of range");
  if (instance.s == instance.t) throw std::invalid_argument("terminals s and t must differ");
  if (instance.k1 < 1 || instance.k2 < 1) throw std::invalid_argument("demands k1, k2 must be at least 1");
}

Weight evaluate_vertex_phi_cost(const VertexWeightedInstance& instance, std::span<const Walk> forward,
                                std::span<const Walk> backward) {
  const Digraph& g = instance.graph;
  std::vector<Weight> fwd(g.num_vertices(), 0);
  std::vector<Weight> bwd(g.num_vertices(), 0);
  auto count = [&](std::span<const Walk> walks, VertexId from, VertexId to, std::vector<Weight>& visits) {
    for (const Walk& w : walks) {
      if (w.start != from || walk_end(g, w) != to) throw WalkError("walk has wrong endpoints");
      for (VertexId v : walk_vertices(g, w)) ++visits[v];
    }
  };
  count(forward, instance.s, instance.t, fwd);
  count(backward, instance.t, instance.s, bwd);
  Weight total = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v == instance.s || v == instance.t) continue;
    const Weight uses = std::max(fwd[v], bwd[v]);
    if (uses != 0) total = checked_add(total, checked_mul(instance.vertex_weight[v], uses));
  }
  return total;
}

VertexSplit vertex_to_edge_weighted(const VertexWeightedInstance& instance) {
  validate(instance);
  const Digraph& g = instance.graph;
  const std::size_t n = g.num_vertices();
  VertexSplit out;
  out.in_vertex.resize(n);
  out.out_vertex.resize(n);
  out.split_edge.assign(n, kNoEdge);

  VertexId next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (v == instance.s || v == instance.t) {
      out.in_vertex[v] = out.out_vertex[v] = next++;
    } else {
      out.in_vertex[v] = next++;
      out.out_vertex[v] = next++;
    }
  }

  Digraph h(next);
  out.edge_image.reserve(g.num_edges());
  for (const Edge& e : g.edges()) out.edge_image.push_back(h.add_edge(out.out_vertex[e.tail], out.in_vertex[e.head], 0));
  for (VertexId v = 0; v < n; ++v) {
    if (v == instance.s || v == instance.t) continue;
    out.split_edge[v] = h.add_edge(out.in_vertex[v], out.out_vertex[v], instance.vertex_weight[v]);
  }

  out.instance.graph = std::move(h);
  out.instance.s = out.in_vertex[instance.s];
  out.instance.t = out.in_vertex[instance.t];
  out.instance.k1 = instance.k1;
  out.instance.k2 = instance.k2;
  return out;
}

EdgeSubdivision edge_to_vertex_weighted(const Instance& instance) {
  validate(instance);
  const Digraph& g = instance.graph;
  const std::size_t n = g.num_vertices();
  Digraph h(n + g.num_edges());
  EdgeSubdivision out;
  out.instance.vertex_weight.assign(n + g.num_edges(), 0);
  out.edge_vertex.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto mid = static_cast<VertexId>(n + e);
    h.add_edge(g.edge(e).tail, mid, 0);
    h.add_edge(mid, g.edge(e).head, 0);
    out.instance.vertex_weight[mid] = g.edge(e).weight;
    out.edge_vertex.push_back(mid);
  }
  out.instance.graph = std::move(h);
  out.instance.s = instance.s;
  out.instance.t = instance.t;
  out.instance.k1 = instance.k1;
  out.instance.k2 = instance.k2;
  return out;
}

}  // namespace scss
