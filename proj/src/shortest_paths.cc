#include "scss/shortest_paths.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace scss {

std::optional<Walk> ShortestPathTable::path(VertexId from, VertexId to) const {
  if (!reachable(from, to)) return std::nullopt;
  Walk walk{from, {}};
  for (VertexId at = to; at != from; at = pred_vertex_[index(from, at)]) walk.edges.push_back(pred_[index(from, at)]);
  std::reverse(walk.edges.begin(), walk.edges.end());
  return walk;
}

ShortestPathTable all_pairs_shortest_paths(const Digraph& graph) {
  const std::size_t n = graph.num_vertices();
  ShortestPathTable table;
  table.n_ = n;
  table.dist_.assign(n * n, kInfiniteWeight);
  table.pred_.assign(n * n, kNoEdge);
  table.pred_vertex_.assign(n * n, kNoVertex);

  using Entry = std::pair<Weight, VertexId>;
  std::vector<bool> settled(n);
  for (VertexId source = 0; source < n; ++source) {
    Weight* dist = &table.dist_[source * n];
    EdgeId* pred = &table.pred_[source * n];
    VertexId* pred_vertex = &table.pred_vertex_[source * n];
    std::fill(settled.begin(), settled.end(), false);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[source] = 0;
    queue.push({0, source});
    while (!queue.empty()) {
      const auto [d, u] = queue.top();
      queue.pop();
      if (settled[u] || d != dist[u]) continue;
      settled[u] = true;
      for (EdgeId e : graph.out_edges(u)) {
        const VertexId v = graph.edge(e).head;
        if (settled[v]) continue;
        const Weight candidate = checked_add(d, graph.edge(e).weight);
        // Equal-length alternatives go to the lower-numbered predecessor.
        const bool better = candidate < dist[v] ||
                            (candidate == dist[v] && (u < pred_vertex[v] || (u == pred_vertex[v] && e < pred[v])));
        if (!better) continue;
        const bool improved = candidate < dist[v];
        dist[v] = candidate;
        pred[v] = e;
        pred_vertex[v] = u;
        if (improved) queue.push({candidate, v});
      }
    }
  }
  return table;
}

}  // namespace scss
