#include "scss/min_cost_flow.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

namespace scss {

void FlowNetwork::add_arc(VertexId from, VertexId to, std::int64_t capacity, Weight cost) {
  if (from >= num_vertices_ || to >= num_vertices_) throw std::out_of_range("flow arc endpoint out of range");
  if (capacity < 0) throw std::invalid_argument("negative arc capacity");
  if (cost > static_cast<Weight>(std::numeric_limits<std::int64_t>::max() / 4)) {
    throw OverflowError("arc cost too large for the flow solver");
  }
  arcs_.push_back({from, to, capacity, cost});
}

std::optional<Weight> min_cost_flow(const FlowNetwork& network, VertexId source, VertexId sink, std::int64_t value) {
  const std::size_t n = network.num_vertices();
  if (source >= n || sink >= n) throw std::out_of_range("flow terminal out of range");
  if (value < 0) throw std::invalid_argument("negative flow value");
  if (value == 0 || source == sink) return Weight{0};

  struct Residual {
    VertexId to;
    std::int64_t capacity;
    std::int64_t cost;
  };
  std::vector<Residual> residual;
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (const FlowNetwork::Arc& arc : network.arcs()) {
    if (arc.capacity == 0 || arc.from == arc.to) continue;
    adjacency[arc.from].push_back(residual.size());
    residual.push_back({arc.to, arc.capacity, static_cast<std::int64_t>(arc.cost)});
    adjacency[arc.to].push_back(residual.size());
    residual.push_back({arc.from, 0, -static_cast<std::int64_t>(arc.cost)});
  }

  constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> potential(n, 0);
  std::vector<std::int64_t> dist(n);
  std::vector<std::size_t> via(n);
  std::int64_t flow = 0;
  std::int64_t total = 0;

  while (flow < value) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    using Entry = std::pair<std::int64_t, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[source] = 0;
    queue.push({0, source});
    while (!queue.empty()) {
      const auto [d, v] = queue.top();
      queue.pop();
      if (d != dist[v]) continue;
      for (std::size_t r : adjacency[v]) {
        const Residual& arc = residual[r];
        if (arc.capacity == 0) continue;
        const std::int64_t reduced = arc.cost + potential[v] - potential[arc.to];
        if (d + reduced < dist[arc.to]) {
          dist[arc.to] = d + reduced;
          via[arc.to] = r;
          queue.push({dist[arc.to], arc.to});
        }
      }
    }
    if (dist[sink] == kUnreached) return std::nullopt;
    for (std::size_t v = 0; v < n; ++v) potential[v] += std::min(dist[v], dist[sink]);

    std::int64_t push = value - flow;
    for (VertexId v = sink; v != source; v = residual[via[v] ^ 1].to) push = std::min(push, residual[via[v]].capacity);
    for (VertexId v = sink; v != source; v = residual[via[v] ^ 1].to) {
      residual[via[v]].capacity -= push;
      residual[via[v] ^ 1].capacity += push;
    }
    flow += push;
    std::int64_t path_cost = potential[sink] - potential[source];
    if (__builtin_mul_overflow(path_cost, push, &path_cost) || __builtin_add_overflow(total, path_cost, &total)) {
      throw OverflowError("min-cost flow total overflows");
    }
  }
  return static_cast<Weight>(total);
}

}  // namespace scss
