#include "scss/random_instance.h"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace scss {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SeededRng::below needs a positive bound");
  // Rejection sampling over the largest multiple of `bound`.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return draw % bound;
}

Instance random_instance(const RandomInstanceSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("random instance needs n >= 2");
  if (spec.strongly_connected && spec.m < spec.n) {
    throw std::invalid_argument("strongly connected random instance needs m >= n");
  }
  SeededRng rng(spec.seed);
  Digraph g(spec.n);
  if (spec.strongly_connected) {
    std::vector<VertexId> order(spec.n);
    std::iota(order.begin(), order.end(), VertexId{0});
    rng.shuffle(order);
    for (std::size_t i = 0; i < spec.n; ++i) {
      g.add_edge(order[i], order[(i + 1) % spec.n], rng.between(0, spec.max_weight));
    }
  }
  while (g.num_edges() < spec.m) {
    const auto tail = static_cast<VertexId>(rng.below(spec.n));
    const auto head = static_cast<VertexId>(rng.below(spec.n - 1));
    g.add_edge(tail, head >= tail ? head + 1 : head, rng.between(0, spec.max_weight));
  }
  Instance instance{std::move(g), 0, 1, spec.k1, spec.k2};
  validate(instance);
  return instance;
}

}  // namespace scss
