#include "scss/instance.h"

#include <string>

namespace scss {

void validate(const Instance& instance) {
  const Digraph& g = instance.graph;
  if (!g.is_vertex(instance.s) || !g.is_vertex(instance.t)) {
    throw std::invalid_argument("terminal outside 0.." + std::to_string(g.num_vertices()));
  }
  if (instance.s == instance.t) throw std::invalid_argument("terminals s and t must differ");
  if (instance.k1 < 1 || instance.k2 < 1) throw std::invalid_argument("demands k1, k2 must be at least 1");
}

}  // namespace scss
