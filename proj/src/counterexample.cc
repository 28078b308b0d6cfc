#include "scss/counterexample.h"

#include <vector>

namespace scss {

using counterexample::kS;
using counterexample::kT;
using counterexample::u;
using counterexample::v;

Instance build_counterexample() {
  Digraph g(22);
  g.add_edge(kS, u(1), 1);
  for (int i = 1; i < 10; ++i) g.add_edge(u(i), u(i + 1), 1);
  g.add_edge(u(10), kT, 1);
  g.add_edge(kS, v(1), 1);
  for (int i = 1; i < 10; ++i) g.add_edge(v(i), v(i + 1), 1);
  g.add_edge(v(10), kT, 1);

  g.add_edge(kT, v(7), 0);
  g.add_edge(kT, v(9), 0);
  g.add_edge(v(8), u(3), 0);
  g.add_edge(v(10), u(1), 0);
  g.add_edge(u(2), v(1), 0);
  g.add_edge(v(6), u(5), 0);
  g.add_edge(u(4), kS, 0);
  g.add_edge(u(6), kS, 0);
  return Instance{std::move(g), kS, kT, 2, 2};
}

Solution counterexample_solution(const Instance& fixture) {
  auto path = [&](std::vector<VertexId> vertices) { return walk_from_vertices(fixture.graph, vertices); };
  std::vector<VertexId> p1{kS}, p2{kS};
  for (int i = 1; i <= 10; ++i) {
    p1.push_back(u(i));
    p2.push_back(v(i));
  }
  p1.push_back(kT);
  p2.push_back(kT);
  std::vector<VertexId> p4{kT, v(9), v(10), u(1), u(2)};
  for (int i = 1; i <= 6; ++i) p4.push_back(v(i));
  p4.insert(p4.end(), {u(5), u(6), kS});

  Solution solution;
  solution.forward = {path(p1), path(p2)};
  solution.backward = {path({kT, v(7), v(8), u(3), u(4), kS}), path(p4)};
  solution.cost = 22;
  return solution;
}

}  // namespace scss
