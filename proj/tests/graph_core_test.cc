#include <gtest/gtest.h>

#include <vector>

#include "scss/cost.h"
#include "scss/counterexample.h"
#include "scss/instance_io.h"
#include "scss/oracle.h"
#include "scss/random_instance.h"
#include "scss/shortest_paths.h"
#include "scss/solution_io.h"
#include "scss/transforms.h"
#include "testing/reference.h"

namespace scss {
namespace {

Instance two_cycle(Weight forward, Weight backward, int k1 = 1, int k2 = 1) {
  Digraph g(2);
  g.add_edge(0, 1, forward);
  g.add_edge(1, 0, backward);
  return Instance{std::move(g), 0, 1, k1, k2};
}

TEST(Digraph, AdjacencyAndDegrees) {
  Digraph g(3);
  const EdgeId a = g.add_edge(0, 1, 4);
  const EdgeId b = g.add_edge(0, 1, 2);
  const EdgeId c = g.add_edge(2, 2, 1);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.out_degree(0), 2u);
  EXPECT_EQ(g.in_degree(1), 2u);
  EXPECT_TRUE(g.edge(c).is_self_loop());
  EXPECT_FALSE(g.edge(a).is_self_loop());
  EXPECT_EQ(g.total_weight(), 7u);
  EXPECT_EQ(g.reversed().edge(b).tail, 1u);
  EXPECT_EQ(g.scaled(3).edge(a).weight, 12u);
  EXPECT_THROW(g.add_edge(0, 5, 1), std::out_of_range);
}

TEST(Digraph, ScalingOverflowIsDetected) {
  Digraph g(2);
  g.add_edge(0, 1, kInfiniteWeight / 2);
  EXPECT_THROW(g.scaled(3), OverflowError);
}

TEST(Walk, VerticesAndErrors) {
  Digraph g(3);
  g.add_edge(0, 1, 5);
  g.add_edge(1, 2, 1);
  g.add_edge(1, 2, 7);
  const Walk w = walk_from_vertices(g, std::vector<VertexId>{0, 1, 2});
  EXPECT_EQ(w.edges, (std::vector<EdgeId>{0, 1}));
  EXPECT_EQ(walk_weight(g, w), 6u);
  EXPECT_EQ(walk_end(g, w), 2u);
  EXPECT_TRUE(is_vertex_simple(g, w));
  EXPECT_THROW(walk_end(g, Walk{0, {1}}), WalkError);
  EXPECT_THROW(walk_from_vertices(g, std::vector<VertexId>{2, 0}), WalkError);
}

TEST(PhiCost, DisjointPathsSum) {
  const Instance inst = two_cycle(5, 3);
  EXPECT_EQ(evaluate_phi_cost(inst, std::vector<Walk>{{0, {0}}}, std::vector<Walk>{{1, {1}}}), 8u);
}

TEST(PhiCost, ForwardMultiplicityCounts) {
  const Instance inst = two_cycle(5, 3, 2, 1);
  EXPECT_EQ(evaluate_phi_cost(inst, std::vector<Walk>{{0, {0}}, {0, {0}}}, std::vector<Walk>{{1, {1}}}), 13u);
}

TEST(PhiCost, SharedEdgeCountsOnce) {
  // s=0, t=1, x=2, y=3; both directions cross x -> y.
  Digraph g(4);
  g.add_edge(0, 2, 1);
  g.add_edge(2, 3, 5);
  g.add_edge(3, 1, 1);
  g.add_edge(1, 2, 1);
  g.add_edge(3, 0, 1);
  const Instance inst{std::move(g), 0, 1, 1, 1};
  EXPECT_EQ(evaluate_phi_cost(inst, std::vector<Walk>{{0, {0, 1, 2}}}, std::vector<Walk>{{1, {3, 1, 4}}}), 9u);
}

TEST(PhiCost, RejectsBadWalks) {
  const Instance inst = two_cycle(5, 3);
  EXPECT_THROW(evaluate_phi_cost(inst, std::vector<Walk>{{1, {1}}}, std::vector<Walk>{{1, {1}}}), WalkError);
  EXPECT_THROW(evaluate_phi_cost(inst, std::vector<Walk>{}, std::vector<Walk>{{1, {1}}}), WalkError);
}

TEST(PhiCost, CounterexampleSolutionWeighs22) {
  const Instance fixture = build_counterexample();
  EXPECT_EQ(evaluate_phi_cost(fixture, counterexample_solution(fixture)), 22u);
}

TEST(PhiCost, MonotoneAndScaleEquivariant) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = random_instance({6, 12, 10, 1, 1, seed, true});
    const auto fwd = enumerate_simple_paths(inst.graph, inst.s, inst.t, 1000);
    const auto bwd = enumerate_simple_paths(inst.graph, inst.t, inst.s, 1000);
    ASSERT_TRUE(fwd && bwd && !fwd->empty() && !bwd->empty());
    std::vector<Walk> f{fwd->front()};
    std::vector<Walk> b{bwd->back()};
    const Weight base = phi_cost(inst.graph, inst.s, inst.t, f, b);
    f.push_back(fwd->back());
    EXPECT_GE(phi_cost(inst.graph, inst.s, inst.t, f, b), base);
    b.push_back(bwd->front());
    const Weight more = phi_cost(inst.graph, inst.s, inst.t, f, b);
    EXPECT_EQ(phi_cost(inst.graph.scaled(4), inst.s, inst.t, f, b), 4 * more);
  }
}

TEST(ShortestPaths, ChainAndSelfDistance) {
  Digraph g(3);
  g.add_edge(0, 2, 2);
  g.add_edge(2, 1, 3);
  const ShortestPathTable table = all_pairs_shortest_paths(g);
  EXPECT_EQ(table.distance(0, 1), 5u);
  for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(table.distance(v, v), 0u);
  EXPECT_FALSE(table.reachable(1, 0));
  EXPECT_FALSE(table.path(1, 0).has_value());
  EXPECT_EQ(table.path(0, 1)->edges, (std::vector<EdgeId>{0, 1}));
}

TEST(ShortestPaths, MatchesBellmanFordOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = random_instance({8, 14, 10, 1, 1, seed, seed % 2 == 0});
    const ShortestPathTable table = all_pairs_shortest_paths(inst.graph);
    const auto expected = testing::bellman_ford_all_pairs(inst.graph);
    for (VertexId u = 0; u < 8; ++u) {
      for (VertexId v = 0; v < 8; ++v) {
        ASSERT_EQ(table.distance(u, v), expected[u][v]) << "seed " << seed << " pair " << u << "," << v;
        if (!table.reachable(u, v)) continue;
        const auto path = table.path(u, v);
        ASSERT_TRUE(path.has_value());
        EXPECT_EQ(path->start, u);
        EXPECT_EQ(walk_end(inst.graph, *path), v);
        EXPECT_EQ(walk_weight(inst.graph, *path), table.distance(u, v));
        for (VertexId w = 0; w < 8; ++w) {
          if (table.reachable(v, w)) {
            EXPECT_LE(table.distance(u, w), table.distance(u, v) + table.distance(v, w));
          }
        }
      }
    }
  }
}

TEST(InstanceIo, ParsesMinimalInstance) {
  const Instance inst = parse_instance("scss 2 1 1 1\ns 0\nt 1\ne 0 1 4\n");
  EXPECT_EQ(inst.graph.num_vertices(), 2u);
  EXPECT_EQ(inst.graph.num_edges(), 1u);
  EXPECT_EQ(inst.graph.edge(0).weight, 4u);
  EXPECT_EQ(inst.k1, 1);
}

TEST(InstanceIo, RoundTrip) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = random_instance({7, 13, 20, 2, 3, seed, false});
    const std::string text = serialize_instance(inst);
    const Instance back = parse_instance(text);
    EXPECT_EQ(serialize_instance(back), text);
    EXPECT_EQ(back.k2, 3);
  }
}

TEST(InstanceIo, CounterexampleFileShape) {
  const Instance fixture = parse_instance(serialize_instance(build_counterexample()));
  EXPECT_EQ(fixture.graph.num_vertices(), 22u);
  EXPECT_EQ(fixture.graph.num_edges(), 30u);
}

std::size_t error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

TEST(InstanceIo, DiagnosticsCarryLineNumbers) {
  EXPECT_EQ(error_line("scsx 2 1 1 1\ns 0\nt 1\ne 0 1 4\n"), 1u);
  EXPECT_EQ(error_line("scss 2 1 1 1\ns 0\nt 1\ne 0 7 4\n"), 4u);
  EXPECT_EQ(error_line("scss 2 1 1 1\ns 0\nt 1\ne 0 1 -4\n"), 4u);
  EXPECT_EQ(error_line("scss 2 1 1 1\ns 0\ns 1\nt 1\ne 0 1 4\n"), 3u);
  EXPECT_EQ(error_line("# comment\nscss 2 2 1 1\ns 0\nt 1\ne 0 1 4\n"), 5u);
  EXPECT_EQ(error_line("scss 2 1 1 1\ns 0\nt 1\ne 0 1 4 9\n"), 4u);
}

TEST(SolutionIo, RoundTripAndJson) {
  const Instance fixture = build_counterexample();
  const Solution sol = counterexample_solution(fixture);
  const std::string text = serialize_solution(fixture.graph, sol);
  const Solution back = parse_solution(fixture.graph, text);
  EXPECT_EQ(back.cost, 22u);
  EXPECT_EQ(back.forward, sol.forward);
  EXPECT_EQ(back.backward, sol.backward);
  const auto json = solution_to_json(fixture.graph, sol);
  EXPECT_EQ(json["cost"], 22);
  EXPECT_EQ(json["backward"].size(), 2u);
}

TEST(Transforms, VertexSplitCountsAndSingleVertex) {
  Digraph g(3);
  g.add_edge(0, 2, 0);
  g.add_edge(2, 1, 0);
  g.add_edge(1, 0, 0);
  VertexWeightedInstance vw{std::move(g), {0, 0, 7}, 0, 1, 1, 1};
  const VertexSplit split = vertex_to_edge_weighted(vw);
  EXPECT_EQ(split.instance.graph.num_vertices(), 2u * (3 - 2) + 2);
  EXPECT_EQ(split.instance.graph.num_edges(), 3u + (3 - 2));
  EXPECT_EQ(oracle_opt(split.instance).cost, 7u);
  vw.k1 = 2;
  EXPECT_EQ(oracle_opt(vertex_to_edge_weighted(vw).instance).cost, 14u);
}

TEST(Transforms, SubdivisionCounts) {
  Digraph g(2);
  g.add_edge(0, 1, 4);
  const EdgeSubdivision sub = edge_to_vertex_weighted(Instance{std::move(g), 0, 1, 1, 1});
  EXPECT_EQ(sub.instance.graph.num_vertices(), 3u);
  EXPECT_EQ(sub.instance.graph.num_edges(), 2u);
  EXPECT_EQ(sub.instance.vertex_weight[sub.edge_vertex[0]], 4u);
  const Instance random = random_instance({5, 9, 10, 1, 1, 3, false});
  const EdgeSubdivision big = edge_to_vertex_weighted(random);
  EXPECT_EQ(big.instance.graph.num_vertices(), 5u + 9u);
  EXPECT_EQ(big.instance.graph.num_edges(), 2u * 9u);
}

VertexWeightedInstance random_vertex_weighted(std::uint64_t seed) {
  const Instance base = random_instance({6, 11, 0, 1, 1, seed, true});
  SeededRng rng(seed * 7919);
  VertexWeightedInstance vw{base.graph, std::vector<Weight>(6), 0, 1, 1 + static_cast<int>(seed % 2), 1};
  for (Weight& w : vw.vertex_weight) w = rng.between(0, 9);
  return vw;
}

TEST(Transforms, PreserveOptimum) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const VertexWeightedInstance vw = random_vertex_weighted(seed);
    const OracleResult direct = exhaustive_opt(vw);
    const OracleResult split = oracle_opt(vertex_to_edge_weighted(vw).instance);
    ASSERT_EQ(direct.status, OracleStatus::kOptimal);
    EXPECT_EQ(split.cost, direct.cost) << "seed " << seed;

    const Instance ew = random_instance({6, 10, 10, 1, 1, seed, true});
    const EdgeSubdivision sub = edge_to_vertex_weighted(ew);
    EXPECT_EQ(exhaustive_opt(sub.instance).cost, oracle_opt(ew).cost) << "seed " << seed;
    EXPECT_EQ(oracle_opt(vertex_to_edge_weighted(sub.instance).instance).cost, oracle_opt(ew).cost);
  }
}

}  // namespace
}  // namespace scss
