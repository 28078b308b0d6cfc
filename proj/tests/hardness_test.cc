#include <gtest/gtest.h>

#include "scss/cost.h"
#include "scss/hardness.h"
#include "scss/instance_io.h"
#include "scss/random_instance.h"
#include "testing/reference.h"

namespace scss {
namespace {

SimpleGraph path_graph(int n) {
  SimpleGraph g{n, {}};
  for (int a = 1; a < n; ++a) g.edges.emplace_back(a, a + 1);
  return g;
}

// Star instance with no solution: S(1,2) and S(2,1) disagree on delta_2.
GridTilingInstance mismatched_star() {
  GridTilingInstance star = clique_to_gridtiling(complete_graph(2), 2);
  star.clear(1, 2);
  star.clear(2, 1);
  star.add(1, 2, 1, 2);
  star.add(2, 1, 1, 2);
  return star;
}

TEST(CliqueToGridTiling, TriangleIsYesInstance) {
  const GridTilingInstance star = clique_to_gridtiling(complete_graph(3), 3);
  EXPECT_TRUE(star.is_star());
  EXPECT_EQ(star.cell(1, 2).size(), 6u);
  EXPECT_EQ(gridtiling_bruteforce(star), (std::vector<int>{1, 2, 3}));
}

TEST(CliqueToGridTiling, PathGraphHasNoTriangle) {
  EXPECT_EQ(gridtiling_bruteforce(clique_to_gridtiling(path_graph(3), 3)), std::nullopt);
}

TEST(CliqueToGridTiling, RejectsEdgelessSource) {
  EXPECT_THROW(clique_to_gridtiling(SimpleGraph{3, {}}, 2), std::invalid_argument);
}

TEST(GridTilingBruteforce, EmptiedCellHasNoSolution) {
  GridTilingInstance star = clique_to_gridtiling(complete_graph(3), 2);
  star.clear(2, 1);
  EXPECT_EQ(gridtiling_bruteforce(star), std::nullopt);
  EXPECT_THROW(star.validate(), std::invalid_argument);
}

TEST(GridTilingBruteforce, BudgetExceeded) {
  EXPECT_THROW(gridtiling_bruteforce(clique_to_gridtiling(complete_graph(10), 5), 1000), BudgetExceeded);
}

TEST(GridTilingBruteforce, AgreesWithPropagation) {
  SeededRng rng(2024);
  int solvable = 0;
  for (int trial = 0; trial < 50; ++trial) {
    GridTilingInstance star(2, 3);
    for (int i = 1; i <= 2; ++i) {
      for (int l = 1; l <= 3; ++l) star.add(i, i, l, l);
    }
    for (auto [i, j] : {std::pair{1, 2}, {2, 1}}) {
      const int size = 1 + static_cast<int>(rng.below(3));
      for (int p = 0; p < size; ++p) {
        star.add(i, j, 1 + static_cast<int>(rng.below(3)), 1 + static_cast<int>(rng.below(3)));
      }
    }
    const auto brute = gridtiling_bruteforce(star);
    EXPECT_EQ(brute, testing::gridtiling_propagate(star)) << "trial " << trial;
    solvable += brute.has_value();
  }
  EXPECT_GT(solvable, 0);
  EXPECT_LT(solvable, 50);
}

TEST(GridTiling, DummyIndexShiftsPairs) {
  const GridTilingInstance shifted = add_dummy_index(clique_to_gridtiling(complete_graph(2), 2));
  EXPECT_EQ(shifted.n(), 3);
  EXPECT_EQ(shifted.cell(1, 1), (std::vector<GridTilingInstance::Pair>{{2, 2}, {3, 3}}));
  EXPECT_EQ(shifted.cell(1, 2), (std::vector<GridTilingInstance::Pair>{{2, 3}, {3, 2}}));
}

TEST(SimpleGraphFile, ParsesAndRejects) {
  const SimpleGraph g = parse_simple_graph("# triangle\ngraph 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(g.n, 3);
  EXPECT_TRUE(g.adjacent(3, 1));
  EXPECT_FALSE(path_graph(3).adjacent(1, 3));
  EXPECT_THROW(parse_simple_graph("graph 3 1\ne 1 4\n"), ParseError);
  EXPECT_THROW(parse_simple_graph("graph 3 2\ne 1 2\n"), ParseError);
  EXPECT_THROW(parse_simple_graph("e 1 2\n"), ParseError);
}

TEST(GadgetParams, SmallestPipelineValues) {
  const GadgetParams p = compute_gadget_params(2, 3);
  EXPECT_EQ(p.delta, 5103u);
  EXPECT_EQ(p.connector, 1'043'199u);
  EXPECT_EQ(p.alpha, 35'749u);
  EXPECT_EQ(p.beta, 1'186'189u);
  EXPECT_EQ(p.beta, 2 * 2 * p.alpha + p.connector * (2 - 1) - (2 * 2 + 2));
}

TEST(GadgetParams, BlueWeightsSumToConstant) {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 2; n <= 6; ++n) {
      const GadgetParams p = compute_gadget_params(k, n);
      for (int i = 1; i <= k; ++i) {
        for (int l = 1; l <= n; ++l) {
          EXPECT_EQ(p.first_blue(i, l) + p.last_blue(i, l), p.delta * static_cast<Weight>(n * k + 1));
        }
      }
    }
  }
}

TEST(GadgetParams, RejectsLargeN) {
  EXPECT_NO_THROW(compute_gadget_params(3, GadgetParams::kMaxN));
  EXPECT_THROW(compute_gadget_params(2, GadgetParams::kMaxN + 1), std::invalid_argument);
}

void expect_layout_invariants(const HardnessInstance& hard) {
  const Digraph& g = hard.instance.graph;
  const GadgetLayout& layout = hard.layout;
  const int k = hard.params.k;
  const int n = hard.params.n;
  ASSERT_EQ(layout.canonical_paths.size(), static_cast<std::size_t>(2 * k * n));
  for (const CanonicalPath& path : layout.canonical_paths) {
    EXPECT_EQ(walk_weight(g, path.walk), hard.params.alpha);
    EXPECT_TRUE(is_vertex_simple(g, path.walk));
  }
  for (const Shortcut& sc : layout.shortcuts) {
    EXPECT_GE(sc.x, 2);
    EXPECT_GE(sc.y, 2);
    EXPECT_EQ(g.edge(sc.shortcut).weight, sc.green ? GadgetParams::kGreen : GadgetParams::kOrange);
    EXPECT_EQ(g.edge(sc.upper_half).weight + g.edge(sc.lower_half).weight, GadgetParams::kBlack);
    EXPECT_EQ(sc.green, sc.i == sc.j);
  }
  for (const Edge& e : g.edges()) {
    const VertexLabel& a = layout.labels[e.tail];
    const VertexLabel& b = layout.labels[e.head];
    const bool inner = (a.role == VertexRole::kGrid || a.role == VertexRole::kShortcut) &&
                       (b.role == VertexRole::kGrid || b.role == VertexRole::kShortcut) && a.i == b.i && a.j == b.j;
    if (!inner) continue;
    EXPECT_GE(b.x, a.x);
    EXPECT_GE(b.y, a.y);
  }
}

TEST(GridTilingToScss, SmallestYesInstance) {
  const GridTilingInstance star = clique_to_gridtiling(complete_graph(2), 2);
  const HardnessInstance hard = gridtiling_to_scss(star);
  EXPECT_EQ(hard.instance.k1, 3);
  EXPECT_EQ(hard.instance.k2, 1);
  EXPECT_EQ(hard.params.n, 3);
  EXPECT_EQ(hard.params.beta, 1'186'189u);
  EXPECT_EQ(hard.layout.shortcuts.size(), 2u * 2u + 2u * 2u);
  expect_layout_invariants(hard);
  EXPECT_EQ(hard.layout.shortcut_at(1, 1, 1, 1), nullptr);
  ASSERT_NE(hard.layout.shortcut_at(1, 2, 2, 3), nullptr);
  EXPECT_FALSE(hard.layout.shortcut_at(1, 2, 2, 3)->green);
}

TEST(GridTilingToScss, RejectsNonStar) {
  GridTilingInstance star = clique_to_gridtiling(complete_graph(2), 2);
  star.add(1, 1, 1, 2);
  EXPECT_THROW(gridtiling_to_scss(star), std::invalid_argument);
}

TEST(YesWitness, WeighsExactlyBeta) {
  for (int k = 2; k <= 3; ++k) {
    const GridTilingInstance star = clique_to_gridtiling(complete_graph(k), k);
    const HardnessInstance hard = gridtiling_to_scss(star);
    expect_layout_invariants(hard);
    const auto delta = gridtiling_bruteforce(star);
    ASSERT_TRUE(delta.has_value());
    const Solution witness = yes_witness(hard, *delta);
    EXPECT_EQ(witness.forward.size(), static_cast<std::size_t>(2 * k - 1));
    EXPECT_EQ(evaluate_phi_cost(hard.instance, witness), hard.params.beta) << "k " << k;
    EXPECT_EQ(witness.cost, hard.params.beta);
  }
}

TEST(YesWitness, ShortcutSavings) {
  const GridTilingInstance star = clique_to_gridtiling(complete_graph(2), 2);
  const HardnessInstance hard = gridtiling_to_scss(star);
  const Digraph& g = hard.instance.graph;
  const Solution witness = yes_witness(hard, std::vector<int>{1, 2});
  // Undo one shortcut at a time on the backward walk: u->q->r becomes u->r.
  for (const Shortcut& sc : hard.layout.shortcuts) {
    const auto& edges = witness.backward[0].edges;
    const auto at = std::find(edges.begin(), edges.end(), sc.shortcut);
    if (at == edges.end()) continue;
    const VertexId u = g.edge(sc.shortcut).tail;
    const VertexId r = g.edge(sc.lower_half).head;
    Solution plain = witness;
    auto& b = plain.backward[0].edges;
    const auto pos = b.begin() + (at - edges.begin());
    *pos = walk_from_vertices(g, std::vector<VertexId>{u, r}).edges.front();
    b.erase(pos + 1);
    EXPECT_EQ(evaluate_phi_cost(hard.instance, plain), hard.params.beta + (sc.green ? 2u : 1u));
  }
}

TEST(YesWitness, RejectsNonSolution) {
  const GridTilingInstance star = clique_to_gridtiling(complete_graph(2), 2);
  const HardnessInstance hard = gridtiling_to_scss(star);
  EXPECT_THROW(yes_witness(hard, std::vector<int>{1, 1}), std::invalid_argument);
  EXPECT_THROW(yes_witness(hard, std::vector<int>{1}), std::invalid_argument);
}

TEST(Certify, ConsistencyVerdicts) {
  const GridTilingInstance yes = clique_to_gridtiling(complete_graph(2), 2);
  const HardnessInstance hard_yes = gridtiling_to_scss(yes);
  const Certificate c = certify(hard_yes, yes, hard_yes.params.beta);
  EXPECT_TRUE(c.within_beta);
  EXPECT_EQ(c.tiling_solvable, true);
  EXPECT_TRUE(c.consistent);

  const GridTilingInstance no = mismatched_star();
  const HardnessInstance hard_no = gridtiling_to_scss(no);
  expect_layout_invariants(hard_no);
  EXPECT_TRUE(certify(hard_no, no, hard_no.params.beta + 1).consistent);
  EXPECT_FALSE(certify(hard_no, no, hard_no.params.beta).consistent);
}

TEST(Certify, JsonRecord) {
  const HardnessInstance hard = gridtiling_to_scss(clique_to_gridtiling(complete_graph(2), 2));
  const auto json = certificate_json(hard);
  EXPECT_EQ(json["beta"], 1'186'189);
  EXPECT_EQ(json["alpha"], 35'749);
  EXPECT_EQ(json["delta"], 5103);
  EXPECT_EQ(json["W"], 1'043'199);
  EXPECT_EQ(json["n_eff"], 3);
  EXPECT_EQ(json["canonical_paths"].size(), 12u);
  EXPECT_EQ(json["canonical_paths"][0]["weight"], 35'749);
}

}  // namespace
}  // namespace scss
