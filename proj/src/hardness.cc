#include "scss/hardness.h"

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>

#include "scss/cost.h"
#include "scss/instance_io.h"

namespace scss {

bool SimpleGraph::adjacent(int a, int b) const {
  return std::any_of(edges.begin(), edges.end(), [&](const std::pair<int, int>& e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g{n, {}};
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) g.edges.emplace_back(a, b);
  }
  return g;
}

SimpleGraph parse_simple_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> expected_edges;
  SimpleGraph g;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword) || keyword.front() == '#') continue;
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) throw ParseError(line_no, "expected '" + keyword + " <int> <int>'");
    if (keyword == "graph") {
      if (expected_edges) throw ParseError(line_no, "duplicate header");
      if (a < 0 || b < 0 || a > GadgetParams::kMaxN * 100) throw ParseError(line_no, "bad graph size");
      g.n = static_cast<int>(a);
      expected_edges = static_cast<std::size_t>(b);
    } else if (keyword == "e") {
      if (!expected_edges) throw ParseError(line_no, "edge before header");
      if (a < 1 || b < 1 || a > g.n || b > g.n) throw ParseError(line_no, "vertex out of range 1.." + std::to_string(g.n));
      if (a == b) throw ParseError(line_no, "self-loop in simple graph");
      g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    } else {
      throw ParseError(line_no, "unknown record '" + keyword + "'");
    }
  }
  if (!expected_edges) throw ParseError(0, "missing 'graph <n> <m>' header");
  if (g.edges.size() != *expected_edges) {
    throw ParseError(0, "header declares " + std::to_string(*expected_edges) + " edges, found " +
                            std::to_string(g.edges.size()));
  }
  return g;
}

GridTilingInstance::GridTilingInstance(int k, int n) : k_(k), n_(n) {
  if (k < 1 || n < 1) throw std::invalid_argument("grid tiling needs k >= 1 and n >= 1");
  sets_.resize(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
}

std::size_t GridTilingInstance::slot(int i, int j) const {
  if (i < 1 || i > k_ || j < 1 || j > k_) throw std::out_of_range("grid tiling cell out of range");
  return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j - 1);
}

void GridTilingInstance::add(int i, int j, int x, int y) {
  if (x < 1 || x > n_ || y < 1 || y > n_) throw std::out_of_range("grid tiling pair out of range");
  auto& set = sets_[slot(i, j)];
  const Pair pair{x, y};
  const auto it = std::lower_bound(set.begin(), set.end(), pair);
  if (it == set.end() || *it != pair) set.insert(it, pair);
}

void GridTilingInstance::clear(int i, int j) { sets_[slot(i, j)].clear(); }

bool GridTilingInstance::contains(int i, int j, int x, int y) const {
  const auto& set = sets_[slot(i, j)];
  return std::binary_search(set.begin(), set.end(), Pair{x, y});
}

bool GridTilingInstance::is_star() const {
  for (int i = 1; i <= k_; ++i) {
    const auto& set = cell(i, i);
    if (set.size() != static_cast<std::size_t>(n_)) return false;
    for (int l = 1; l <= n_; ++l) {
      if (set[static_cast<std::size_t>(l - 1)] != Pair{l, l}) return false;
    }
  }
  return true;
}

void GridTilingInstance::validate() const {
  for (int i = 1; i <= k_; ++i) {
    for (int j = 1; j <= k_; ++j) {
      if (cell(i, j).empty()) {
        throw std::invalid_argument("grid tiling set S(" + std::to_string(i) + "," + std::to_string(j) + ") is empty");
      }
    }
  }
}

GridTilingInstance clique_to_gridtiling(const SimpleGraph& graph, int k) {
  if (graph.n < 1) throw std::invalid_argument("clique source graph has no vertices");
  if (k >= 2 && graph.edges.empty()) throw std::invalid_argument("clique source graph has no edges");
  GridTilingInstance out(k, graph.n);
  for (int i = 1; i <= k; ++i) {
    for (int l = 1; l <= graph.n; ++l) out.add(i, i, l, l);
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      for (const auto& [a, b] : graph.edges) {
        out.add(i, j, a, b);
        out.add(i, j, b, a);
      }
    }
  }
  return out;
}

std::optional<std::vector<int>> gridtiling_bruteforce(const GridTilingInstance& instance, std::size_t budget) {
  const int k = instance.k();
  const int n = instance.n();
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > budget / static_cast<std::size_t>(n)) {
      throw BudgetExceeded("grid tiling brute force needs n^k = " + std::to_string(n) + "^" + std::to_string(k) +
                           " assignments, budget is " + std::to_string(budget));
    }
    total *= static_cast<std::size_t>(n);
  }
  std::vector<int> delta(static_cast<std::size_t>(k), 1);
  while (true) {
    bool ok = true;
    for (int i = 1; i <= k && ok; ++i) {
      for (int j = 1; j <= k && ok; ++j) ok = instance.contains(i, j, delta[i - 1], delta[j - 1]);
    }
    if (ok) return delta;
    int p = k - 1;
    while (p >= 0 && delta[p] == n) delta[p--] = 1;
    if (p < 0) return std::nullopt;
    ++delta[p];
  }
}

GridTilingInstance add_dummy_index(const GridTilingInstance& instance) {
  GridTilingInstance out(instance.k(), instance.n() + 1);
  for (int i = 1; i <= instance.k(); ++i) {
    for (int j = 1; j <= instance.k(); ++j) {
      for (const auto& [x, y] : instance.cell(i, j)) out.add(i, j, x + 1, y + 1);
    }
  }
  return out;
}

Weight GadgetParams::first_blue(int index, int track) const {
  const auto nk = static_cast<Weight>(n) * static_cast<Weight>(k);
  return delta * (nk - static_cast<Weight>(n) * static_cast<Weight>(index) + static_cast<Weight>(n) + 1 -
                  static_cast<Weight>(track));
}

Weight GadgetParams::last_blue(int index, int track) const {
  return delta * (static_cast<Weight>(n) * static_cast<Weight>(index) - static_cast<Weight>(n) +
                  static_cast<Weight>(track));
}

GadgetParams compute_gadget_params(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("gadget parameters need k >= 1 and n >= 1");
  if (n > GadgetParams::kMaxN) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the supported maximum " +
                                std::to_string(GadgetParams::kMaxN));
  }
  const auto wn = static_cast<Weight>(n);
  const auto wk = static_cast<Weight>(k);
  auto power = [](Weight base, int e) {
    Weight out = 1;
    for (int i = 0; i < e; ++i) out = checked_mul(out, base);
    return out;
  };
  GadgetParams p;
  p.k = k;
  p.n = n;
  p.delta = checked_mul(7, power(wn, 6));
  p.connector = checked_mul(53, power(wn, 9));
  p.alpha = checked_add(checked_add(checked_mul(p.delta, checked_add(checked_mul(wn, wk), 1)),
                                    checked_mul(GadgetParams::kBlack, wk + 1)),
                        checked_mul(checked_mul(GadgetParams::kBlack, wk), wn - 1));
  const Weight gross = checked_add(checked_mul(checked_mul(2, wk), p.alpha), checked_mul(p.connector, wk - 1));
  p.beta = gross - (wk * wk + wk);
  return p;
}

VertexId GadgetLayout::grid(int i, int j, int x, int y) const {
  const auto k = static_cast<std::size_t>(k_);
  const auto n = static_cast<std::size_t>(n_);
  const std::size_t offset = (((static_cast<std::size_t>(i - 1) * k + static_cast<std::size_t>(j - 1)) * n +
                               static_cast<std::size_t>(x - 1)) * n) + static_cast<std::size_t>(y - 1);
  return static_cast<VertexId>(grid_base_ + offset);
}

const CanonicalPath& GadgetLayout::canonical(Orientation orientation, int index, int track) const {
  const auto k = static_cast<std::size_t>(k_);
  const auto n = static_cast<std::size_t>(n_);
  if (index < 1 || index > k_ || track < 1 || track > n_) throw std::out_of_range("canonical path id out of range");
  const std::size_t base = orientation == Orientation::kVertical ? k * n : 0;
  return canonical_paths.at(base + static_cast<std::size_t>(index - 1) * n + static_cast<std::size_t>(track - 1));
}

const Shortcut* GadgetLayout::shortcut_at(int i, int j, int x, int y) const {
  const std::size_t at = shortcut_index_.at(grid(i, j, x, y) - grid_base_);
  return at == std::numeric_limits<std::size_t>::max() ? nullptr : &shortcuts[at];
}

struct LayoutBuilder {
  const GridTilingInstance& tiling;
  const GadgetParams& params;
  Digraph graph{2};
  GadgetLayout layout;
  // Entry/exit vertices per (index, track).
  std::vector<VertexId> row_entry, row_exit, column_entry, column_exit;

  int k() const { return params.k; }
  int n() const { return params.n; }

  VertexId add(VertexLabel label) {
    layout.labels.push_back(label);
    return graph.add_vertex();
  }

  std::size_t track_slot(int index, int track) const {
    return static_cast<std::size_t>(index - 1) * static_cast<std::size_t>(n()) + static_cast<std::size_t>(track - 1);
  }

  void add_vertices() {
    layout.k_ = k();
    layout.n_ = n();
    layout.labels = {{VertexRole::kSource}, {VertexRole::kSink}};
    for (int i = 1; i <= k(); ++i) layout.row_start_.push_back(add({VertexRole::kRowStart, i}));
    for (int i = 1; i <= k(); ++i) layout.row_end_.push_back(add({VertexRole::kRowEnd, i}));
    for (int j = 1; j <= k(); ++j) layout.column_start_.push_back(add({VertexRole::kColumnStart, 0, j}));
    for (int j = 1; j <= k(); ++j) layout.column_end_.push_back(add({VertexRole::kColumnEnd, 0, j}));
    for (int i = 2; i <= k(); ++i) layout.connector_in_.push_back(add({VertexRole::kConnectorIn, i}));
    for (int i = 2; i <= k(); ++i) layout.connector_out_.push_back(add({VertexRole::kConnectorOut, i}));
    for (int i = 1; i <= k(); ++i) {
      for (int x = 1; x <= n(); ++x) row_entry.push_back(add({VertexRole::kRowEntry, i, 0, x}));
    }
    for (int i = 1; i <= k(); ++i) {
      for (int x = 1; x <= n(); ++x) row_exit.push_back(add({VertexRole::kRowExit, i, 0, x}));
    }
    for (int j = 1; j <= k(); ++j) {
      for (int y = 1; y <= n(); ++y) column_entry.push_back(add({VertexRole::kColumnEntry, 0, j, 0, y}));
    }
    for (int j = 1; j <= k(); ++j) {
      for (int y = 1; y <= n(); ++y) column_exit.push_back(add({VertexRole::kColumnExit, 0, j, 0, y}));
    }
    layout.grid_base_ = static_cast<VertexId>(graph.num_vertices());
    for (int i = 1; i <= k(); ++i) {
      for (int j = 1; j <= k(); ++j) {
        for (int x = 1; x <= n(); ++x) {
          for (int y = 1; y <= n(); ++y) add({VertexRole::kGrid, i, j, x, y});
        }
      }
    }
    layout.shortcut_index_.assign(graph.num_vertices() - layout.grid_base_, std::numeric_limits<std::size_t>::max());
  }

  // Shortcut positions: the diagonal of every symmetric gadget and S(i,j)
  // elsewhere; the dummy index guarantees x, y >= 2.
  bool has_shortcut(int i, int j, int x, int y) const { return tiling.contains(i, j, x, y); }

  void add_fixed_edges() {
    const VertexId s = 0;
    const VertexId t = 1;
    for (int j = 1; j <= k(); ++j) graph.add_edge(s, layout.column_start(j), 0);
    for (int j = 1; j <= k(); ++j) graph.add_edge(layout.column_end(j), t, 0);
    graph.add_edge(t, layout.row_start(k()), 0);
    graph.add_edge(layout.row_end(1), s, 0);
    for (int i = 2; i <= k(); ++i) {
      graph.add_edge(s, layout.connector_in(i), 0);
      graph.add_edge(layout.connector_out(i), t, 0);
      graph.add_edge(layout.row_end(i), layout.connector_in(i), 0);
      layout.connector_edges.push_back(graph.add_edge(layout.connector_in(i), layout.connector_out(i), params.connector));
      graph.add_edge(layout.connector_out(i), layout.row_start(i - 1), 0);
    }
  }

  void add_rows() {
    for (int i = 1; i <= k(); ++i) {
      for (int x = 1; x <= n(); ++x) {
        const VertexId entry = row_entry[track_slot(i, x)];
        const VertexId exit = row_exit[track_slot(i, x)];
        graph.add_edge(layout.row_start(i), entry, params.first_blue(i, x));
        graph.add_edge(entry, layout.grid(i, 1, x, 1), GadgetParams::kBlack);
        for (int j = 1; j <= k(); ++j) {
          for (int y = 1; y < n(); ++y) {
            graph.add_edge(layout.grid(i, j, x, y), layout.grid(i, j, x, y + 1), GadgetParams::kBlack);
          }
          const VertexId next = j < k() ? layout.grid(i, j + 1, x, 1) : exit;
          graph.add_edge(layout.grid(i, j, x, n()), next, GadgetParams::kBlack);
        }
        graph.add_edge(exit, layout.row_end(i), params.last_blue(i, x));
      }
    }
  }

  void add_columns() {
    for (int j = 1; j <= k(); ++j) {
      for (int y = 1; y <= n(); ++y) {
        const VertexId entry = column_entry[track_slot(j, y)];
        const VertexId exit = column_exit[track_slot(j, y)];
        graph.add_edge(layout.column_start(j), entry, params.first_blue(j, y));
        graph.add_edge(entry, layout.grid(1, j, 1, y), GadgetParams::kBlack);
        for (int i = 1; i <= k(); ++i) {
          for (int x = 1; x < n(); ++x) add_vertical(i, j, x, y);
          const VertexId next = i < k() ? layout.grid(i + 1, j, 1, y) : exit;
          graph.add_edge(layout.grid(i, j, n(), y), next, GadgetParams::kBlack);
        }
        graph.add_edge(exit, layout.column_end(j), params.last_blue(j, y));
      }
    }
  }

  // Vertical edge into grid vertex (i, j, x + 1, y), subdivided when that
  // vertex carries a shortcut.
  void add_vertical(int i, int j, int x, int y) {
    const VertexId p = layout.grid(i, j, x, y);
    const VertexId r = layout.grid(i, j, x + 1, y);
    if (!has_shortcut(i, j, x + 1, y)) {
      graph.add_edge(p, r, GadgetParams::kBlack);
      return;
    }
    Shortcut sc;
    sc.i = i;
    sc.j = j;
    sc.x = x + 1;
    sc.y = y;
    sc.green = i == j;
    sc.q = add({VertexRole::kShortcut, i, j, x + 1, y});
    sc.upper_half = graph.add_edge(p, sc.q, GadgetParams::kHalf);
    sc.lower_half = graph.add_edge(sc.q, r, GadgetParams::kHalf);
    layout.shortcut_index_[r - layout.grid_base_] = layout.shortcuts.size();
    layout.shortcuts.push_back(sc);
  }

  void add_shortcut_edges() {
    for (Shortcut& sc : layout.shortcuts) {
      const VertexId u = layout.grid(sc.i, sc.j, sc.x, sc.y - 1);
      sc.shortcut = graph.add_edge(u, sc.q, sc.green ? GadgetParams::kGreen : GadgetParams::kOrange);
    }
  }

  void add_canonical_paths() {
    for (int i = 1; i <= k(); ++i) {
      for (int x = 1; x <= n(); ++x) {
        std::vector<VertexId> vertices{layout.row_start(i), row_entry[track_slot(i, x)]};
        for (int j = 1; j <= k(); ++j) {
          for (int y = 1; y <= n(); ++y) vertices.push_back(layout.grid(i, j, x, y));
        }
        vertices.push_back(row_exit[track_slot(i, x)]);
        vertices.push_back(layout.row_end(i));
        layout.canonical_paths.push_back(
            {{Orientation::kHorizontal, i, x}, walk_from_vertices(graph, vertices)});
      }
    }
    for (int j = 1; j <= k(); ++j) {
      for (int y = 1; y <= n(); ++y) {
        std::vector<VertexId> vertices{layout.column_start(j), column_entry[track_slot(j, y)]};
        for (int i = 1; i <= k(); ++i) {
          for (int x = 1; x <= n(); ++x) {
            if (const Shortcut* sc = layout.shortcut_at(i, j, x, y)) vertices.push_back(sc->q);
            vertices.push_back(layout.grid(i, j, x, y));
          }
        }
        vertices.push_back(column_exit[track_slot(j, y)]);
        vertices.push_back(layout.column_end(j));
        layout.canonical_paths.push_back(
            {{Orientation::kVertical, j, y}, walk_from_vertices(graph, vertices)});
      }
    }
  }
};

HardnessInstance gridtiling_to_scss(const GridTilingInstance& star) {
  if (!star.is_star()) throw std::invalid_argument("gridtiling_to_scss expects a star Grid Tiling instance");
  star.validate();
  GridTilingInstance tiling = add_dummy_index(star);
  const GadgetParams params = compute_gadget_params(star.k(), tiling.n());

  LayoutBuilder builder{tiling, params, Digraph(2), GadgetLayout{}, {}, {}, {}, {}};
  builder.add_vertices();
  builder.add_fixed_edges();
  builder.add_rows();
  builder.add_columns();
  builder.add_shortcut_edges();
  builder.add_canonical_paths();

  const int k = star.k();
  return HardnessInstance{Instance{std::move(builder.graph), 0, 1, 2 * k - 1, 1}, params,
                          std::move(builder.layout), std::move(tiling)};
}

Solution yes_witness(const HardnessInstance& hard, std::span<const int> delta) {
  const int k = hard.params.k;
  const GadgetLayout& layout = hard.layout;
  const Digraph& g = hard.instance.graph;
  if (delta.size() != static_cast<std::size_t>(k)) throw std::invalid_argument("witness needs one index per row");
  std::vector<int> shifted(delta.begin(), delta.end());
  for (int& d : shifted) ++d;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (!hard.tiling.contains(i, j, shifted[i - 1], shifted[j - 1])) {
        throw std::invalid_argument("delta does not solve the grid tiling instance");
      }
    }
  }

  auto edge = [&](VertexId a, VertexId b) { return walk_from_vertices(g, std::vector<VertexId>{a, b}).edges.front(); };

  Walk backward{1, {edge(1, layout.row_start(k))}};
  for (int i = k; i >= 1; --i) {
    const int x = shifted[i - 1];
    for (EdgeId e : layout.canonical(Orientation::kHorizontal, i, x).walk.edges) {
      const VertexLabel& head = layout.labels[g.edge(e).head];
      const Shortcut* sc = nullptr;
      if (head.role == VertexRole::kGrid && head.y == shifted[head.j - 1]) {
        sc = layout.shortcut_at(head.i, head.j, head.x, head.y);
      }
      if (sc != nullptr) {
        backward.edges.push_back(sc->shortcut);
        backward.edges.push_back(sc->lower_half);
      } else {
        backward.edges.push_back(e);
      }
    }
    if (i >= 2) {
      backward.edges.push_back(edge(layout.row_end(i), layout.connector_in(i)));
      backward.edges.push_back(layout.connector_edges[static_cast<std::size_t>(i - 2)]);
      backward.edges.push_back(edge(layout.connector_out(i), layout.row_start(i - 1)));
    }
  }
  backward.edges.push_back(edge(layout.row_end(1), 0));

  Solution solution;
  for (int i = 2; i <= k; ++i) {
    solution.forward.push_back(Walk{0,
                                    {edge(0, layout.connector_in(i)),
                                     layout.connector_edges[static_cast<std::size_t>(i - 2)],
                                     edge(layout.connector_out(i), 1)}});
  }
  for (int j = 1; j <= k; ++j) {
    Walk w{0, {edge(0, layout.column_start(j))}};
    const auto& column = layout.canonical(Orientation::kVertical, j, shifted[j - 1]).walk.edges;
    w.edges.insert(w.edges.end(), column.begin(), column.end());
    w.edges.push_back(edge(layout.column_end(j), 1));
    solution.forward.push_back(std::move(w));
  }
  solution.backward.push_back(std::move(backward));
  solution.cost = evaluate_phi_cost(hard.instance, solution);
  return solution;
}

Certificate certify(const HardnessInstance& hard, const GridTilingInstance& original, Weight cost,
                    std::size_t bruteforce_budget) {
  Certificate c;
  c.beta = hard.params.beta;
  c.cost = cost;
  c.within_beta = cost <= c.beta;
  try {
    c.tiling_solvable = gridtiling_bruteforce(original, bruteforce_budget).has_value();
  } catch (const BudgetExceeded&) {
    c.tiling_solvable = std::nullopt;
  }
  c.consistent = !c.tiling_solvable || *c.tiling_solvable == c.within_beta;
  return c;
}

nlohmann::json certificate_json(const HardnessInstance& hard) {
  const GadgetParams& p = hard.params;
  nlohmann::json paths = nlohmann::json::array();
  for (const CanonicalPath& path : hard.layout.canonical_paths) {
    paths.push_back({
        {"orientation", path.id.orientation == Orientation::kHorizontal ? "horizontal" : "vertical"},
        {"index", path.id.index},
        {"track", path.id.track},
        {"vertices", walk_vertices(hard.instance.graph, path.walk)},
        {"weight", walk_weight(hard.instance.graph, path.walk)},
    });
  }
  return {
      {"k", p.k},
      {"n", p.n - 1},
      {"n_eff", p.n},
      {"delta", p.delta},
      {"W", p.connector},
      {"alpha", p.alpha},
      {"beta", p.beta},
      {"k1", hard.instance.k1},
      {"k2", hard.instance.k2},
      {"canonical_paths", std::move(paths)},
  };
}

}  // namespace scss
