#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "scss/instance.h"

namespace scss {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 1..n (the Clique source).
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  bool adjacent(int a, int b) const;
};

SimpleGraph complete_graph(int n);

// Text form: "graph <n> <m>" then m lines "e <a> <b>" with 1-based ids.
SimpleGraph parse_simple_graph(std::string_view text);

// k x k Grid Tiling: sets S(i,j) of pairs over [n] x [n]. Row/column indices
// i, j are in 1..k and pair entries in 1..n.
class GridTilingInstance {
 public:
  using Pair = std::pair<int, int>;

  GridTilingInstance(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }

  void add(int i, int j, int x, int y);
  void clear(int i, int j);
  bool contains(int i, int j, int x, int y) const;
  // Sorted, duplicate-free.
  const std::vector<Pair>& cell(int i, int j) const { return sets_[slot(i, j)]; }

  // Star: S(i,i) = {(l,l) : l in 1..n} exactly, for every i.
  bool is_star() const;
  // Throws std::invalid_argument on an empty set.
  void validate() const;

 private:
  std::size_t slot(int i, int j) const;

  int k_;
  int n_;
  std::vector<std::vector<Pair>> sets_;
};

// Star instance of the clique reduction: (l,r) in S(i,j), i != j, iff
// {v_l, v_r} is an edge.
GridTilingInstance clique_to_gridtiling(const SimpleGraph& graph, int k);

// First delta in [n]^k (lexicographic) with (delta_i, delta_j) in S(i,j) for
// all i, j; nullopt if none. Throws BudgetExceeded when n^k > budget.
std::optional<std::vector<int>> gridtiling_bruteforce(const GridTilingInstance& instance,
                                                      std::size_t budget = 50'000'000);

// Prepends index 1 as an unused dummy: n grows by one and every pair shifts
// by (+1, +1).
GridTilingInstance add_dummy_index(const GridTilingInstance& instance);

struct GadgetParams {
  static constexpr Weight kBlack = 4;
  static constexpr Weight kHalf = 2;
  static constexpr Weight kGreen = 2;
  static constexpr Weight kOrange = 3;
  static constexpr int kMaxN = 80;

  int k = 0;
  int n = 0;  // after the dummy index
  Weight delta = 0;
  Weight connector = 0;  // W
  Weight alpha = 0;
  Weight beta = 0;

  // First / last blue edge on the track-`track` canonical path of row or
  // column `index`.
  Weight first_blue(int index, int track) const;
  Weight last_blue(int index, int track) const;
};

// Throws std::invalid_argument when n > kMaxN, OverflowError if the weights
// do not fit.
GadgetParams compute_gadget_params(int k, int n);

enum class VertexRole {
  kSource,
  kSink,
  kRowStart,      // a_i
  kRowEnd,        // b_i
  kColumnStart,   // c_j
  kColumnEnd,     // d_j
  kConnectorIn,   // e_i
  kConnectorOut,  // f_i
  kRowEntry,
  kRowExit,
  kColumnEntry,
  kColumnExit,
  kGrid,
  kShortcut,
};

// (i, j) is the gadget, (x, y) the row/column track inside it. Unused fields
// are 0.
struct VertexLabel {
  VertexRole role = VertexRole::kGrid;
  int i = 0;
  int j = 0;
  int x = 0;
  int y = 0;
};

enum class Orientation { kHorizontal, kVertical };

// Horizontal: P_index^track (a_index ~> b_index); vertical: Q_index^track.
struct CanonicalPathId {
  Orientation orientation = Orientation::kHorizontal;
  int index = 1;
  int track = 1;
};

struct CanonicalPath {
  CanonicalPathId id;
  Walk walk;
};

// A grid vertex r = (i, j, x, y) whose incoming vertical edge was subdivided
// by `q`, plus the shortcut edge from r's left neighbour into q.
struct Shortcut {
  int i = 0;
  int j = 0;
  int x = 0;
  int y = 0;
  VertexId q = 0;
  EdgeId upper_half = kNoEdge;  // (p, q)
  EdgeId lower_half = kNoEdge;  // (q, r)
  EdgeId shortcut = kNoEdge;    // (u, q)
  bool green = false;
};

class GadgetLayout {
 public:
  std::vector<VertexLabel> labels;
  std::vector<CanonicalPath> canonical_paths;
  std::vector<Shortcut> shortcuts;
  std::vector<EdgeId> connector_edges;  // (e_i, f_i), i = 2..k

  VertexId grid(int i, int j, int x, int y) const;
  VertexId row_start(int i) const { return row_start_[i - 1]; }
  VertexId row_end(int i) const { return row_end_[i - 1]; }
  VertexId column_start(int j) const { return column_start_[j - 1]; }
  VertexId column_end(int j) const { return column_end_[j - 1]; }
  VertexId connector_in(int i) const { return connector_in_[i - 2]; }
  VertexId connector_out(int i) const { return connector_out_[i - 2]; }
  const CanonicalPath& canonical(Orientation orientation, int index, int track) const;
  // Shortcut at grid vertex (i, j, x, y), if any.
  const Shortcut* shortcut_at(int i, int j, int x, int y) const;

 private:
  friend struct LayoutBuilder;

  int k_ = 0;
  int n_ = 0;
  VertexId grid_base_ = 0;
  std::vector<VertexId> row_start_, row_end_, column_start_, column_end_;
  std::vector<VertexId> connector_in_, connector_out_;
  std::vector<std::size_t> shortcut_index_;  // per grid vertex; SIZE_MAX if none
};

struct HardnessInstance {
  Instance instance;  // demands (2k - 1, 1)
  GadgetParams params;
  GadgetLayout layout;
  GridTilingInstance tiling;  // with the dummy index
};

// Builds the 2-SCSS-(2k-1, 1) instance from a star Grid Tiling instance
// (the dummy index is added here). Throws std::invalid_argument on non-star
// input or when n + 1 exceeds GadgetParams::kMaxN.
HardnessInstance gridtiling_to_scss(const GridTilingInstance& star);

// The weight-beta solution assembled from a tiling solution `delta` (entries
// in the original 1..n range): one t~>s walk along the chosen rows through the
// connectors, taking every shortcut; k-1 free connector walks; and the chosen
// column paths. Throws std::invalid_argument if delta does not solve the
// tiling.
Solution yes_witness(const HardnessInstance& hard, std::span<const int> delta);

struct Certificate {
  Weight beta = 0;
  Weight cost = 0;
  bool within_beta = false;
  std::optional<bool> tiling_solvable;
  // within_beta agrees with tiling_solvable (true when the latter is unknown).
  bool consistent = true;
};

// `original` is the star instance before the dummy index was added.
Certificate certify(const HardnessInstance& hard, const GridTilingInstance& original, Weight cost,
                    std::size_t bruteforce_budget = 50'000'000);

// Sidecar record: k, n, Delta, W, alpha, beta and the canonical-path table.
nlohmann::json certificate_json(const HardnessInstance& hard);

}  // namespace scss
