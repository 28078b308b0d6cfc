#include "scss/structure.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace scss {

SharedSubpathDecomposition shared_subpaths(const Walk& forward, const Walk& backward) {
  const auto& f = forward.edges;
  const auto& b = backward.edges;
  SharedSubpathDecomposition out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (f[i] != b[j]) continue;
      if (i > 0 && j > 0 && f[i - 1] == b[j - 1]) continue;
      std::size_t length = 1;
      while (i + length < f.size() && j + length < b.size() && f[i + length] == b[j + length]) ++length;
      out.subpaths.push_back({i, j, length});
    }
  }
  std::sort(out.subpaths.begin(), out.subpaths.end(), [](const SharedSubpath& x, const SharedSubpath& y) {
    return std::pair(x.forward_offset, x.backward_offset) < std::pair(y.forward_offset, y.backward_offset);
  });
  return out;
}

namespace {

// First a with P_a seen by the backward walk before P_{a+1}; size() if none.
std::size_t first_out_of_order(const SharedSubpathDecomposition& d) {
  for (std::size_t a = 0; a + 1 < d.size(); ++a) {
    if (d.subpaths[a].backward_offset < d.subpaths[a + 1].backward_offset) return a;
  }
  return d.size();
}

}  // namespace

bool is_path_reverse_compatible(const Walk& forward, const Walk& backward) {
  const SharedSubpathDecomposition d = shared_subpaths(forward, backward);
  return first_out_of_order(d) == d.size();
}

bool is_reverse_compatible(std::span<const Walk> forward, const Walk& backward) {
  return first_incompatible(forward, backward) == forward.size();
}

bool is_general_reverse_compatible(std::span<const Walk> forward, std::span<const Walk> backward) {
  return std::all_of(backward.begin(), backward.end(), [&](const Walk& b) { return is_reverse_compatible(forward, b); });
}

std::size_t rank(std::span<const Walk> forward, const Walk& backward) {
  std::size_t total = 0;
  for (const Walk& f : forward) total += shared_subpaths(f, backward).size();
  return total;
}

std::size_t first_incompatible(std::span<const Walk> forward, const Walk& backward) {
  for (std::size_t i = 0; i < forward.size(); ++i) {
    if (!is_path_reverse_compatible(forward[i], backward)) return i;
  }
  return forward.size();
}

Walk rewire_step(const Digraph& graph, std::span<const Walk> forward, const Walk& backward, std::size_t index) {
  if (index >= forward.size()) throw std::invalid_argument("rewire_step: forward index out of range");
  std::unordered_set<EdgeId> seen;
  for (const Walk& f : forward) {
    for (EdgeId e : f.edges) {
      if (!seen.insert(e).second) {
        throw std::invalid_argument("rewire_step: forward walks must be edge-simple and pairwise edge-disjoint");
      }
    }
  }
  if (!is_edge_simple(backward)) throw std::invalid_argument("rewire_step: backward walk must be edge-simple");

  const Walk& f = forward[index];
  const SharedSubpathDecomposition d = shared_subpaths(f, backward);
  const std::size_t a = first_out_of_order(d);
  if (a == d.size()) throw std::invalid_argument("rewire_step: pair is already reverse-compatible");

  const SharedSubpath& first = d.subpaths[a];
  const SharedSubpath& second = d.subpaths[a + 1];
  Walk out;
  out.start = backward.start;
  out.edges.assign(backward.edges.begin(), backward.edges.begin() + static_cast<std::ptrdiff_t>(first.backward_offset));
  out.edges.insert(out.edges.end(), f.edges.begin() + static_cast<std::ptrdiff_t>(first.forward_offset),
                   f.edges.begin() + static_cast<std::ptrdiff_t>(second.forward_offset + second.length));
  out.edges.insert(out.edges.end(),
                   backward.edges.begin() + static_cast<std::ptrdiff_t>(second.backward_offset + second.length),
                   backward.edges.end());
  walk_end(graph, out);
  return out;
}

Walk EdgeCopyLift::project(const Walk& lifted) const {
  Walk out{lifted.start, {}};
  out.edges.reserve(lifted.edges.size());
  for (EdgeId e : lifted.edges) out.edges.push_back(original_edge(e));
  return out;
}

EdgeCopyLift lift_to_edge_copies(const Instance& instance, const Solution& solution) {
  EdgeCopyLift lift;
  lift.copies = static_cast<std::size_t>(std::max(instance.k1, 1));
  const Digraph& g = instance.graph;

  Digraph lifted(g.num_vertices());
  for (const Edge& e : g.edges()) {
    for (std::size_t c = 0; c < lift.copies; ++c) lifted.add_edge(e.tail, e.head, e.weight);
  }
  lift.instance = Instance{std::move(lifted), instance.s, instance.t, instance.k1, instance.k2};

  if (solution.forward.size() > lift.copies) {
    throw std::invalid_argument("edge-copy lift: more forward walks than copies");
  }
  auto copy_of = [&](EdgeId e, std::size_t c) { return static_cast<EdgeId>(e * lift.copies + c); };
  std::vector<std::size_t> owner(g.num_edges(), lift.copies);
  for (std::size_t i = solution.forward.size(); i-- > 0;) {
    for (EdgeId e : solution.forward[i].edges) owner[e] = i;
  }
  for (std::size_t i = 0; i < solution.forward.size(); ++i) {
    Walk w{solution.forward[i].start, {}};
    for (EdgeId e : solution.forward[i].edges) w.edges.push_back(copy_of(e, i));
    lift.solution.forward.push_back(std::move(w));
  }
  for (const Walk& b : solution.backward) {
    Walk w{b.start, {}};
    for (EdgeId e : b.edges) w.edges.push_back(copy_of(e, owner[e] == lift.copies ? 0 : owner[e]));
    lift.solution.backward.push_back(std::move(w));
  }
  lift.solution.cost = solution.cost;
  return lift;
}

RewireTrace rewire_until_compatible(const Digraph& graph, std::span<const Walk> forward, Walk backward,
                                    std::size_t max_steps) {
  RewireTrace trace;
  trace.backward = std::move(backward);
  while (true) {
    const std::size_t index = first_incompatible(forward, trace.backward);
    if (index == forward.size()) {
      trace.compatible = true;
      return trace;
    }
    if (trace.steps == max_steps) return trace;
    trace.backward = rewire_step(graph, forward, trace.backward, index);
    ++trace.steps;
  }
}

}  // namespace scss
