#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "scss/instance.h"

namespace scss {

// A maximal run of edges occurring contiguously in both walks. Offsets index
// the edge sequences of the forward and backward walk.
struct SharedSubpath {
  std::size_t forward_offset = 0;
  std::size_t backward_offset = 0;
  std::size_t length = 0;

  friend bool operator==(const SharedSubpath&, const SharedSubpath&) = default;
};

// Ordered by position along the forward walk.
struct SharedSubpathDecomposition {
  std::vector<SharedSubpath> subpaths;

  std::size_t size() const { return subpaths.size(); }
};

SharedSubpathDecomposition shared_subpaths(const Walk& forward, const Walk& backward);

// The backward walk meets the shared subpaths in exactly the reverse of the
// forward order.
bool is_path_reverse_compatible(const Walk& forward, const Walk& backward);
bool is_reverse_compatible(std::span<const Walk> forward, const Walk& backward);
bool is_general_reverse_compatible(std::span<const Walk> forward, std::span<const Walk> backward);

// Total number of maximal shared subpaths over all forward walks.
std::size_t rank(std::span<const Walk> forward, const Walk& backward);

// One improvement step for a non-compatible pair (forward[index], backward):
// takes the first two consecutive shared subpaths P, P' (forward order) that
// the backward walk also meets as P before P', and replaces the backward
// walk's stretch from the start of P to the end of P' by the forward walk's.
// Requires edge-simple, pairwise edge-disjoint forward walks and an
// edge-simple backward walk; throws std::invalid_argument otherwise or if the
// pair is already compatible.
Walk rewire_step(const Digraph& graph, std::span<const Walk> forward, const Walk& backward, std::size_t index);

// Index of some forward walk not compatible with `backward`, or forward.size().
std::size_t first_incompatible(std::span<const Walk> forward, const Walk& backward);

// The edge-copy view: every edge of the instance becomes max(k1, 1) parallel
// copies, forward walk i runs on copy i, and each backward edge runs on the
// copy of the lowest-index forward walk that uses it (copy 0 otherwise).
// Forward walks become pairwise edge-disjoint. For edge-simple walks and a
// single backward walk the phi-cost is unchanged.
struct EdgeCopyLift {
  Instance instance;
  Solution solution;
  std::size_t copies = 1;

  EdgeId original_edge(EdgeId lifted) const { return static_cast<EdgeId>(lifted / copies); }
  Walk project(const Walk& lifted) const;
};

EdgeCopyLift lift_to_edge_copies(const Instance& instance, const Solution& solution);

struct RewireTrace {
  Walk backward;
  std::size_t steps = 0;
  bool compatible = false;
};

// Applies rewire_step until (forward, backward) is reverse-compatible or
// `max_steps` steps were taken.
RewireTrace rewire_until_compatible(const Digraph& graph, std::span<const Walk> forward, Walk backward,
                                    std::size_t max_steps);

}  // namespace scss
