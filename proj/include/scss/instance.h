#pragma once

#include <stdexcept>
#include <vector>

#include "scss/digraph.h"
#include "scss/walk.h"

namespace scss {

// 2-SCSS-(k1,k2): k1 walks s~>t and k2 walks t~>s in `graph`.
struct Instance {
  Digraph graph;
  VertexId s = 0;
  VertexId t = 1;
  int k1 = 1;
  int k2 = 1;
};

// Throws std::invalid_argument if terminals are not distinct vertices or a
// demand is below one.
void validate(const Instance& instance);

struct Solution {
  std::vector<Walk> forward;
  std::vector<Walk> backward;
  Weight cost = 0;
};

}  // namespace scss
