#pragma once

#include "scss/instance.h"

namespace scss {

// The 22-vertex 2-SCSS-(2,2) instance on which no optimum is
// general-reverse-compatible. Vertex ids: s = 0, t = 1, u_i = 1 + i and
// v_i = 11 + i for i in 1..10.
namespace counterexample {

inline constexpr VertexId kS = 0;
inline constexpr VertexId kT = 1;
inline constexpr VertexId u(int i) { return static_cast<VertexId>(1 + i); }
inline constexpr VertexId v(int i) { return static_cast<VertexId>(11 + i); }

}  // namespace counterexample

Instance build_counterexample();

// The exhibited weight-22 solution: forward P1 = s,u1..u10,t and
// P2 = s,v1..v10,t; backward P3 and P4.
Solution counterexample_solution(const Instance& fixture);

}  // namespace scss
