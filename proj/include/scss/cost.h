#pragma once

#include <span>

#include "scss/instance.h"

namespace scss {

// Sum over edges of weight * max(forward traversals, backward traversals).
// A walk that crosses an edge twice counts twice. Checks that every forward
// walk runs s~>t and every backward walk t~>s (WalkError otherwise); demand
// counts are not checked here.
Weight phi_cost(const Digraph& graph, VertexId s, VertexId t, std::span<const Walk> forward,
                std::span<const Walk> backward);

// As phi_cost, additionally requiring |forward| = k1 and |backward| = k2.
Weight evaluate_phi_cost(const Instance& instance, std::span<const Walk> forward,
                         std::span<const Walk> backward);
Weight evaluate_phi_cost(const Instance& instance, const Solution& solution);

}  // namespace scss
