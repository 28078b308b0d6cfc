#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "scss/instance.h"

namespace scss {

// Text form, one record per line:
//   cost <value>
//   forward[<i>] <v0> <v1> ... <vr>
//   backward[<j>] <v0> <v1> ... <vr>
// Walks are written as vertex sequences; on parsing, parallel edges are
// resolved to the cheapest one. Comment lines start with '#'.
std::string serialize_solution(const Digraph& graph, const Solution& solution);
// Throws ParseError on malformed records and WalkError on missing edges.
Solution parse_solution(const Digraph& graph, std::string_view text);

nlohmann::json solution_to_json(const Digraph& graph, const Solution& solution);

}  // namespace scss
