#include "scss/solution_io.h"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "scss/instance_io.h"

namespace scss {
namespace {

void write_walk(std::ostream& out, const Digraph& graph, const Walk& walk) {
  for (VertexId v : walk_vertices(graph, walk)) out << ' ' << v;
}

std::uint64_t to_number(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, "malformed number '" + std::string(token) + "'");
  }
  return value;
}

std::vector<Walk> collect(std::map<std::size_t, Walk>& walks, const char* side) {
  std::vector<Walk> out;
  for (auto& [index, walk] : walks) {
    if (index != out.size()) throw ParseError(0, std::string("missing ") + side + "[" + std::to_string(out.size()) + "]");
    out.push_back(std::move(walk));
  }
  return out;
}

}  // namespace

std::string serialize_solution(const Digraph& graph, const Solution& solution) {
  std::ostringstream out;
  out << "cost " << solution.cost << '\n';
  for (std::size_t i = 0; i < solution.forward.size(); ++i) {
    out << "forward[" << i << ']';
    write_walk(out, graph, solution.forward[i]);
    out << '\n';
  }
  for (std::size_t j = 0; j < solution.backward.size(); ++j) {
    out << "backward[" << j << ']';
    write_walk(out, graph, solution.backward[j]);
    out << '\n';
  }
  return out.str();
}

Solution parse_solution(const Digraph& graph, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<Weight> cost;
  std::map<std::size_t, Walk> forward, backward;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key) || key.front() == '#') continue;
    if (key == "cost") {
      std::string value;
      if (!(fields >> value)) throw ParseError(line_no, "missing cost value");
      if (cost) throw ParseError(line_no, "duplicate cost record");
      cost = to_number(value, line_no);
      continue;
    }
    const std::size_t open = key.find('[');
    const std::string_view side = std::string_view(key).substr(0, open);
    if (open == std::string::npos || key.back() != ']' || (side != "forward" && side != "backward")) {
      throw ParseError(line_no, "unknown record '" + key + "'");
    }
    const std::size_t index = to_number(std::string_view(key).substr(open + 1, key.size() - open - 2), line_no);
    std::vector<VertexId> vertices;
    std::string token;
    while (fields >> token) {
      const std::uint64_t v = to_number(token, line_no);
      if (v >= graph.num_vertices()) throw ParseError(line_no, "vertex " + token + " out of range");
      vertices.push_back(static_cast<VertexId>(v));
    }
    if (vertices.empty()) throw ParseError(line_no, "walk without vertices");
    auto& target = side == "forward" ? forward : backward;
    if (target.contains(index)) throw ParseError(line_no, "duplicate walk " + key);
    target[index] = walk_from_vertices(graph, vertices);
  }
  if (!cost) throw ParseError(0, "missing cost record");
  Solution out;
  out.cost = *cost;
  out.forward = collect(forward, "forward");
  out.backward = collect(backward, "backward");
  return out;
}

nlohmann::json solution_to_json(const Digraph& graph, const Solution& solution) {
  nlohmann::json out;
  out["cost"] = solution.cost;
  out["forward"] = nlohmann::json::array();
  out["backward"] = nlohmann::json::array();
  for (const Walk& w : solution.forward) out["forward"].push_back(walk_vertices(graph, w));
  for (const Walk& w : solution.backward) out["backward"].push_back(walk_vertices(graph, w));
  return out;
}

}  // namespace scss
