#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "scss/instance.h"
#include "scss/transforms.h"

namespace scss {

// Diagnostic carrying the 1-based line number of the offending record
// (0 when the problem is not tied to one line, e.g. a missing record).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Instance file:
//   scss <n> <m> <k1> <k2>
//   s <id>
//   t <id>
//   e <tail> <head> <weight>      (m lines)
// Lines starting with '#' and blank lines are ignored.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

// Vertex-weighted file:
//   scssv <n> <m> <k1> <k2>
//   s <id>
//   t <id>
//   w <vertex> <weight>           (any number; unlisted vertices weigh 0)
//   e <tail> <head>               (m lines)
VertexWeightedInstance parse_vertex_weighted(std::string_view text);
std::string serialize_vertex_weighted(const VertexWeightedInstance& instance);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace scss
