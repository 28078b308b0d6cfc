#include "scss/instance_io.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace scss {
namespace {

struct Record {
  std::size_t line = 0;
  std::vector<std::string_view> fields;
};

std::vector<Record> split_records(std::string_view text) {
  std::vector<Record> records;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    Record record{line_no, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) record.fields.push_back(line.substr(i, j - i));
      i = j;
    }
    if (record.fields.empty() || record.fields.front().front() == '#') continue;
    records.push_back(std::move(record));
  }
  return records;
}

std::uint64_t parse_number(const Record& record, std::size_t field, const char* what) {
  if (field >= record.fields.size()) throw ParseError(record.line, std::string("missing ") + what);
  const std::string_view token = record.fields[field];
  if (!token.empty() && token.front() == '-') throw ParseError(record.line, std::string("negative ") + what);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(record.line, std::string("malformed ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

void expect_arity(const Record& record, std::size_t arity) {
  if (record.fields.size() != arity) {
    throw ParseError(record.line, "record '" + std::string(record.fields.front()) + "' expects " +
                                      std::to_string(arity - 1) + " values, got " +
                                      std::to_string(record.fields.size() - 1));
  }
}

struct Header {
  std::size_t n = 0;
  std::size_t m = 0;
  int k1 = 1;
  int k2 = 1;
};

Header parse_header(const std::vector<Record>& records, std::string_view keyword) {
  if (records.empty()) throw ParseError(0, "empty input");
  const Record& r = records.front();
  if (r.fields.front() != keyword || r.fields.size() != 5) {
    throw ParseError(r.line, "malformed header, expected '" + std::string(keyword) + " <n> <m> <k1> <k2>'");
  }
  Header h;
  h.n = parse_number(r, 1, "vertex count");
  h.m = parse_number(r, 2, "edge count");
  const std::uint64_t k1 = parse_number(r, 3, "demand k1");
  const std::uint64_t k2 = parse_number(r, 4, "demand k2");
  if (h.n > kNoVertex) throw ParseError(r.line, "vertex count too large");
  if (k1 < 1 || k2 < 1 || k1 > 1'000'000 || k2 > 1'000'000) throw ParseError(r.line, "demands must be in 1..1000000");
  h.k1 = static_cast<int>(k1);
  h.k2 = static_cast<int>(k2);
  return h;
}

VertexId parse_vertex(const Record& record, std::size_t field, std::size_t n) {
  const std::uint64_t v = parse_number(record, field, "vertex id");
  if (v >= n) {
    throw ParseError(record.line, "vertex id " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
  }
  return static_cast<VertexId>(v);
}

// Handles the s/t records shared by both formats; returns false for other keywords.
bool parse_terminal(const Record& r, std::size_t n, std::optional<VertexId>& s, std::optional<VertexId>& t) {
  const std::string_view key = r.fields.front();
  if (key != "s" && key != "t") return false;
  expect_arity(r, 2);
  std::optional<VertexId>& slot = key == "s" ? s : t;
  if (slot) throw ParseError(r.line, "duplicate terminal declaration '" + std::string(key) + "'");
  slot = parse_vertex(r, 1, n);
  return true;
}

void finish_terminals(const std::vector<Record>& records, std::optional<VertexId> s, std::optional<VertexId> t) {
  const std::size_t last = records.back().line;
  if (!s) throw ParseError(last, "missing terminal declaration 's'");
  if (!t) throw ParseError(last, "missing terminal declaration 't'");
  if (*s == *t) throw ParseError(last, "terminals s and t must differ");
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

Instance parse_instance(std::string_view text) {
  const std::vector<Record> records = split_records(text);
  const Header h = parse_header(records, "scss");
  Instance out;
  out.graph = Digraph(h.n);
  out.k1 = h.k1;
  out.k2 = h.k2;
  std::optional<VertexId> s, t;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const Record& r = records[i];
    if (parse_terminal(r, h.n, s, t)) continue;
    if (r.fields.front() != "e") throw ParseError(r.line, "unknown record '" + std::string(r.fields.front()) + "'");
    expect_arity(r, 4);
    const VertexId tail = parse_vertex(r, 1, h.n);
    const VertexId head = parse_vertex(r, 2, h.n);
    const Weight w = parse_number(r, 3, "weight");
    if (out.graph.num_edges() == h.m) throw ParseError(r.line, "more than the declared " + std::to_string(h.m) + " edges");
    out.graph.add_edge(tail, head, w);
  }
  finish_terminals(records, s, t);
  if (out.graph.num_edges() != h.m) {
    throw ParseError(records.back().line, "declared " + std::to_string(h.m) + " edges, found " +
                                              std::to_string(out.graph.num_edges()));
  }
  out.s = *s;
  out.t = *t;
  return out;
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  const Digraph& g = instance.graph;
  out << "scss " << g.num_vertices() << ' ' << g.num_edges() << ' ' << instance.k1 << ' ' << instance.k2 << '\n';
  out << "s " << instance.s << '\n' << "t " << instance.t << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.tail << ' ' << e.head << ' ' << e.weight << '\n';
  return out.str();
}

VertexWeightedInstance parse_vertex_weighted(std::string_view text) {
  const std::vector<Record> records = split_records(text);
  const Header h = parse_header(records, "scssv");
  VertexWeightedInstance out;
  out.graph = Digraph(h.n);
  out.vertex_weight.assign(h.n, 0);
  out.k1 = h.k1;
  out.k2 = h.k2;
  std::optional<VertexId> s, t;
  std::vector<bool> weighted(h.n, false);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const Record& r = records[i];
    if (parse_terminal(r, h.n, s, t)) continue;
    const std::string_view key = r.fields.front();
    if (key == "w") {
      expect_arity(r, 3);
      const VertexId v = parse_vertex(r, 1, h.n);
      if (weighted[v]) throw ParseError(r.line, "duplicate weight for vertex " + std::to_string(v));
      weighted[v] = true;
      out.vertex_weight[v] = parse_number(r, 2, "weight");
    } else if (key == "e") {
      expect_arity(r, 3);
      const VertexId tail = parse_vertex(r, 1, h.n);
      const VertexId head = parse_vertex(r, 2, h.n);
      if (out.graph.num_edges() == h.m) throw ParseError(r.line, "more than the declared " + std::to_string(h.m) + " edges");
      out.graph.add_edge(tail, head, 0);
    } else {
      throw ParseError(r.line, "unknown record '" + std::string(key) + "'");
    }
  }
  finish_terminals(records, s, t);
  if (out.graph.num_edges() != h.m) {
    throw ParseError(records.back().line, "declared " + std::to_string(h.m) + " edges, found " +
                                              std::to_string(out.graph.num_edges()));
  }
  out.s = *s;
  out.t = *t;
  return out;
}

std::string serialize_vertex_weighted(const VertexWeightedInstance& instance) {
  std::ostringstream out;
  const Digraph& g = instance.graph;
  out << "scssv " << g.num_vertices() << ' ' << g.num_edges() << ' ' << instance.k1 << ' ' << instance.k2 << '\n';
  out << "s " << instance.s << '\n' << "t " << instance.t << '\n';
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (instance.vertex_weight[v] != 0) out << "w " << v << ' ' << instance.vertex_weight[v] << '\n';
  }
  for (const Edge& e : g.edges()) out << "e " << e.tail << ' ' << e.head << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace scss
