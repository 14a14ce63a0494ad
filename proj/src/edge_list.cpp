#include "moplex/edge_list.hpp"

#include <fstream>
#include <sstream>

#include "moplex/errors.hpp"

namespace moplex {

ParseError::ParseError(std::size_t line, const std::string& message)
    : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

// Parses exactly `count` unsigned integers from a line; rejects trailing junk.
std::vector<std::size_t> parse_fields(const std::string& text, std::size_t count, std::size_t line) {
  std::istringstream ss(text);
  std::vector<std::size_t> out;
  std::string token;
  while (ss >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
    }
    try {
      out.push_back(std::stoull(token));
    } catch (const std::out_of_range&) {
      throw ParseError(line, "integer too large: " + token);
    }
  }
  if (out.size() != count) {
    throw ParseError(line, "expected " + std::to_string(count) + " fields, got " +
                               std::to_string(out.size()));
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(line_no, "missing header 'n m'");
  const auto header = parse_fields(line, 2, line_no);
  const std::size_t n = header[0];
  const std::size_t m = header[1];
  if (n > 1U << 20) throw ParseError(line_no, "vertex count too large");

  std::vector<VertexSet> rows(n, VertexSet(n));
  for (std::size_t i = 0; i < m; ++i) {
    ++line_no;
    if (!std::getline(in, line)) {
      throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                    std::to_string(i));
    }
    const auto uv = parse_fields(line, 2, line_no);
    const auto u = uv[0];
    const auto v = uv[1];
    if (u >= n || v >= n) throw ParseError(line_no, "vertex id out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    if (u > v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
    if (rows[u].contains(v)) throw ParseError(line_no, "duplicate edge");
    rows[u].insert(v);
    rows[v].insert(u);
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError(line_no, "unexpected content after the last edge");
    }
  }
  return Graph::from_rows(std::move(rows));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << format_edge_list(g);
}

std::vector<std::string> parse_labels(std::istream& in) {
  std::vector<std::string> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    labels.push_back(line);
  }
  return labels;
}

std::vector<std::string> read_labels(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_labels(in);
}

std::optional<std::vector<std::string>> read_sidecar_labels(const std::filesystem::path& graph_path) {
  auto sidecar = graph_path;
  sidecar.replace_extension(".labels");
  if (!std::filesystem::exists(sidecar)) return std::nullopt;
  return read_labels(sidecar);
}

}  // namespace moplex
