#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "moplex/errors.hpp"
#include "moplex/graph.hpp"

namespace moplex {

// Canonical edge-list text format:
//   n m
//   u v      (m lines, 0 <= u < v < n)
// ASCII, newline terminated. Errors carry the 1-based line number.

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list(const std::filesystem::path& path);

std::string format_edge_list(const Graph& g);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

/// One label per line; line i names vertex i.
std::vector<std::string> parse_labels(std::istream& in);
std::vector<std::string> read_labels(const std::filesystem::path& path);
/// `<stem>.labels` next to an edge-list file, when present.
std::optional<std::vector<std::string>> read_sidecar_labels(const std::filesystem::path& graph_path);

}  // namespace moplex
