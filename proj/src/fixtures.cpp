#include "moplex/fixtures.hpp"

#include <algorithm>

#include "moplex/corpus.hpp"
#include "moplex/errors.hpp"

namespace moplex {

namespace {

LabeledGraph from_labeled_edges(std::vector<std::string> labels,
                                const std::vector<std::pair<std::string, std::string>>& named) {
  LabeledGraph out{Graph(), std::move(labels)};
  std::vector<Edge> edges;
  for (const auto& [a, b] : named) edges.emplace_back(out.id(a), out.id(b));
  out.graph = Graph(out.labels.size(), edges);
  return out;
}

}  // namespace

Vertex LabeledGraph::id(std::string_view label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InputError("unknown vertex label '" + std::string(label) + "'");
  return static_cast<Vertex>(it - labels.begin());
}

std::vector<Vertex> LabeledGraph::ids(const std::vector<std::string>& names) const {
  std::vector<Vertex> out;
  out.reserve(names.size());
  for (const auto& name : names) out.push_back(id(name));
  return out;
}

LabeledGraph figure1_graph() {
  return from_labeled_edges({"Center", "A", "B", "C", "D", "A2", "B2", "C2"},
                            {{"A", "B"},
                             {"B", "C"},
                             {"C", "D"},
                             {"D", "A"},
                             {"Center", "B"},
                             {"Center", "C"},
                             {"Center", "D"},
                             {"A", "A2"},
                             {"A2", "D"},
                             {"B", "B2"},
                             {"B", "C2"},
                             {"C", "B2"},
                             {"C", "C2"},
                             {"B2", "C2"}});
}

LabeledGraph figure4_graph() {
  return from_labeled_edges({"a", "b", "c", "d", "e", "f"}, {{"a", "d"},
                                                             {"a", "b"},
                                                             {"b", "d"},
                                                             {"e", "d"},
                                                             {"b", "c"},
                                                             {"c", "e"},
                                                             {"e", "f"},
                                                             {"b", "e"}});
}

Graph net_graph() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

Graph claw_graph() { return star_graph(3); }

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  return Graph(10, edges);
}

}  // namespace moplex
