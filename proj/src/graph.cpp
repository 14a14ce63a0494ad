#include "moplex/graph.hpp"

#include <string>

#include "moplex/errors.hpp"

namespace moplex {

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (rows_[u].contains(v)) {
      throw InputError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    rows_[u].insert(v);
    rows_[v].insert(u);
    ++edge_count_;
  }
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  Graph g;
  const std::size_t n = rows.size();
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (rows[v].universe() != n) throw InputError("adjacency row has wrong universe");
    if (rows[v].contains(v)) throw InputError("self-loop at vertex " + std::to_string(v));
    for (Vertex u : rows[v]) {
      if (!rows[u].contains(v)) throw InputError("adjacency rows are not symmetric");
    }
    degree_sum += rows[v].size();
  }
  g.rows_ = std::move(rows);
  g.edge_count_ = degree_sum / 2;
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(order()));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return rows_[u].contains(v);
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return rows_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : rows_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& local, std::size_t original_order) const {
  VertexSet out(original_order);
  for (Vertex v : local) out.insert(to_original.at(v));
  return out;
}

VertexSet InducedSubgraph::project(const VertexSet& original) const {
  VertexSet out(graph.order());
  for (Vertex v : original) {
    if (v < from_original.size() && from_original[v]) out.insert(*from_original[v]);
  }
  return out;
}

VertexSet neighbors(const Graph& g, Vertex v) { return g.neighbors(v); }

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet out = x;
  for (Vertex v : x) out |= g.neighbors(v);
  return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet out = g.neighbors(v);
  out.insert(v);
  return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& x) {
  return closed_neighborhood(g, x) - x;
}

VertexSet component_of(const Graph& g, const VertexSet& within, Vertex start) {
  if (!within.contains(start)) throw PreconditionError("component start vertex not in set");
  VertexSet seen(g.order());
  seen.insert(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(g.order());
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = component_of(g, rest, rest.front());
    rest -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g, const VertexSet& within) {
  if (within.empty()) return true;
  return component_of(g, within, within.front()) == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  InducedSubgraph out;
  out.from_original.assign(g.order(), std::nullopt);
  out.to_original = x.to_vector();
  for (Vertex i = 0; i < out.to_original.size(); ++i) out.from_original[out.to_original[i]] = i;
  const std::size_t k = out.to_original.size();
  std::vector<VertexSet> rows(k, VertexSet(k));
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex u : g.neighbors(out.to_original[i]) & x) rows[i].insert(*out.from_original[u]);
  }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

InducedSubgraph delete_vertex(const Graph& g, Vertex v) {
  VertexSet keep = g.vertices();
  keep.erase(v);
  return induced_subgraph(g, keep);
}

Graph complement(const Graph& g) {
  std::vector<VertexSet> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet row = ~g.neighbors(v);
    row.erase(v);
    rows.push_back(std::move(row));
  }
  return Graph::from_rows(std::move(rows));
}

bool is_clique(const Graph& g, const VertexSet& x) {
  for (Vertex v : x) {
    VertexSet others = x;
    others.erase(v);
    if (!others.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_independent_set(const Graph& g, const VertexSet& x) {
  for (Vertex v : x) {
    if (g.neighbors(v).intersects(x)) return false;
  }
  return true;
}

bool is_module(const Graph& g, const VertexSet& x) {
  const VertexSet outside = ~x;
  for (Vertex v : outside) {
    const VertexSet seen = g.neighbors(v) & x;
    if (!seen.empty() && seen != x) return false;
  }
  return true;
}

bool is_complete(const Graph& g) { return is_clique(g, g.vertices()); }

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace moplex
