#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "moplex/vertex_set.hpp"

namespace moplex {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on the dense vertex ids 0..n-1. Immutable once
// built; every derived graph (deletion, induced subgraph, complement) is a
// new value.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);
  /// Throws InputError on self-loops, duplicate edges or out-of-range ids.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from symmetric, irreflexive adjacency rows (checked).
  static Graph from_rows(std::vector<VertexSet> rows);

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const;
  /// Open neighbourhood N(v).
  const VertexSet& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

/// Result of restricting a graph to a vertex subset with dense relabelling.
struct InducedSubgraph {
  Graph graph;
  /// new id -> old id (ascending).
  std::vector<Vertex> to_original;
  /// old id -> new id, empty for removed vertices.
  std::vector<std::optional<Vertex>> from_original;

  VertexSet lift(const VertexSet& local, std::size_t original_order) const;
  VertexSet project(const VertexSet& original) const;
};

VertexSet neighbors(const Graph& g, Vertex v);
/// N[X]: union of the closed neighbourhoods of the members of X.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
/// N(X) = N[X] \ X.
VertexSet open_neighborhood(const Graph& g, const VertexSet& x);

/// Connected components of g[within], ordered by minimum vertex id.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
/// The component of g[within] containing start (start must be in within).
VertexSet component_of(const Graph& g, const VertexSet& within, Vertex start);
bool is_connected(const Graph& g);
bool is_connected(const Graph& g, const VertexSet& within);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);
InducedSubgraph delete_vertex(const Graph& g, Vertex v);
Graph complement(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& x);
bool is_independent_set(const Graph& g, const VertexSet& x);
bool is_module(const Graph& g, const VertexSet& x);
bool is_complete(const Graph& g);

/// Proper 2-colouring (side of each vertex) if g is bipartite.
std::optional<std::vector<int>> two_coloring(const Graph& g);

}  // namespace moplex
