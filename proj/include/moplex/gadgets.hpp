#pragma once

#include <map>
#include <optional>
#include <utility>
#include <string>

#include "moplex/graph.hpp"
#include "moplex/vertex_ordering.hpp"

namespace moplex {

// A constructed graph plus the role of every vertex. Original vertices keep
// their ids and are named "original(i)"; added vertices follow in blocks.
struct GadgetOutput {
  Graph graph;
  std::map<std::string, Vertex> role_map;

  /// Role map is injective and covers V(graph).
  bool roles_are_consistent() const;
};

std::string original_role(Vertex v);

/// Adds cliques A u {u} and B u {w}; a_i ~ sigma_j and sigma_i ~ b_j for
/// i <= j. Roles "a(i)", "b(i)" (1-based positions in sigma), "u", "w".
/// Throws PreconditionError if sigma has an umbrella.
GadgetOutput embed_in_2moplex(const Graph& g, const VertexOrdering& sigma);

/// A, B: clique partition of g, both non-empty. Adds A' (|A| vertices), B'
/// (|B| vertices), u, w; cliques {u} u A u A' and {w} u B u B'; a* (first of
/// A') joined to B u B', b* (first of B') joined to A u A'. Roles "a*",
/// "a'(2)".., "b*", "b'(2)".., "u", "w".
GadgetOutput maxcut_gadget(const Graph& g, const VertexSet& a, const VertexSet& b);

/// g connected bipartite with colour classes A, B. Adds u, w and turns
/// A u {u}, B u {w} into cliques.
GadgetOutput gi_gadget(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Colour classes of a bipartite graph (side of vertex 0 first).
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);
/// Two disjoint cliques covering V, if g is cobipartite.
std::optional<std::pair<VertexSet, VertexSet>> clique_partition(const Graph& g);

}  // namespace moplex
