#pragma once

#include <optional>

#include "moplex/graph.hpp"
#include "moplex/vertex_ordering.hpp"

namespace moplex {

/// x <σ y <σ z with xz an edge and xy, yz non-edges.
struct UmbrellaViolation {
  Vertex x;
  Vertex y;
  Vertex z;
  friend bool operator==(const UmbrellaViolation&, const UmbrellaViolation&) = default;
};

/// nullopt iff sigma is umbrella-free; otherwise the violation whose
/// positions (x, y, z) are lexicographically smallest.
std::optional<UmbrellaViolation> is_umbrella_free(const Graph& g, const VertexOrdering& sigma);

/// For all a < b < c with ac in E and ab not in E there is a < d < b with
/// db in E and dc not in E. Rejects disconnected graphs.
bool is_ldfs_ordering(const Graph& g, const VertexOrdering& sigma);

/// Whether some depth-first search visits the vertices in this order: each
/// vertex after the first is adjacent to the deepest vertex on the search
/// stack that still has unvisited neighbours. Rejects disconnected graphs.
bool is_dfs_ordering(const Graph& g, const VertexOrdering& sigma);

/// DFS that starts at the tau-last vertex and always moves to the tau-greatest
/// eligible vertex. This is the lexicographically maximal DFS ordering w.r.t.
/// tau.
VertexOrdering dfs_plus(const Graph& g, const VertexOrdering& tau);

/// LDFS choosing among the vertices of maximum label the tau-greatest one.
/// Labels are the visit times of already visited neighbours, most recent
/// first, compared lexicographically.
VertexOrdering ldfs_plus(const Graph& g, const VertexOrdering& tau);

/// An umbrella-free ordering iff g is a cocomparability graph. Computed by
/// transitively orienting the complement (implication classes, removing one
/// class at a time) and topologically sorting, smallest id first.
std::optional<VertexOrdering> cocomparability_ordering(const Graph& g);

/// Transitive orientation of g itself: arcs[u] holds the heads of arcs
/// leaving u. nullopt iff g is not a comparability graph.
std::optional<std::vector<VertexSet>> transitive_orientation(const Graph& g);

}  // namespace moplex
