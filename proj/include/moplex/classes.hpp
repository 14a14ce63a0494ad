#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "moplex/graph.hpp"
#include "moplex/types.hpp"
#include "moplex/vertex_ordering.hpp"

namespace moplex {

/// Largest graph accepted by the hereditary sweeps (2^n induced subgraphs).
inline constexpr std::size_t kHereditaryVertexLimit = 16;

/// Perfect elimination ordering test on a maximum cardinality search order.
bool is_chordal(const Graph& g);
bool is_claw_free(const Graph& g);
/// Vertex set covered by two disjoint cliques (complement is bipartite).
bool is_cobipartite(const Graph& g);
/// Claw-free, AT-free and chordal.
bool is_proper_interval(const Graph& g);
/// Two disjoint cliques X, Y (either may be empty) with the closed
/// neighbourhoods of X totally ordered by inclusion.
bool is_cochain(const Graph& g);
bool is_cocomparability(const Graph& g);

/// Every induced subgraph has at most two moplexes.
bool hereditary_2moplex_check(const Graph& g);
/// Every connected induced subgraph has at most two moplexes.
bool connected_hereditary_2moplex_check(const Graph& g);

// Orientation of the complement of a connected, non-complete 2-moplex graph:
// x -> y when, for the minimal x,y-separators S, the moplex U lies in the
// component of G - S that contains x.
struct PreferenceOrientation {
  Moplex moplex_u;
  Moplex moplex_w;
  /// Pairs (x, y) with x R_U y, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> oriented_pairs;
  /// prefers[x] = { y : x R_U y }.
  std::vector<VertexSet> prefers;

  bool is_transitive() const;
  bool is_irreflexive() const;
  /// Topological order of R_U, smallest id among the ready vertices first.
  VertexOrdering topological_order() const;
};

/// Throws PreconditionError unless g is connected, non-complete and has
/// exactly two moplexes; throws PropertyViolation if two minimal
/// x,y-separators disagree on the preferred endpoint.
PreferenceOrientation moplex_preference_orientation(const Graph& g);

}  // namespace moplex
