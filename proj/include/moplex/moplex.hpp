#pragma once

#include <utility>
#include <vector>

#include "moplex/graph.hpp"
#include "moplex/types.hpp"

namespace moplex {

/// Classes of the true-twin relation N[u] = N[v], by minimum vertex. These
/// are exactly the inclusion-maximal clique modules.
std::vector<VertexSet> maximal_clique_modules(const Graph& g);

/// All moplexes, ascending by minimum vertex. The vertex set of a complete
/// graph is a moplex (its neighbourhood is empty).
std::vector<Moplex> moplexes(const Graph& g);

std::size_t moplex_number(const Graph& g);
/// At most k moplexes.
bool is_k_moplex(const Graph& g, std::size_t k);
bool is_moplicial(const Graph& g, Vertex v);

/// Unordered pairs (x, y), x < y, of non-adjacent neighbours of v: the
/// induced P3s with midpoint v.
std::vector<std::pair<Vertex, Vertex>> extensions(const Graph& g, Vertex v);

/// Every extension x-v-y has an x,y-path whose inner vertices avoid N[v].
bool is_avoidable(const Graph& g, Vertex v);
VertexSet avoidable_vertices(const Graph& g);

/// G - v for an avoidable, non-moplicial v. The moplexes of the result are
/// exactly the projections of the moplexes of g.
InducedSubgraph delete_avoidable_nonmoplicial(const Graph& g, Vertex v);

}  // namespace moplex
