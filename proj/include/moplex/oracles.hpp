#pragma once

// Exhaustive reference implementations used as test oracles. They depend on
// the graph core only and share no code with the production algorithms.

#include <cstddef>
#include <optional>
#include <vector>

#include "moplex/graph.hpp"
#include "moplex/types.hpp"
#include "moplex/vertex_ordering.hpp"

namespace moplex::oracle {

inline constexpr std::size_t kMaxCutLimit = 24;
inline constexpr std::size_t kIsomorphismLimit = 10;
inline constexpr std::size_t kHamiltonianLimit = 12;
inline constexpr std::size_t kMoplexLimit = 10;
inline constexpr std::size_t kSeparatorLimit = 12;
inline constexpr std::size_t kOrderingSearchLimit = 12;

struct Cut {
  VertexSet side_one;
  VertexSet side_two;
  std::size_t size = 0;
};

/// Exhaustive over the 2^(n-1) bipartitions with vertex 0 on side one.
Cut brute_max_cut(const Graph& g);
std::size_t cut_size(const Graph& g, const VertexSet& side_one);

/// mapping[v] is the image in g2 of vertex v of g1.
struct IsomorphismMap {
  std::vector<Vertex> mapping;
};

std::optional<IsomorphismMap> brute_isomorphic(const Graph& g1, const Graph& g2);
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<Vertex>& mapping);

std::optional<VertexOrdering> brute_hamiltonian_path(const Graph& g);

/// Inclusion-minimal u,v-separators over all non-adjacent pairs, from every
/// vertex subset; the empty set is excluded.
std::vector<VertexSet> brute_minimal_separators(const Graph& g);
/// Same, for one pair.
std::vector<VertexSet> brute_minimal_separators_between(const Graph& g, Vertex u, Vertex v);

/// Maximal clique modules from all vertex subsets, kept when N(X) is empty
/// or an inclusion-minimal separator of some non-adjacent pair.
std::vector<Moplex> brute_moplexes(const Graph& g);

/// Extension-by-extension search for an induced cycle through each induced
/// P3 centred at v, over vertex subsets.
bool brute_is_avoidable(const Graph& g, Vertex v);

/// Backtracking search for an umbrella-free ordering.
std::optional<VertexOrdering> brute_cocomparability_ordering(const Graph& g);

/// Every DFS ordering of a connected graph, by exhaustive search.
std::vector<VertexOrdering> all_dfs_orderings(const Graph& g);
/// Every ordering satisfying the LDFS four-point condition.
std::vector<VertexOrdering> all_ldfs_orderings(const Graph& g);

}  // namespace moplex::oracle
