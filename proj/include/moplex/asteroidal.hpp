#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "moplex/graph.hpp"
#include "moplex/types.hpp"

namespace moplex {

/// Largest graph accepted by asteroidal_number / max_asteroidal_set.
inline constexpr std::size_t kAsteroidalVertexLimit = 64;

/// Independent A such that for each a in A, A \ {a} lies in one component of
/// G - N[a]. Sets of size at most one are asteroidal.
bool is_asteroidal_set(const Graph& g, const VertexSet& a);

/// A maximum asteroidal set (lexicographically first among the maximum ones
/// found by the search). Empty for the empty graph.
VertexSet max_asteroidal_set(const Graph& g);
std::size_t asteroidal_number(const Graph& g);
bool is_at_free(const Graph& g);

/// Pairwise disjoint moplexes X_1..X_k such that for each i, all other X_j
/// lie in one component of G - N[X_i]. Searches k-subsets of moplexes(g).
std::optional<std::vector<Moplex>> asteroidal_set_of_moplexes(const Graph& g, std::size_t k);
bool is_asteroidal_moplex_family(const Graph& g, const std::vector<Moplex>& family);

}  // namespace moplex
