#pragma once

#include <span>

#include "moplex/graph.hpp"
#include "moplex/vertex_ordering.hpp"

namespace moplex {

struct HamPathCertificate {
  /// Consecutive vertices adjacent; every vertex exactly once.
  VertexOrdering path;
  /// Umbrella-free LDFS ordering with moplicial first and last vertices.
  VertexOrdering source_ordering;
};

/// Umbrella-free LDFS ordering of a connected cocomparability graph whose
/// first and last vertices are moplicial: two LDFS+ sweeps started from a
/// cocomparability ordering.
VertexOrdering umbrella_free_ldfs_ordering(const Graph& g);

/// Hamiltonian path of a connected graph with at most two moplexes:
/// DFS+ over umbrella_free_ldfs_ordering(g). Throws PreconditionError on
/// disconnected input or more than two moplexes.
HamPathCertificate hamiltonian_path_2moplex(const Graph& g);

/// For connected graphs with at most two avoidable vertices the LDFS
/// ordering itself is the path.
HamPathCertificate hamiltonian_path_few_avoidable(const Graph& g);

bool verify_hamiltonian_path(const Graph& g, std::span<const Vertex> path);
inline bool verify_hamiltonian_path(const Graph& g, const VertexOrdering& path) {
  return verify_hamiltonian_path(g, std::span<const Vertex>(path.sequence()));
}

/// Certificate check: path Hamiltonian; source ordering umbrella-free, LDFS,
/// with moplicial endpoints.
bool verify_certificate(const Graph& g, const HamPathCertificate& certificate);

}  // namespace moplex
