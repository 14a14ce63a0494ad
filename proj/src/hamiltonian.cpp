#include "moplex/hamiltonian.hpp"

#include <string>

#include "moplex/errors.hpp"
#include "moplex/moplex.hpp"
#include "moplex/orderings.hpp"

namespace moplex {

VertexOrdering umbrella_free_ldfs_ordering(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("umbrella-free LDFS ordering requires a connected graph");
  const auto start = cocomparability_ordering(g);
  if (!start) throw PreconditionError("graph is not a cocomparability graph");
  const VertexOrdering first = ldfs_plus(g, *start);
  return ldfs_plus(g, first);
}

HamPathCertificate hamiltonian_path_2moplex(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("Hamiltonian path pipeline requires a connected graph");
  if (const auto count = moplex_number(g); count > 2) {
    throw PreconditionError("Hamiltonian path pipeline requires at most two moplexes, found " +
                            std::to_string(count));
  }
  VertexOrdering sigma = umbrella_free_ldfs_ordering(g);
  VertexOrdering path = dfs_plus(g, sigma);
  if (!verify_hamiltonian_path(g, path)) {
    throw PropertyViolation("DFS+ sweep of a connected 2-moplex graph is not a Hamiltonian path");
  }
  return {std::move(path), std::move(sigma)};
}

HamPathCertificate hamiltonian_path_few_avoidable(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("Hamiltonian path pipeline requires a connected graph");
  if (const auto count = avoidable_vertices(g).size(); count > 2) {
    throw PreconditionError("expected at most two avoidable vertices, found " + std::to_string(count));
  }
  VertexOrdering sigma = umbrella_free_ldfs_ordering(g);
  if (!verify_hamiltonian_path(g, sigma)) {
    throw PropertyViolation("LDFS ordering of a graph with two avoidable vertices is not a path");
  }
  return {sigma, sigma};
}

bool verify_hamiltonian_path(const Graph& g, std::span<const Vertex> path) {
  if (path.size() != g.order()) return false;
  VertexSet seen = g.empty_set();
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.order() || seen.contains(path[i])) return false;
    seen.insert(path[i]);
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

bool verify_certificate(const Graph& g, const HamPathCertificate& certificate) {
  const auto& sigma = certificate.source_ordering;
  if (!verify_hamiltonian_path(g, certificate.path)) return false;
  if (sigma.size() != g.order() || !is_connected(g)) return false;
  if (sigma.size() == 0) return true;
  return !is_umbrella_free(g, sigma) && is_ldfs_ordering(g, sigma) && is_moplicial(g, sigma.front()) &&
         is_moplicial(g, sigma.back());
}

}  // namespace moplex
