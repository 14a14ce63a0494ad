#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "moplex/corpus.hpp"
#include "moplex/graph.hpp"
#include "moplex/types.hpp"
#include "moplex/vertex_ordering.hpp"

namespace moplex::test {

inline VertexSet set_of(std::size_t n, std::initializer_list<Vertex> members) { return VertexSet(n, members); }

inline VertexOrdering order_of(std::initializer_list<Vertex> seq) { return VertexOrdering(std::vector<Vertex>(seq)); }

/// Graph whose edge set is the bit pattern `mask` over pairs (u, v), u < v,
/// in lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline std::uint64_t labeled_count(std::size_t n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

/// Visits every labeled graph on n vertices.
template <typename Visit>
void each_graph(std::size_t n, Visit visit) {
  const std::uint64_t total = n < 2 ? 1 : labeled_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) visit(graph_from_mask(n, mask));
}

/// Visits every labeled graph with 1..max_n vertices.
template <typename Visit>
void each_graph_upto(std::size_t max_n, Visit visit) {
  for (std::size_t n = 1; n <= max_n; ++n) each_graph(n, visit);
}

inline std::vector<VertexSet> moplex_vertex_sets(const std::vector<Moplex>& ms) {
  std::vector<VertexSet> out;
  for (const auto& m : ms) out.push_back(m.vertices);
  return out;
}

/// Isomorphism classes on n vertices, computed once per process.
inline const std::vector<Graph>& classes(std::size_t n) {
  static std::map<std::size_t, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, isomorphism_classes(n)).first;
  return it->second;
}

}  // namespace moplex::test
