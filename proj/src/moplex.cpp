#include "moplex/moplex.hpp"

#include <string>

#include "moplex/errors.hpp"
#include "moplex/separators.hpp"

namespace moplex {

std::vector<VertexSet> maximal_clique_modules(const Graph& g) {
  std::vector<VertexSet> classes;
  VertexSet assigned = g.empty_set();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (assigned.contains(v)) continue;
    const VertexSet closed_v = closed_neighborhood(g, v);
    VertexSet twins = g.empty_set();
    twins.insert(v);
    for (Vertex u : g.neighbors(v)) {
      if (!assigned.contains(u) && closed_neighborhood(g, u) == closed_v) twins.insert(u);
    }
    assigned |= twins;
    classes.push_back(std::move(twins));
  }
  return classes;
}

std::vector<Moplex> moplexes(const Graph& g) {
  std::vector<Moplex> out;
  for (auto& x : maximal_clique_modules(g)) {
    VertexSet nbhd = open_neighborhood(g, x);
    if (!nbhd.empty() && !is_minimal_separator(g, nbhd)) continue;
    const bool simplicial = is_clique(g, nbhd);
    out.push_back(Moplex{std::move(x), std::move(nbhd), simplicial});
  }
  return out;
}

std::size_t moplex_number(const Graph& g) { return moplexes(g).size(); }

bool is_k_moplex(const Graph& g, std::size_t k) { return moplex_number(g) <= k; }

bool is_moplicial(const Graph& g, Vertex v) {
  for (const auto& m : moplexes(g)) {
    if (m.vertices.contains(v)) return true;
  }
  // range check for vertices outside every moplex
  (void)g.neighbors(v);
  return false;
}

std::vector<std::pair<Vertex, Vertex>> extensions(const Graph& g, Vertex v) {
  std::vector<std::pair<Vertex, Vertex>> out;
  const VertexSet& nv = g.neighbors(v);
  for (Vertex x : nv) {
    for (Vertex y : nv - g.neighbors(x)) {
      if (x < y) out.emplace_back(x, y);
    }
  }
  return out;
}

bool is_avoidable(const Graph& g, Vertex v) {
  const VertexSet outside = ~closed_neighborhood(g, v);
  for (const auto& [x, y] : extensions(g, v)) {
    VertexSet allowed = outside;
    allowed.insert(x);
    allowed.insert(y);
    if (!component_of(g, allowed, x).contains(y)) return false;
  }
  return true;
}

VertexSet avoidable_vertices(const Graph& g) {
  VertexSet out = g.empty_set();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_avoidable(g, v)) out.insert(v);
  }
  return out;
}

InducedSubgraph delete_avoidable_nonmoplicial(const Graph& g, Vertex v) {
  if (is_moplicial(g, v)) {
    throw PreconditionError("vertex " + std::to_string(v) + " is moplicial");
  }
  if (!is_avoidable(g, v)) {
    throw PreconditionError("vertex " + std::to_string(v) + " is not avoidable");
  }
  return delete_vertex(g, v);
}

}  // namespace moplex
