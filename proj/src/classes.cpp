#include "moplex/classes.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "moplex/asteroidal.hpp"
#include "moplex/errors.hpp"
#include "moplex/moplex.hpp"
#include "moplex/orderings.hpp"
#include "moplex/separators.hpp"

namespace moplex {

bool is_chordal(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  VertexSet visited = g.empty_set();
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!visited.contains(v) && (best == n || weight[v] > weight[best])) best = v;
    }
    // visited neighbours of a vertex must form a clique in a reversed PEO
    if (!is_clique(g, g.neighbors(best) & visited)) return false;
    visited.insert(best);
    for (Vertex u : g.neighbors(best)) ++weight[u];
  }
  return true;
}

bool is_claw_free(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    const VertexSet& nc = g.neighbors(c);
    for (Vertex x : nc) {
      const VertexSet ys = nc - g.neighbors(x);
      for (Vertex y : ys) {
        if (y <= x) continue;
        for (Vertex z : ys - g.neighbors(y)) {
          if (z > y) return false;
        }
      }
    }
  }
  return true;
}

bool is_cobipartite(const Graph& g) { return two_coloring(complement(g)).has_value(); }

bool is_proper_interval(const Graph& g) { return is_claw_free(g) && is_chordal(g) && is_at_free(g); }

bool is_cochain(const Graph& g) {
  const auto sides = two_coloring(complement(g));
  if (!sides) return false;
  // Any two-clique cover works: two incomparable members of one side give
  // an induced C4 together with the other side.
  std::vector<VertexSet> closed;
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((*sides)[v] == 0) closed.push_back(closed_neighborhood(g, v));
  }
  std::sort(closed.begin(), closed.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  for (std::size_t i = 1; i < closed.size(); ++i) {
    if (!closed[i - 1].is_subset_of(closed[i])) return false;
  }
  return true;
}

bool is_cocomparability(const Graph& g) { return cocomparability_ordering(g).has_value(); }

namespace {

template <typename Keep>
bool every_induced_subgraph_2moplex(const Graph& g, Keep keep) {
  const std::size_t n = g.order();
  if (n > kHereditaryVertexLimit) {
    throw ResourceLimitError("hereditary sweep limited to " + std::to_string(kHereditaryVertexLimit) +
                             " vertices, got " + std::to_string(n));
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet x(n);
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) x.insert(v);
    }
    if (!keep(x)) continue;
    if (moplex_number(induced_subgraph(g, x).graph) > 2) return false;
  }
  return true;
}

}  // namespace

bool hereditary_2moplex_check(const Graph& g) {
  return every_induced_subgraph_2moplex(g, [](const VertexSet&) { return true; });
}

bool connected_hereditary_2moplex_check(const Graph& g) {
  return every_induced_subgraph_2moplex(g, [&](const VertexSet& x) { return is_connected(g, x); });
}

bool PreferenceOrientation::is_irreflexive() const {
  for (Vertex v = 0; v < prefers.size(); ++v) {
    if (prefers[v].contains(v)) return false;
  }
  return true;
}

bool PreferenceOrientation::is_transitive() const {
  for (Vertex x = 0; x < prefers.size(); ++x) {
    for (Vertex y : prefers[x]) {
      if (!prefers[y].is_subset_of(prefers[x])) return false;
    }
  }
  return true;
}

VertexOrdering PreferenceOrientation::topological_order() const {
  const std::size_t n = prefers.size();
  std::vector<std::size_t> indegree(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y : prefers[x]) ++indegree[y];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<Vertex> seq;
  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    seq.push_back(v);
    for (Vertex y : prefers[v]) {
      if (--indegree[y] == 0) ready.push(y);
    }
  }
  if (seq.size() != n) throw PropertyViolation("preference relation contains a cycle");
  return VertexOrdering(std::move(seq));
}

PreferenceOrientation moplex_preference_orientation(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("preference orientation requires a connected graph");
  if (is_complete(g)) throw PreconditionError("preference orientation requires a non-complete graph");
  auto mops = moplexes(g);
  if (mops.size() != 2) {
    throw PreconditionError("preference orientation requires exactly two moplexes, found " +
                            std::to_string(mops.size()));
  }
  const std::size_t n = g.order();
  PreferenceOrientation out{mops[0], mops[1], {}, std::vector<VertexSet>(n, VertexSet(n))};
  const Vertex u = out.moplex_u.vertices.front();
  const auto separators = all_minimal_separators(g);

  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      std::optional<bool> x_first;
      for (const auto& s : separators) {
        if (!is_minimal_xy_separator(g, s, x, y)) continue;
        if (s.intersects(out.moplex_u.vertices)) {
          throw PropertyViolation("a minimal separator meets the moplex U");
        }
        const VertexSet side = component_of(g, ~s, u);
        if (side.contains(x) == side.contains(y)) {
          throw PropertyViolation("U does not lie beside exactly one of " + std::to_string(x) +
                                  " and " + std::to_string(y));
        }
        const bool prefers_x = side.contains(x);
        if (x_first && *x_first != prefers_x) {
          throw PropertyViolation("minimal separators disagree on the preference between " +
                                  std::to_string(x) + " and " + std::to_string(y));
        }
        x_first = prefers_x;
      }
      if (!x_first) throw PropertyViolation("no minimal separator for a non-adjacent pair");
      if (*x_first) {
        out.prefers[x].insert(y);
      } else {
        out.prefers[y].insert(x);
      }
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y : out.prefers[x]) out.oriented_pairs.emplace_back(x, y);
  }
  return out;
}

}  // namespace moplex
