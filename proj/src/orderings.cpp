#include "moplex/orderings.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <string>

#include "moplex/errors.hpp"

namespace moplex {

namespace {

void require_ordering_of(const Graph& g, const VertexOrdering& sigma) {
  if (sigma.size() != g.order()) {
    throw InputError("ordering has " + std::to_string(sigma.size()) + " vertices, graph has " +
                     std::to_string(g.order()));
  }
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw PreconditionError(std::string(what) + " requires a connected graph");
}

}  // namespace

std::optional<UmbrellaViolation> is_umbrella_free(const Graph& g, const VertexOrdering& sigma) {
  require_ordering_of(g, sigma);
  const std::size_t n = sigma.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex x = sigma[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vertex y = sigma[j];
      if (g.adjacent(x, y)) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vertex z = sigma[k];
        if (g.adjacent(x, z) && !g.adjacent(y, z)) return UmbrellaViolation{x, y, z};
      }
    }
  }
  return std::nullopt;
}

bool is_ldfs_ordering(const Graph& g, const VertexOrdering& sigma) {
  require_ordering_of(g, sigma);
  require_connected(g, "is_ldfs_ordering");
  const std::size_t n = sigma.size();
  for (std::size_t ia = 0; ia < n; ++ia) {
    const Vertex a = sigma[ia];
    for (std::size_t ib = ia + 1; ib < n; ++ib) {
      const Vertex b = sigma[ib];
      if (g.adjacent(a, b)) continue;
      for (std::size_t ic = ib + 1; ic < n; ++ic) {
        const Vertex c = sigma[ic];
        if (!g.adjacent(a, c)) continue;
        bool witnessed = false;
        for (std::size_t id = ia + 1; id < ib && !witnessed; ++id) {
          const Vertex d = sigma[id];
          witnessed = g.adjacent(d, b) && !g.adjacent(d, c);
        }
        if (!witnessed) return false;
      }
    }
  }
  return true;
}

bool is_dfs_ordering(const Graph& g, const VertexOrdering& sigma) {
  require_ordering_of(g, sigma);
  require_connected(g, "is_dfs_ordering");
  if (sigma.size() == 0) return true;
  VertexSet unvisited = g.vertices();
  std::vector<Vertex> stack{sigma[0]};
  unvisited.erase(sigma[0]);
  for (std::size_t i = 1; i < sigma.size(); ++i) {
    while (!stack.empty() && !g.neighbors(stack.back()).intersects(unvisited)) stack.pop_back();
    const Vertex next = sigma[i];
    if (stack.empty() || !g.adjacent(stack.back(), next)) return false;
    unvisited.erase(next);
    stack.push_back(next);
  }
  return true;
}

VertexOrdering dfs_plus(const Graph& g, const VertexOrdering& tau) {
  require_ordering_of(g, tau);
  require_connected(g, "dfs_plus");
  const std::size_t n = g.order();
  std::vector<Vertex> out;
  if (n == 0) return VertexOrdering(out);
  out.reserve(n);
  VertexSet unvisited = g.vertices();
  std::vector<Vertex> stack{tau.back()};
  unvisited.erase(tau.back());
  out.push_back(tau.back());
  while (!stack.empty()) {
    const VertexSet eligible = g.neighbors(stack.back()) & unvisited;
    if (eligible.empty()) {
      stack.pop_back();
      continue;
    }
    Vertex best = eligible.front();
    for (Vertex v : eligible) {
      if (tau.position(v) > tau.position(best)) best = v;
    }
    unvisited.erase(best);
    stack.push_back(best);
    out.push_back(best);
  }
  return VertexOrdering(std::move(out));
}

VertexOrdering ldfs_plus(const Graph& g, const VertexOrdering& tau) {
  require_ordering_of(g, tau);
  require_connected(g, "ldfs_plus");
  const std::size_t n = g.order();
  // label[v]: visit times of visited neighbours in increasing order; the
  // comparison reads them from the most recent one.
  std::vector<std::vector<std::size_t>> label(n);
  auto greater_label = [&](Vertex a, Vertex b) {
    return std::lexicographical_compare(label[b].rbegin(), label[b].rend(), label[a].rbegin(),
                                        label[a].rend());
  };
  VertexSet unvisited = g.vertices();
  std::vector<Vertex> out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = unvisited.front();
    for (Vertex v : unvisited) {
      if (greater_label(v, best) || (!greater_label(best, v) && tau.position(v) > tau.position(best))) {
        best = v;
      }
    }
    unvisited.erase(best);
    out.push_back(best);
    for (Vertex u : g.neighbors(best) & unvisited) label[u].push_back(step);
  }
  return VertexOrdering(std::move(out));
}

std::optional<std::vector<VertexSet>> transitive_orientation(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> remaining;
  remaining.reserve(n);
  for (Vertex v = 0; v < n; ++v) remaining.push_back(g.neighbors(v));
  std::vector<VertexSet> arcs(n, VertexSet(n));

  for (;;) {
    // smallest remaining edge
    std::optional<Edge> seed;
    for (Vertex u = 0; u < n && !seed; ++u) {
      if (!remaining[u].empty()) seed = Edge{u, remaining[u].front()};
    }
    if (!seed) break;

    // implication class of the arc seed within the remaining edge set
    std::vector<VertexSet> cls(n, VertexSet(n));
    std::deque<Edge> queue{*seed};
    cls[seed->first].insert(seed->second);
    auto add = [&](Vertex a, Vertex b) {
      if (!cls[a].contains(b)) {
        cls[a].insert(b);
        queue.emplace_back(a, b);
      }
    };
    while (!queue.empty()) {
      const auto [a, b] = queue.front();
      queue.pop_front();
      // ab forces ab' when bb' is not a remaining edge
      for (Vertex b2 : remaining[a]) {
        if (b2 != b && !remaining[b].contains(b2)) add(a, b2);
      }
      // ab forces a'b when aa' is not a remaining edge
      for (Vertex a2 : remaining[b]) {
        if (a2 != a && !remaining[a].contains(a2)) add(a2, b);
      }
    }
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b : cls[a]) {
        if (cls[b].contains(a)) return std::nullopt;
      }
    }
    for (Vertex a = 0; a < n; ++a) {
      arcs[a] |= cls[a];
      for (Vertex b : cls[a]) {
        remaining[a].erase(b);
        remaining[b].erase(a);
      }
    }
  }
  return arcs;
}

std::optional<VertexOrdering> cocomparability_ordering(const Graph& g) {
  const std::size_t n = g.order();
  auto arcs = transitive_orientation(complement(g));
  if (!arcs) return std::nullopt;

  std::vector<std::size_t> indegree(n, 0);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b : (*arcs)[a]) ++indegree[b];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<Vertex> seq;
  seq.reserve(n);
  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    seq.push_back(v);
    for (Vertex b : (*arcs)[v]) {
      if (--indegree[b] == 0) ready.push(b);
    }
  }
  if (seq.size() != n) throw PropertyViolation("transitive orientation contains a cycle");
  VertexOrdering sigma(std::move(seq));
  if (is_umbrella_free(g, sigma)) {
    throw PropertyViolation("topological order of the complement orientation has an umbrella");
  }
  return sigma;
}

}  // namespace moplex
