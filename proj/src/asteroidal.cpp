#include "moplex/asteroidal.hpp"

#include <functional>
#include <string>

#include "moplex/errors.hpp"
#include "moplex/moplex.hpp"

namespace moplex {

namespace {

constexpr int kBlocked = -1;

// comp[a][x]: component id of x in G - N[a], or kBlocked for x in N[a].
std::vector<std::vector<int>> component_labels(const Graph& g) {
  std::vector<std::vector<int>> labels(g.order(), std::vector<int>(g.order(), kBlocked));
  for (Vertex a = 0; a < g.order(); ++a) {
    int id = 0;
    for (const auto& c : components(g, ~closed_neighborhood(g, a))) {
      for (Vertex x : c) labels[a][x] = id;
      ++id;
    }
  }
  return labels;
}

// Whether the asteroidal set `set` stays asteroidal after adding `y`, a
// vertex non-adjacent to all of it.
bool extends(const std::vector<std::vector<int>>& labels, const std::vector<Vertex>& set, Vertex y) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Vertex a = set[i];
    // y must sit with the other members in G - N[a]
    const int side = labels[a][y];
    if (side == kBlocked) return false;
    if (set.size() > 1 && labels[a][set[i == 0 ? 1 : 0]] != side) return false;
    // and all members must sit together in G - N[y]
    if (labels[y][a] == kBlocked || labels[y][a] != labels[y][set.front()]) return false;
  }
  return true;
}

}  // namespace

bool is_asteroidal_set(const Graph& g, const VertexSet& a) {
  if (!is_independent_set(g, a)) return false;
  for (Vertex v : a) {
    VertexSet others = a;
    others.erase(v);
    if (others.empty()) continue;
    const VertexSet rest = ~closed_neighborhood(g, v);
    if (!others.is_subset_of(component_of(g, rest, others.front()))) return false;
  }
  return true;
}

VertexSet max_asteroidal_set(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kAsteroidalVertexLimit) {
    throw ResourceLimitError("asteroidal number search limited to " +
                             std::to_string(kAsteroidalVertexLimit) + " vertices, got " +
                             std::to_string(n));
  }
  const auto labels = component_labels(g);
  std::vector<Vertex> current;
  std::vector<Vertex> best;

  // Asteroidal sets are closed under taking subsets, so only asteroidal
  // prefixes are extended. Candidates are kept in ascending order.
  std::function<void(const std::vector<Vertex>&)> search = [&](const std::vector<Vertex>& candidates) {
    if (current.size() > best.size()) best = current;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (current.size() + (candidates.size() - i) <= best.size()) return;
      const Vertex x = candidates[i];
      current.push_back(x);
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        const Vertex y = candidates[j];
        if (!g.adjacent(x, y) && extends(labels, current, y)) next.push_back(y);
      }
      search(next);
      current.pop_back();
    }
  };

  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  search(all);
  return VertexSet::from_range(n, best);
}

std::size_t asteroidal_number(const Graph& g) { return max_asteroidal_set(g).size(); }

bool is_at_free(const Graph& g) { return asteroidal_number(g) <= 2; }

bool is_asteroidal_moplex_family(const Graph& g, const std::vector<Moplex>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i].vertices.intersects(family[j].vertices)) return false;
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    VertexSet others = g.empty_set();
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (j != i) others |= family[j].vertices;
    }
    if (others.empty()) continue;
    const VertexSet rest = ~closed_neighborhood(g, family[i].vertices);
    if (!others.is_subset_of(rest)) return false;
    if (!others.is_subset_of(component_of(g, rest, others.front()))) return false;
  }
  return true;
}

std::optional<std::vector<Moplex>> asteroidal_set_of_moplexes(const Graph& g, std::size_t k) {
  if (k == 0) throw PreconditionError("asteroidal_set_of_moplexes: k must be at least 1");
  const auto all = moplexes(g);
  if (k > all.size()) return std::nullopt;
  std::vector<Moplex> chosen;
  std::function<bool(std::size_t)> pick = [&](std::size_t from) {
    if (chosen.size() == k) return is_asteroidal_moplex_family(g, chosen);
    for (std::size_t i = from; i + (k - chosen.size()) <= all.size(); ++i) {
      chosen.push_back(all[i]);
      // every sub-family of an asteroidal family is asteroidal
      if (is_asteroidal_moplex_family(g, chosen) && pick(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (pick(0)) return chosen;
  return std::nullopt;
}

}  // namespace moplex
