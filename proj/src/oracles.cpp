#include "moplex/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "moplex/errors.hpp"

namespace moplex::oracle {

namespace {

void guard(const Graph& g, std::size_t limit, const char* what) {
  if (g.order() > limit) {
    throw ResourceLimitError(std::string(what) + " limited to " + std::to_string(limit) +
                             " vertices, got " + std::to_string(g.order()));
  }
}

VertexSet from_mask(std::size_t n, std::uint64_t mask) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) s.insert(v);
  }
  return s;
}

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

// Adjacency rows as 64-bit masks; built from the graph's adjacency predicate.
std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> rows(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (u != v && g.adjacent(u, v)) rows[u] |= bit(v);
    }
  }
  return rows;
}

// Vertices reachable from `from` without entering `removed`.
Mask reach(const std::vector<Mask>& adj, Vertex from, Mask removed) {
  Mask seen = bit(from);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<Vertex>(__builtin_ctzll(f))];
    next &= ~seen & ~removed;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool separates(const std::vector<Mask>& adj, Mask removed, Vertex u, Vertex v) {
  return (reach(adj, u, removed) & bit(v)) == 0;
}

bool minimal_separator_of_pair(const std::vector<Mask>& adj, Mask mask, Vertex u, Vertex v) {
  if ((mask & (bit(u) | bit(v))) != 0) return false;
  if (!separates(adj, mask, u, v)) return false;
  // separation is monotone in the removed set, so single-vertex checks suffice
  for (Mask m = mask; m != 0; m &= m - 1) {
    if (separates(adj, mask & ~(m & -m), u, v)) return false;
  }
  return true;
}

}  // namespace

std::size_t cut_size(const Graph& g, const VertexSet& side_one) {
  std::size_t size = 0;
  for (const auto& [u, v] : g.edges()) {
    if (side_one.contains(u) != side_one.contains(v)) ++size;
  }
  return size;
}

Cut brute_max_cut(const Graph& g) {
  guard(g, kMaxCutLimit, "brute_max_cut");
  const std::size_t n = g.order();
  const auto edges = g.edges();
  std::uint64_t best_mask = 0;
  std::size_t best = 0;
  const std::uint64_t masks = n == 0 ? 1 : std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 0; m < masks; ++m) {
    // bit v set: vertex v+1 on side two; vertex 0 stays on side one
    const std::uint64_t side_two = m << 1;
    std::size_t size = 0;
    for (const auto& [u, v] : edges) size += ((side_two >> u) ^ (side_two >> v)) & 1U;
    if (size > best) {
      best = size;
      best_mask = side_two;
    }
  }
  Cut cut{from_mask(n, ~best_mask & ((n == 64 ? 0 : std::uint64_t{1} << n) - 1)), from_mask(n, best_mask),
          best};
  return cut;
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<Vertex>& mapping) {
  if (g1.order() != g2.order() || mapping.size() != g1.order()) return false;
  std::vector<bool> used(g2.order(), false);
  for (Vertex v : mapping) {
    if (v >= g2.order() || used[v]) return false;
    used[v] = true;
  }
  for (Vertex a = 0; a < g1.order(); ++a) {
    for (Vertex b = a + 1; b < g1.order(); ++b) {
      if (g1.adjacent(a, b) != g2.adjacent(mapping[a], mapping[b])) return false;
    }
  }
  return true;
}

std::optional<IsomorphismMap> brute_isomorphic(const Graph& g1, const Graph& g2) {
  guard(g1, kIsomorphismLimit, "brute_isomorphic");
  guard(g2, kIsomorphismLimit, "brute_isomorphic");
  const std::size_t n = g1.order();
  if (n != g2.order() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  std::vector<Vertex> mapping(n);
  std::vector<bool> used(n, false);
  std::function<bool(Vertex)> extend = [&](Vertex v) {
    if (v == n) return true;
    for (Vertex image = 0; image < n; ++image) {
      if (used[image] || g1.degree(v) != g2.degree(image)) continue;
      bool consistent = true;
      for (Vertex earlier = 0; earlier < v && consistent; ++earlier) {
        consistent = g1.adjacent(v, earlier) == g2.adjacent(image, mapping[earlier]);
      }
      if (!consistent) continue;
      mapping[v] = image;
      used[image] = true;
      if (extend(v + 1)) return true;
      used[image] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return IsomorphismMap{mapping};
}

std::optional<VertexOrdering> brute_hamiltonian_path(const Graph& g) {
  guard(g, kHamiltonianLimit, "brute_hamiltonian_path");
  const std::size_t n = g.order();
  if (n == 0) return VertexOrdering(std::vector<Vertex>{});
  std::vector<Vertex> path;
  std::vector<bool> used(n, false);
  std::function<bool()> extend = [&]() {
    if (path.size() == n) return true;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || (!path.empty() && !g.adjacent(path.back(), v))) continue;
      used[v] = true;
      path.push_back(v);
      if (extend()) return true;
      path.pop_back();
      used[v] = false;
    }
    return false;
  };
  if (!extend()) return std::nullopt;
  return VertexOrdering(path);
}

std::vector<VertexSet> brute_minimal_separators_between(const Graph& g, Vertex u, Vertex v) {
  guard(g, kSeparatorLimit, "brute_minimal_separators");
  const std::size_t n = g.order();
  std::vector<VertexSet> out;
  if (u == v || g.adjacent(u, v)) return out;
  const auto adj = adjacency_masks(g);
  for (Mask mask = 1; mask < bit(n); ++mask) {
    if (minimal_separator_of_pair(adj, mask, u, v)) out.push_back(from_mask(n, mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> brute_minimal_separators(const Graph& g) {
  guard(g, kSeparatorLimit, "brute_minimal_separators");
  const std::size_t n = g.order();
  const auto adj = adjacency_masks(g);
  std::vector<VertexSet> out;
  for (Mask mask = 1; mask < bit(n); ++mask) {
    bool found = false;
    for (Vertex u = 0; u < n && !found; ++u) {
      for (Vertex v = u + 1; v < n && !found; ++v) {
        found = (adj[u] & bit(v)) == 0 && minimal_separator_of_pair(adj, mask, u, v);
      }
    }
    if (found) out.push_back(from_mask(n, mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Moplex> brute_moplexes(const Graph& g) {
  guard(g, kMoplexLimit, "brute_moplexes");
  const std::size_t n = g.order();
  const auto adj = adjacency_masks(g);
  auto is_clique_mask = [&](Mask mask) {
    for (Mask m = mask; m != 0; m &= m - 1) {
      const auto a = static_cast<Vertex>(__builtin_ctzll(m));
      if ((mask & ~bit(a) & ~adj[a]) != 0) return false;
    }
    return true;
  };
  // every outside vertex sees all of `mask` or none of it
  auto is_module_mask = [&](Mask mask) {
    for (Vertex x = 0; x < n; ++x) {
      if ((mask & bit(x)) != 0) continue;
      const Mask seen = adj[x] & mask;
      if (seen != 0 && seen != mask) return false;
    }
    return true;
  };
  std::vector<Mask> clique_modules;
  for (Mask mask = 1; mask < bit(n); ++mask) {
    if (is_clique_mask(mask) && is_module_mask(mask)) clique_modules.push_back(mask);
  }
  std::vector<Moplex> out;
  for (Mask x : clique_modules) {
    const bool maximal = std::none_of(clique_modules.begin(), clique_modules.end(),
                                      [&](Mask y) { return y != x && (x & y) == x; });
    if (!maximal) continue;
    Mask nbhd = 0;
    for (Mask m = x; m != 0; m &= m - 1) nbhd |= adj[static_cast<Vertex>(__builtin_ctzll(m))];
    nbhd &= ~x;
    bool ok = nbhd == 0;
    for (Vertex a = 0; a < n && !ok; ++a) {
      for (Vertex b = a + 1; b < n && !ok; ++b) {
        ok = (adj[a] & bit(b)) == 0 && minimal_separator_of_pair(adj, nbhd, a, b);
      }
    }
    if (!ok) continue;
    out.push_back(Moplex{from_mask(n, x), from_mask(n, nbhd), is_clique_mask(nbhd)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_is_avoidable(const Graph& g, Vertex v) {
  guard(g, kMoplexLimit, "brute_is_avoidable");
  const std::size_t n = g.order();
  const auto adj = adjacency_masks(g);
  // does `mask` induce a cycle: at least three vertices, all of degree two, connected
  auto induces_cycle = [&](Mask mask) {
    if (__builtin_popcountll(mask) < 3) return false;
    for (Mask m = mask; m != 0; m &= m - 1) {
      if (__builtin_popcountll(adj[static_cast<Vertex>(__builtin_ctzll(m))] & mask) != 2) return false;
    }
    return reach(adj, static_cast<Vertex>(__builtin_ctzll(mask)), ~mask) == mask;
  };
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if ((adj[v] & bit(x)) == 0 || (adj[v] & bit(y)) == 0 || (adj[x] & bit(y)) != 0) continue;
      const Mask base = bit(v) | bit(x) | bit(y);
      bool found = false;
      for (Mask mask = 0; mask < bit(n) && !found; ++mask) {
        if ((mask & base) == base) found = induces_cycle(mask);
      }
      if (!found) return false;
    }
  }
  return true;
}

std::optional<VertexOrdering> brute_cocomparability_ordering(const Graph& g) {
  guard(g, kOrderingSearchLimit, "brute_cocomparability_ordering");
  const std::size_t n = g.order();
  std::vector<Vertex> prefix;
  std::vector<bool> used(n, false);
  std::function<bool()> extend = [&]() {
    if (prefix.size() == n) return true;
    for (Vertex z = 0; z < n; ++z) {
      if (used[z]) continue;
      // z becomes the last vertex: it must not close an umbrella
      bool umbrella = false;
      for (std::size_t i = 0; i < prefix.size() && !umbrella; ++i) {
        if (!g.adjacent(prefix[i], z)) continue;
        for (std::size_t j = i + 1; j < prefix.size() && !umbrella; ++j) {
          umbrella = !g.adjacent(prefix[i], prefix[j]) && !g.adjacent(prefix[j], z);
        }
      }
      if (umbrella) continue;
      used[z] = true;
      prefix.push_back(z);
      if (extend()) return true;
      prefix.pop_back();
      used[z] = false;
    }
    return false;
  };
  if (!extend()) return std::nullopt;
  return VertexOrdering(prefix);
}

std::vector<VertexOrdering> all_dfs_orderings(const Graph& g) {
  guard(g, kOrderingSearchLimit, "all_dfs_orderings");
  const std::size_t n = g.order();
  std::vector<VertexOrdering> out;
  std::vector<Vertex> seq;
  std::vector<bool> used(n, false);
  // the DFS stack is recomputed from the sequence: the ancestors of the last
  // vertex are the vertices it was discovered from
  std::vector<Vertex> stack;
  std::function<void()> extend = [&]() {
    if (seq.size() == n) {
      out.emplace_back(seq);
      return;
    }
    if (seq.empty()) {
      for (Vertex s = 0; s < n; ++s) {
        used[s] = true;
        seq.push_back(s);
        stack.push_back(s);
        extend();
        stack.pop_back();
        seq.pop_back();
        used[s] = false;
      }
      return;
    }
    auto saved = stack;
    while (!stack.empty()) {
      bool open = false;
      for (Vertex u = 0; u < n && !open; ++u) open = !used[u] && g.adjacent(stack.back(), u);
      if (open) break;
      stack.pop_back();
    }
    if (!stack.empty()) {
      const Vertex top = stack.back();
      for (Vertex u = 0; u < n; ++u) {
        if (used[u] || !g.adjacent(top, u)) continue;
        used[u] = true;
        seq.push_back(u);
        stack.push_back(u);
        extend();
        stack.pop_back();
        seq.pop_back();
        used[u] = false;
      }
    }
    stack = std::move(saved);
  };
  extend();
  return out;
}

std::vector<VertexOrdering> all_ldfs_orderings(const Graph& g) {
  guard(g, kOrderingSearchLimit, "all_ldfs_orderings");
  const std::size_t n = g.order();
  std::vector<VertexOrdering> out;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool ok = true;
    for (std::size_t ia = 0; ia < n && ok; ++ia) {
      for (std::size_t ib = ia + 1; ib < n && ok; ++ib) {
        if (g.adjacent(perm[ia], perm[ib])) continue;
        for (std::size_t ic = ib + 1; ic < n && ok; ++ic) {
          if (!g.adjacent(perm[ia], perm[ic])) continue;
          bool witness = false;
          for (std::size_t id = ia + 1; id < ib && !witness; ++id) {
            witness = g.adjacent(perm[id], perm[ib]) && !g.adjacent(perm[id], perm[ic]);
          }
          ok = witness;
        }
      }
    }
    if (ok) out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace moplex::oracle
