#include "moplex/corpus.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "moplex/errors.hpp"

namespace moplex {

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph edgeless_graph(std::size_t n) { return Graph(n); }

Graph star_graph(std::size_t m) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= m; ++v) edges.emplace_back(0, v);
  return Graph(m + 1, edges);
}

namespace {

constexpr std::array<std::pair<std::string_view, CorpusKind>, 9> kKindNames{{
    {"all_labeled", CorpusKind::all_labeled},
    {"all_unlabeled", CorpusKind::all_unlabeled},
    {"random", CorpusKind::random},
    {"paths", CorpusKind::paths},
    {"cycles", CorpusKind::cycles},
    {"stars", CorpusKind::stars},
    {"cochain_random", CorpusKind::cochain_random},
    {"cobipartite_random", CorpusKind::cobipartite_random},
    {"bipartite_connected_random", CorpusKind::bipartite_connected_random},
}};

// Bernoulli trial and bounded draw from raw engine output, so streams are
// identical across standard library implementations.
bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return bound == 0 ? 0 : static_cast<std::size_t>(rng() % bound);
}

std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, i)]);
  return perm;
}

Graph from_edge_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace

std::optional<CorpusKind> parse_corpus_kind(std::string_view name) {
  for (const auto& [text, kind] : kKindNames) {
    if (text == name) return kind;
  }
  return std::nullopt;
}

std::string_view corpus_kind_name(CorpusKind kind) {
  for (const auto& [text, k] : kKindNames) {
    if (k == kind) return text;
  }
  return "unknown";
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
  }
  return Graph(g.order(), edges);
}

Corpus::Corpus(CorpusSpec spec) : spec_(spec) {
  switch (spec_.kind) {
    case CorpusKind::all_labeled:
      if (spec_.n > kAllLabeledLimit) {
        throw ResourceLimitError("all_labeled corpus limited to n <= " + std::to_string(kAllLabeledLimit));
      }
      total_ = std::uint64_t{1} << (spec_.n * (spec_.n - (spec_.n > 0 ? 1 : 0)) / 2);
      break;
    case CorpusKind::all_unlabeled:
      unlabeled_ = isomorphism_classes(spec_.n);
      total_ = unlabeled_.size();
      break;
    case CorpusKind::paths:
    case CorpusKind::cycles:
    case CorpusKind::stars:
      total_ = 1;
      break;
    default:
      if (spec_.p < 0.0 || spec_.p > 1.0) throw PreconditionError("edge probability must lie in [0, 1]");
      total_ = spec_.count;
      break;
  }
  reset();
}

void Corpus::reset() {
  index_ = 0;
  rng_.seed(spec_.seed);
}

std::optional<Graph> Corpus::next() {
  if (index_ >= total_) return std::nullopt;
  const std::uint64_t i = index_++;
  switch (spec_.kind) {
    case CorpusKind::all_labeled:
      return from_edge_mask(spec_.n, i);
    case CorpusKind::all_unlabeled:
      return unlabeled_[i];
    case CorpusKind::paths:
      return path_graph(spec_.n);
    case CorpusKind::cycles:
      return cycle_graph(spec_.n);
    case CorpusKind::stars:
      return star_graph(spec_.n);
    default:
      return random_graph();
  }
}

Graph Corpus::random_graph() {
  const std::size_t n = spec_.n;
  switch (spec_.kind) {
    case CorpusKind::random: {
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (coin(rng_, spec_.p)) edges.emplace_back(u, v);
        }
      }
      return Graph(n, edges);
    }
    case CorpusKind::cochain_random: {
      // X = first k vertices, Y = the rest; x_i sees a prefix of Y whose
      // length grows with i, so closed neighbourhoods in X are nested.
      const std::size_t k = draw(rng_, n + 1);
      std::vector<std::size_t> reach(k);
      for (auto& r : reach) r = draw(rng_, n - k + 1);
      std::sort(reach.begin(), reach.end());
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          const bool same_side = (u < k) == (v < k);
          if (same_side || (u < k && v - k < reach[u])) edges.emplace_back(u, v);
        }
      }
      return relabel(Graph(n, edges), random_permutation(rng_, n));
    }
    case CorpusKind::cobipartite_random: {
      const std::size_t k = draw(rng_, n + 1);
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if ((u < k) == (v < k) || coin(rng_, spec_.p)) edges.emplace_back(u, v);
        }
      }
      return relabel(Graph(n, edges), random_permutation(rng_, n));
    }
    case CorpusKind::bipartite_connected_random: {
      if (n < 2) throw PreconditionError("connected bipartite graphs with two sides need n >= 2");
      for (;;) {
        const std::size_t k = 1 + draw(rng_, n - 1);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < k; ++u) {
          for (Vertex v = k; v < n; ++v) {
            if (coin(rng_, spec_.p)) edges.emplace_back(u, v);
          }
        }
        Graph g(n, edges);
        if (is_connected(g)) return relabel(g, random_permutation(rng_, n));
      }
    }
    default:
      throw PreconditionError("not a random corpus kind");
  }
}

namespace {

// Stable colour refinement; colours are ranks of (colour, neighbour colours).
std::vector<std::size_t> refine_colors(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> color(n, 0);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  for (;;) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex u : g.neighbors(v)) sig[v].second.push_back(color[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> next(n);
    for (Vertex v = 0; v < n; ++v) {
      next[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                         sorted.begin());
    }
    const auto classes = [](const std::vector<std::size_t>& c) {
      return std::set<std::size_t>(c.begin(), c.end()).size();
    };
    if (classes(next) == classes(color)) return next;
    color = std::move(next);
  }
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCanonicalLimit) {
    throw ResourceLimitError("canonical_code limited to n <= " + std::to_string(kCanonicalLimit));
  }
  const auto color = refine_colors(g);
  // cells: vertices grouped by colour, cells ordered by colour
  std::map<std::size_t, std::vector<Vertex>> by_color;
  for (Vertex v = 0; v < n; ++v) by_color[color[v]].push_back(v);
  std::vector<std::vector<Vertex>> cells;
  for (auto& [c, members] : by_color) cells.push_back(std::move(members));

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<Vertex> order;
  order.reserve(n);
  // enumerate the products of permutations of each cell
  auto evaluate = [&]() {
    std::uint64_t code = 0;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++bit) {
        if (g.adjacent(order[i], order[j])) code |= std::uint64_t{1} << bit;
      }
    }
    best = std::min(best, code);
  };
  std::function<void(std::size_t)> walk = [&](std::size_t cell) {
    if (cell == cells.size()) {
      evaluate();
      return;
    }
    auto members = cells[cell];
    std::sort(members.begin(), members.end());
    do {
      order.insert(order.end(), members.begin(), members.end());
      walk(cell + 1);
      order.resize(order.size() - members.size());
    } while (std::next_permutation(members.begin(), members.end()));
  };
  walk(0);
  return best;
}

std::vector<Graph> isomorphism_classes(std::size_t n) {
  if (n > kAllUnlabeledLimit) {
    throw ResourceLimitError("isomorphism classes limited to n <= " + std::to_string(kAllUnlabeledLimit));
  }
  std::vector<Graph> level{Graph(0)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::map<std::uint64_t, Graph> seen;
    for (const auto& base : level) {
      const auto base_edges = base.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        auto edges = base_edges;
        for (Vertex v = 0; v + 1 < k; ++v) {
          if ((mask >> v) & 1U) edges.emplace_back(v, k - 1);
        }
        Graph g(k, edges);
        seen.try_emplace(canonical_code(g), std::move(g));
      }
    }
    level.clear();
    for (auto& [code, g] : seen) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace moplex
