#include "moplex/gadgets.hpp"

#include <set>
#include <string>
#include <vector>

#include "moplex/errors.hpp"
#include "moplex/orderings.hpp"

namespace moplex {

namespace {

// Mutable adjacency used while assembling a gadget.
class Assembly {
 public:
  explicit Assembly(const Graph& base, std::size_t extra)
      : n_(base.order() + extra), rows_(n_, VertexSet(n_)) {
    for (const auto& [u, v] : base.edges()) join(u, v);
  }
  void join(Vertex u, Vertex v) {
    if (u == v) return;
    rows_[u].insert(v);
    rows_[v].insert(u);
  }
  void make_clique(const std::vector<Vertex>& members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) join(members[i], members[j]);
    }
  }
  Graph build() { return Graph::from_rows(std::move(rows_)); }

 private:
  std::size_t n_;
  std::vector<VertexSet> rows_;
};

std::string indexed(const char* stem, std::size_t i) { return std::string(stem) + "(" + std::to_string(i) + ")"; }

void add_original_roles(GadgetOutput& out, std::size_t n) {
  for (Vertex v = 0; v < n; ++v) out.role_map.emplace(original_role(v), v);
}

void require_partition(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.universe() != g.order() || b.universe() != g.order()) {
    throw PreconditionError("side sets must range over the graph's vertices");
  }
  if (a.intersects(b) || (a | b) != g.vertices()) {
    throw PreconditionError("sides must partition the vertex set");
  }
  if (a.empty() || b.empty()) throw PreconditionError("both sides must be non-empty");
}

}  // namespace

std::string original_role(Vertex v) { return indexed("original", v); }

bool GadgetOutput::roles_are_consistent() const {
  std::set<Vertex> ids;
  for (const auto& [role, id] : role_map) {
    if (id >= graph.order() || !ids.insert(id).second) return false;
  }
  return ids.size() == graph.order();
}

GadgetOutput embed_in_2moplex(const Graph& g, const VertexOrdering& sigma) {
  if (sigma.size() != g.order()) throw InputError("ordering does not match the graph");
  if (auto bad = is_umbrella_free(g, sigma)) {
    throw PreconditionError("ordering has an umbrella (" + std::to_string(bad->x) + ", " +
                            std::to_string(bad->y) + ", " + std::to_string(bad->z) + ")");
  }
  const std::size_t n = g.order();
  const Vertex a0 = n;
  const Vertex b0 = 2 * n;
  const Vertex u = 3 * n;
  const Vertex w = 3 * n + 1;
  Assembly asm_(g, 2 * n + 2);
  std::vector<Vertex> a_side{u};
  std::vector<Vertex> b_side{w};
  for (std::size_t i = 0; i < n; ++i) {
    a_side.push_back(a0 + i);
    b_side.push_back(b0 + i);
    for (std::size_t j = i; j < n; ++j) {
      asm_.join(a0 + i, sigma[j]);
      asm_.join(sigma[i], b0 + j);
    }
  }
  asm_.make_clique(a_side);
  asm_.make_clique(b_side);

  GadgetOutput out{asm_.build(), {}};
  add_original_roles(out, n);
  for (std::size_t i = 0; i < n; ++i) {
    out.role_map.emplace(indexed("a", i + 1), a0 + i);
    out.role_map.emplace(indexed("b", i + 1), b0 + i);
  }
  out.role_map.emplace("u", u);
  out.role_map.emplace("w", w);
  return out;
}

GadgetOutput maxcut_gadget(const Graph& g, const VertexSet& a, const VertexSet& b) {
  require_partition(g, a, b);
  if (!is_clique(g, a) || !is_clique(g, b)) throw PreconditionError("both sides must be cliques");
  const std::size_t n = g.order();
  const std::size_t ka = a.size();
  const std::size_t kb = b.size();
  const Vertex a_prime0 = n;
  const Vertex b_prime0 = n + ka;
  const Vertex u = n + ka + kb;
  const Vertex w = u + 1;
  Assembly asm_(g, ka + kb + 2);

  std::vector<Vertex> a_block = a.to_vector();
  std::vector<Vertex> b_block = b.to_vector();
  for (std::size_t i = 0; i < ka; ++i) a_block.push_back(a_prime0 + i);
  for (std::size_t i = 0; i < kb; ++i) b_block.push_back(b_prime0 + i);
  const Vertex a_star = a_prime0;
  const Vertex b_star = b_prime0;
  for (Vertex x : b_block) asm_.join(a_star, x);
  for (Vertex x : a_block) asm_.join(b_star, x);
  a_block.push_back(u);
  b_block.push_back(w);
  asm_.make_clique(a_block);
  asm_.make_clique(b_block);

  GadgetOutput out{asm_.build(), {}};
  add_original_roles(out, n);
  out.role_map.emplace("a*", a_star);
  out.role_map.emplace("b*", b_star);
  for (std::size_t i = 1; i < ka; ++i) out.role_map.emplace(indexed("a'", i + 1), a_prime0 + i);
  for (std::size_t i = 1; i < kb; ++i) out.role_map.emplace(indexed("b'", i + 1), b_prime0 + i);
  out.role_map.emplace("u", u);
  out.role_map.emplace("w", w);
  return out;
}

GadgetOutput gi_gadget(const Graph& g, const VertexSet& a, const VertexSet& b) {
  require_partition(g, a, b);
  if (!is_connected(g)) throw PreconditionError("GI gadget requires a connected graph");
  if (!is_independent_set(g, a) || !is_independent_set(g, b)) {
    throw PreconditionError("sides must be the colour classes of a proper 2-colouring");
  }
  const std::size_t n = g.order();
  const Vertex u = n;
  const Vertex w = n + 1;
  Assembly asm_(g, 2);
  auto a_block = a.to_vector();
  auto b_block = b.to_vector();
  a_block.push_back(u);
  b_block.push_back(w);
  asm_.make_clique(a_block);
  asm_.make_clique(b_block);

  GadgetOutput out{asm_.build(), {}};
  add_original_roles(out, n);
  out.role_map.emplace("u", u);
  out.role_map.emplace("w", w);
  return out;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  const auto sides = two_coloring(g);
  if (!sides) return std::nullopt;
  std::pair<VertexSet, VertexSet> out{g.empty_set(), g.empty_set()};
  for (Vertex v = 0; v < g.order(); ++v) ((*sides)[v] == 0 ? out.first : out.second).insert(v);
  return out;
}

std::optional<std::pair<VertexSet, VertexSet>> clique_partition(const Graph& g) {
  return bipartition(complement(g));
}

}  // namespace moplex
