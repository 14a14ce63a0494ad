#include <algorithm>

#include "doctest.h"
#include "moplex/classes.hpp"
#include "moplex/corpus.hpp"
#include "moplex/errors.hpp"
#include "moplex/fixtures.hpp"
#include "moplex/moplex.hpp"
#include "moplex/oracles.hpp"
#include "moplex/separators.hpp"
#include "support.hpp"

using namespace moplex;
using moplex::test::moplex_vertex_sets;
using moplex::test::set_of;

namespace {

std::vector<VertexSet> singletons(std::size_t n) {
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < n; ++v) out.push_back(set_of(n, {v}));
  return out;
}

}  // namespace

TEST_CASE("maximal clique modules") {
  CHECK(maximal_clique_modules(complete_graph(4)) == std::vector<VertexSet>{VertexSet::full(4)});
  CHECK(maximal_clique_modules(cycle_graph(4)) == singletons(4));
  CHECK(maximal_clique_modules(path_graph(4)) == singletons(4));
  const Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(maximal_clique_modules(diamond) == std::vector<VertexSet>{set_of(4, {0}), set_of(4, {1, 2}), set_of(4, {3})});
}

TEST_CASE("moplexes of small families") {
  const auto k5 = moplexes(complete_graph(5));
  REQUIRE(k5.size() == 1);
  CHECK(k5[0].vertices == VertexSet::full(5));
  CHECK(k5[0].neighborhood.empty());
  CHECK(k5[0].simplicial);

  CHECK(moplex_vertex_sets(moplexes(claw_graph())) ==
        std::vector<VertexSet>{set_of(4, {1}), set_of(4, {2}), set_of(4, {3})});
  CHECK(moplex_vertex_sets(moplexes(cycle_graph(4))) == singletons(4));
  CHECK(moplex_vertex_sets(moplexes(edgeless_graph(3))) == singletons(3));
  CHECK(moplex_vertex_sets(moplexes(path_graph(2))) == std::vector<VertexSet>{VertexSet::full(2)});
  for (std::size_t n = 3; n <= 7; ++n) {
    CHECK(moplex_vertex_sets(moplexes(path_graph(n))) == std::vector<VertexSet>{set_of(n, {0}), set_of(n, {n - 1})});
  }
  const Graph two_cliques(5, {{0, 1}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(moplex_number(two_cliques) == 2);
}

TEST_CASE("Figure 1 fixture has exactly the two circled moplexes") {
  const auto fig = figure1_graph();
  CHECK(fig.graph.order() == 8);
  CHECK(fig.graph.edge_count() == 14);
  const auto ms = moplexes(fig.graph);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].vertices == set_of(8, {fig.id("A2")}));
  CHECK(ms[1].vertices == set_of(8, {fig.id("B2"), fig.id("C2")}));
  CHECK(!is_moplicial(fig.graph, fig.id("Center")));
  CHECK(is_moplicial(fig.graph, fig.id("C2")));
}

TEST_CASE("moplex number and moplicial vertices") {
  CHECK(moplex_number(Graph(1)) == 1);
  const Graph p5 = path_graph(5);
  CHECK(moplex_number(p5) == 2);
  CHECK(is_k_moplex(p5, 2));
  CHECK(!is_k_moplex(p5, 1));
  for (Vertex v = 1; v < 4; ++v) CHECK(!is_moplicial(p5, v));
}

TEST_CASE("extensions") {
  CHECK(extensions(path_graph(3), 1) == std::vector<std::pair<Vertex, Vertex>>{{0, 2}});
  CHECK(extensions(complete_graph(4), 2).empty());
  const auto fig = figure1_graph();
  CHECK(extensions(fig.graph, fig.id("Center")) == std::vector<std::pair<Vertex, Vertex>>{{fig.id("B"), fig.id("D")}});
}

TEST_CASE("avoidable vertices") {
  const auto fig = figure1_graph();
  CHECK(is_avoidable(fig.graph, fig.id("Center")));
  CHECK(!is_avoidable(path_graph(4), 1));
  CHECK(avoidable_vertices(cycle_graph(5)) == VertexSet::full(5));
  CHECK(avoidable_vertices(complete_graph(2)) == VertexSet::full(2));
  // frozen from brute_is_avoidable
  CHECK(avoidable_vertices(fig.graph) == set_of(8, {0, 5, 6, 7}));
  for (Vertex v = 0; v < 8; ++v) CHECK(is_avoidable(fig.graph, v) == oracle::brute_is_avoidable(fig.graph, v));
}

TEST_CASE("deleting an avoidable non-moplicial vertex") {
  const auto fig = figure1_graph();
  const auto sub = delete_avoidable_nonmoplicial(fig.graph, fig.id("Center"));
  const auto ms = moplexes(sub.graph);
  REQUIRE(ms.size() == 2);
  CHECK(sub.lift(ms[0].vertices, 8) == set_of(8, {fig.id("A2")}));
  CHECK(sub.lift(ms[1].vertices, 8) == set_of(8, {fig.id("B2"), fig.id("C2")}));

  CHECK_THROWS_AS(delete_avoidable_nonmoplicial(fig.graph, fig.id("A2")), PreconditionError);
  CHECK_THROWS_AS(delete_avoidable_nonmoplicial(path_graph(5), 2), PreconditionError);
}

TEST_CASE("property: non-complete connected graphs have two non-adjacent moplexes") {
  auto check = [](const Graph& g) {
    if (is_complete(g) || !is_connected(g)) return;
    const auto ms = moplexes(g);
    REQUIRE(ms.size() >= 2);
    bool found = false;
    for (std::size_t i = 0; i < ms.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < ms.size() && !found; ++j) {
        found = !closed_neighborhood(g, ms[i].vertices).intersects(ms[j].vertices);
      }
    }
    REQUIRE(found);
  };
  test::each_graph_upto(6, check);
  for (const Graph& g : test::classes(7)) check(g);
  for (const Graph& g : test::classes(8)) check(g);
}

TEST_CASE("property: moplicial vertices are avoidable and avoidable sets are non-empty") {
  test::each_graph_upto(6, [](const Graph& g) {
    const VertexSet avoidable = avoidable_vertices(g);
    REQUIRE(!avoidable.empty());
    for (Vertex v = 0; v < g.order(); ++v) {
      if (is_moplicial(g, v)) REQUIRE(avoidable.contains(v));
    }
  });
}

TEST_CASE("property: avoidability agrees with the induced-cycle oracle") {
  test::each_graph_upto(6, [](const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) REQUIRE(is_avoidable(g, v) == oracle::brute_is_avoidable(g, v));
  });
}

TEST_CASE("property: chordal graphs have exactly their simplicial vertices avoidable") {
  test::each_graph_upto(6, [](const Graph& g) {
    if (!is_chordal(g)) return;
    for (Vertex v = 0; v < g.order(); ++v) REQUIRE(is_avoidable(g, v) == is_clique(g, neighbors(g, v)));
  });
}

TEST_CASE("property: moplexes agree with the by-definition oracle") {
  test::each_graph_upto(6, [](const Graph& g) { REQUIRE(moplexes(g) == oracle::brute_moplexes(g)); });
  for (const Graph& g : test::classes(7)) REQUIRE(moplexes(g) == oracle::brute_moplexes(g));
}

TEST_CASE("property: deletion preserves the moplex set") {
  auto check = [](const Graph& g) {
    const auto before = moplex_vertex_sets(moplexes(g));
    for (Vertex v = 0; v < g.order(); ++v) {
      if (is_moplicial(g, v) || !is_avoidable(g, v)) continue;
      const auto sub = delete_avoidable_nonmoplicial(g, v);
      std::vector<VertexSet> after;
      for (const auto& m : moplexes(sub.graph)) after.push_back(sub.lift(m.vertices, g.order()));
      std::sort(after.begin(), after.end());
      REQUIRE(after == before);
    }
  };
  test::each_graph_upto(6, check);
  for (const Graph& g : test::classes(7)) check(g);
}

TEST_CASE("property: two moplexes of a non-complete 2-moplex graph") {
  auto check = [](const Graph& g) {
    if (is_complete(g) || !is_connected(g) || moplex_number(g) != 2) return;
    const auto ms = moplexes(g);
    REQUIRE(ms[0].simplicial);
    REQUIRE(ms[1].simplicial);
    REQUIRE(!ms[0].vertices.intersects(ms[1].vertices));
    for (const auto& s : all_minimal_separators(g)) {
      const auto parts = components(g, ~s);
      REQUIRE(parts.size() == 2);
      const bool straight = ms[0].vertices.is_subset_of(parts[0]) && ms[1].vertices.is_subset_of(parts[1]);
      const bool crossed = ms[0].vertices.is_subset_of(parts[1]) && ms[1].vertices.is_subset_of(parts[0]);
      REQUIRE((straight || crossed));
    }
  };
  test::each_graph_upto(6, check);
  for (const Graph& g : test::classes(7)) check(g);
  for (const Graph& g : test::classes(8)) check(g);
}
