#include <random>

#include "doctest.h"
#include "moplex/corpus.hpp"
#include "moplex/errors.hpp"
#include "moplex/fixtures.hpp"
#include "moplex/oracles.hpp"
#include "support.hpp"

using namespace moplex;
using namespace moplex::oracle;
using moplex::test::set_of;

TEST_CASE("brute max cut") {
  CHECK(brute_max_cut(complete_graph(2)).size == 1);
  CHECK(brute_max_cut(cycle_graph(4)).size == 4);
  CHECK(brute_max_cut(complete_graph(4)).size == 4);
  CHECK(brute_max_cut(cycle_graph(5)).size == 4);
  CHECK(brute_max_cut(petersen_graph()).size == 12);
  CHECK(brute_max_cut(Graph(0)).size == 0);
  const Cut cut = brute_max_cut(complete_graph(5));
  CHECK(cut.size == 6);
  CHECK(!cut.side_one.intersects(cut.side_two));
  CHECK((cut.side_one | cut.side_two) == VertexSet::full(5));
  CHECK(cut_size(complete_graph(5), cut.side_one) == cut.size);
  CHECK_THROWS_AS(brute_max_cut(Graph(kMaxCutLimit + 1)), ResourceLimitError);
}

TEST_CASE("brute isomorphism") {
  const Graph pet = petersen_graph();
  const auto self = brute_isomorphic(pet, pet);
  REQUIRE(self.has_value());
  CHECK(is_isomorphism(pet, pet, self->mapping));
  CHECK(!brute_isomorphic(path_graph(3), complete_graph(3)).has_value());
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(!brute_isomorphic(cycle_graph(6), two_triangles).has_value());
  const Graph shuffled = relabel(path_graph(5), {2, 4, 0, 1, 3});
  const auto map = brute_isomorphic(path_graph(5), shuffled);
  REQUIRE(map.has_value());
  CHECK(is_isomorphism(path_graph(5), shuffled, map->mapping));
  CHECK_THROWS_AS(brute_isomorphic(Graph(kIsomorphismLimit + 1), Graph(kIsomorphismLimit + 1)), ResourceLimitError);
}

TEST_CASE("brute Hamiltonian path") {
  CHECK(brute_hamiltonian_path(path_graph(4)).has_value());
  CHECK(!brute_hamiltonian_path(claw_graph()).has_value());
  const auto pet = brute_hamiltonian_path(petersen_graph());
  REQUIRE(pet.has_value());
  for (std::size_t i = 0; i + 1 < pet->size(); ++i) CHECK(petersen_graph().adjacent((*pet)[i], (*pet)[i + 1]));
  CHECK_THROWS_AS(brute_hamiltonian_path(Graph(kHamiltonianLimit + 1)), ResourceLimitError);
}

TEST_CASE("brute moplexes") {
  CHECK(brute_moplexes(cycle_graph(4)).size() == 4);
  const auto k3 = brute_moplexes(complete_graph(3));
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].vertices == VertexSet::full(3));
  const auto fig = figure1_graph();
  const auto ms = brute_moplexes(fig.graph);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].vertices == set_of(8, {fig.id("A2")}));
  CHECK(ms[1].vertices == set_of(8, {fig.id("B2"), fig.id("C2")}));
  CHECK_THROWS_AS(brute_moplexes(Graph(kMoplexLimit + 1)), ResourceLimitError);
}

TEST_CASE("brute separators and orderings") {
  CHECK(brute_minimal_separators(path_graph(4)) == std::vector<VertexSet>{set_of(4, {1}), set_of(4, {2})});
  CHECK(brute_minimal_separators(complete_graph(4)).empty());
  CHECK(brute_minimal_separators(Graph(3)).empty());
  CHECK(brute_cocomparability_ordering(cycle_graph(4)).has_value());
  CHECK(!brute_cocomparability_ordering(cycle_graph(6)).has_value());
  CHECK(!brute_cocomparability_ordering(cycle_graph(5)).has_value());
  CHECK(all_dfs_orderings(path_graph(3)).size() == 4);
  CHECK(all_ldfs_orderings(complete_graph(3)).size() == 6);
}

TEST_CASE("property: max cut is invariant under swapping sides") {
  Corpus corpus({CorpusKind::random, 9, 0.5, 41, 100});
  while (auto g = corpus.next()) {
    const Cut cut = brute_max_cut(*g);
    REQUIRE(cut_size(*g, cut.side_one) == cut.size);
    REQUIRE(cut_size(*g, cut.side_two) == cut.size);
  }
}

TEST_CASE("property: brute isomorphism is reflexive and symmetric") {
  std::mt19937_64 rng(5);
  Corpus corpus({CorpusKind::random, 8, 0.5, 43, 100});
  std::vector<Graph> pool;
  while (auto g = corpus.next()) pool.push_back(*g);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    REQUIRE(brute_isomorphic(pool[i], pool[i]).has_value());
    std::vector<Vertex> perm(8);
    for (Vertex v = 0; v < 8; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph copy = relabel(pool[i], perm);
    REQUIRE(brute_isomorphic(pool[i], copy).has_value());
    const Graph& other = pool[(i + 1) % pool.size()];
    REQUIRE(brute_isomorphic(pool[i], other).has_value() == brute_isomorphic(other, pool[i]).has_value());
    REQUIRE(brute_isomorphic(pool[i], other).has_value() == (canonical_code(pool[i]) == canonical_code(other)));
  }
}
