#include <vector>

#include "doctest.h"
#include "moplex/classes.hpp"
#include "moplex/corpus.hpp"
#include "moplex/errors.hpp"
#include "moplex/fixtures.hpp"
#include "moplex/gadgets.hpp"
#include "moplex/hamiltonian.hpp"
#include "moplex/moplex.hpp"
#include "moplex/oracles.hpp"
#include "moplex/orderings.hpp"
#include "support.hpp"

using namespace moplex;
using moplex::test::order_of;

TEST_CASE("verify_hamiltonian_path") {
  CHECK(verify_hamiltonian_path(path_graph(3), order_of({0, 1, 2})));
  CHECK(!verify_hamiltonian_path(path_graph(3), order_of({0, 2, 1})));
  CHECK(verify_hamiltonian_path(complete_graph(4), order_of({3, 0, 2, 1})));
  const std::vector<Vertex> repeated{0, 1, 0};
  CHECK(!verify_hamiltonian_path(path_graph(3), repeated));
  const std::vector<Vertex> short_path{0, 1};
  CHECK(!verify_hamiltonian_path(path_graph(3), short_path));
}

TEST_CASE("2-moplex pipeline on paths and the Figure 1 fixture") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto cert = hamiltonian_path_2moplex(path_graph(n));
    const bool forward = cert.path == VertexOrdering::identity(n);
    const bool backward = cert.path == VertexOrdering::identity(n).reversed();
    CHECK((forward || backward));
    CHECK(verify_certificate(path_graph(n), cert));
  }
  const auto fig = figure1_graph();
  REQUIRE(oracle::brute_hamiltonian_path(fig.graph).has_value());
  const auto cert = hamiltonian_path_2moplex(fig.graph);
  CHECK(verify_hamiltonian_path(fig.graph, cert.path));
  CHECK(verify_certificate(fig.graph, cert));
  CHECK(is_moplicial(fig.graph, cert.source_ordering.front()));
  CHECK(is_moplicial(fig.graph, cert.source_ordering.back()));
}

TEST_CASE("2-moplex pipeline preconditions") {
  CHECK_THROWS_AS(hamiltonian_path_2moplex(cycle_graph(5)), PreconditionError);
  CHECK_THROWS_AS(hamiltonian_path_2moplex(Graph(2)), PreconditionError);
}

TEST_CASE("few-avoidable pipeline") {
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto kn = hamiltonian_path_few_avoidable(complete_graph(n));
    CHECK(verify_hamiltonian_path(complete_graph(n), kn.path));
  }
  // every vertex of K5 is simplicial, hence avoidable
  CHECK_THROWS_AS(hamiltonian_path_few_avoidable(complete_graph(5)), PreconditionError);
  const auto p4 = hamiltonian_path_few_avoidable(path_graph(4));
  CHECK(p4.path == p4.source_ordering);
  const bool forward = p4.path == VertexOrdering::identity(4);
  const bool backward = p4.path == VertexOrdering::identity(4).reversed();
  CHECK((forward || backward));
  CHECK_THROWS_AS(hamiltonian_path_few_avoidable(claw_graph()), PreconditionError);
}

TEST_CASE("property: connected 2-moplex graphs are traceable via the pipeline") {
  std::size_t checked = 0;
  auto check = [&](const Graph& g) {
    if (!is_connected(g) || moplex_number(g) > 2) return;
    REQUIRE(verify_certificate(g, hamiltonian_path_2moplex(g)));
    ++checked;
  };
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Graph& g : test::classes(n)) check(g);
  }
  for (const CorpusKind kind : {CorpusKind::random, CorpusKind::cochain_random, CorpusKind::cobipartite_random}) {
    Corpus corpus({kind, 9, 0.7, 31, 400});
    while (auto g = corpus.next()) check(*g);
  }
  CHECK(checked > 1000);
}

TEST_CASE("property: gadget outputs are traceable via the pipeline") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : test::classes(n)) {
      if (const auto sigma = cocomparability_ordering(g)) {
        const auto out = embed_in_2moplex(g, *sigma);
        REQUIRE(verify_certificate(out.graph, hamiltonian_path_2moplex(out.graph)));
      }
      if (const auto sides = clique_partition(g); sides && !sides->first.empty() && !sides->second.empty()) {
        const auto out = maxcut_gadget(g, sides->first, sides->second);
        REQUIRE(verify_certificate(out.graph, hamiltonian_path_2moplex(out.graph)));
      }
      if (const auto sides = bipartition(g); sides && n >= 2 && is_connected(g)) {
        const auto out = gi_gadget(g, sides->first, sides->second);
        REQUIRE(verify_certificate(out.graph, hamiltonian_path_2moplex(out.graph)));
      }
    }
  }
}

TEST_CASE("property: few avoidable vertices make sigma itself a Hamiltonian path") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Graph& g : test::classes(n)) {
      if (!is_connected(g) || avoidable_vertices(g).size() > 2) continue;
      const auto cert = hamiltonian_path_few_avoidable(g);
      REQUIRE(verify_hamiltonian_path(g, cert.source_ordering));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("property: DFS+ over the umbrella-free LDFS ordering finds a path whenever one exists") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : test::classes(n)) {
      if (!is_connected(g) || !is_cocomparability(g)) continue;
      const bool exists = oracle::brute_hamiltonian_path(g).has_value();
      const bool found = verify_hamiltonian_path(g, dfs_plus(g, umbrella_free_ldfs_ordering(g)));
      REQUIRE(found == exists);
    }
  }
}
