#include "doctest.h"
#include "moplex/asteroidal.hpp"
#include "moplex/corpus.hpp"
#include "moplex/errors.hpp"
#include "moplex/fixtures.hpp"
#include "moplex/moplex.hpp"
#include "support.hpp"

using namespace moplex;
using moplex::test::set_of;

namespace {

// Largest asteroidal set by plain subset enumeration; used as a reference.
std::size_t subset_asteroidal_number(const Graph& g) {
  std::size_t best = 0;
  const std::size_t n = g.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet a(n);
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) a.insert(v);
    }
    if (a.size() > best && is_asteroidal_set(g, a)) best = a.size();
  }
  return best;
}

}  // namespace

TEST_CASE("asteroidal sets") {
  const Graph p4 = path_graph(4);
  CHECK(is_asteroidal_set(p4, set_of(4, {0, 3})));
  CHECK(is_asteroidal_set(p4, set_of(4, {2})));
  CHECK(is_asteroidal_set(p4, p4.empty_set()));
  CHECK(!is_asteroidal_set(p4, set_of(4, {0, 1})));
  CHECK(!is_asteroidal_set(claw_graph(), set_of(4, {1, 2, 3})));
  CHECK(is_asteroidal_set(net_graph(), set_of(6, {3, 4, 5})));
}

TEST_CASE("asteroidal number") {
  CHECK(asteroidal_number(claw_graph()) == 2);
  CHECK(moplex_number(claw_graph()) == 3);
  CHECK(asteroidal_number(net_graph()) == 3);
  CHECK(asteroidal_number(complete_graph(5)) == 1);
  CHECK(asteroidal_number(Graph(0)) == 0);
  CHECK(max_asteroidal_set(net_graph()) == set_of(6, {3, 4, 5}));
}

TEST_CASE("AT-freeness") {
  CHECK(!is_at_free(net_graph()));
  // {0, 2, 4} is an asteroidal triple of C6
  CHECK(!is_at_free(cycle_graph(6)));
  CHECK(is_asteroidal_set(cycle_graph(6), set_of(6, {0, 2, 4})));
  CHECK(is_at_free(cycle_graph(5)));
  CHECK(!is_at_free(cycle_graph(7)));
  CHECK(is_at_free(figure1_graph().graph));
}

TEST_CASE("asteroidal sets of moplexes") {
  const auto net = asteroidal_set_of_moplexes(net_graph(), 3);
  REQUIRE(net.has_value());
  REQUIRE(net->size() == 3);
  CHECK((*net)[0].vertices == set_of(6, {3}));
  CHECK((*net)[1].vertices == set_of(6, {4}));
  CHECK((*net)[2].vertices == set_of(6, {5}));
  CHECK(is_asteroidal_moplex_family(net_graph(), *net));
  CHECK(!asteroidal_set_of_moplexes(claw_graph(), 3).has_value());
  CHECK(asteroidal_set_of_moplexes(claw_graph(), 2).has_value());
  CHECK_THROWS_AS(asteroidal_set_of_moplexes(claw_graph(), 0), PreconditionError);
}

TEST_CASE("property: branch and bound matches subset enumeration") {
  test::each_graph_upto(6, [](const Graph& g) { REQUIRE(asteroidal_number(g) == subset_asteroidal_number(g)); });
  Corpus corpus({CorpusKind::random, 10, 0.3, 17, 200});
  while (auto g = corpus.next()) REQUIRE(asteroidal_number(*g) == subset_asteroidal_number(*g));
}

TEST_CASE("property: asteroidal vertex sets and asteroidal moplex sets exist together") {
  auto check = [](const Graph& g) {
    const std::size_t an = asteroidal_number(g);
    for (std::size_t k = 1; k <= g.order(); ++k) REQUIRE(asteroidal_set_of_moplexes(g, k).has_value() == (k <= an));
  };
  test::each_graph_upto(6, check);
  for (const Graph& g : test::classes(7)) check(g);
}

TEST_CASE("property: asteroidal number is at most the moplex number") {
  test::each_graph_upto(6, [](const Graph& g) { REQUIRE(asteroidal_number(g) <= moplex_number(g)); });
  for (const Graph& g : test::classes(7)) REQUIRE(asteroidal_number(g) <= moplex_number(g));
  for (const Graph& g : test::classes(8)) REQUIRE(asteroidal_number(g) <= moplex_number(g));
}

TEST_CASE("property: 2-moplex graphs are AT-free") {
  for (const Graph& g : test::classes(8)) {
    if (moplex_number(g) <= 2) REQUIRE(is_at_free(g));
  }
}

TEST_CASE("property: the gap for stars grows as m - 2") {
  for (std::size_t m = 3; m <= 8; ++m) {
    const Graph star = star_graph(m);
    CHECK(moplex_number(star) - asteroidal_number(star) == m - 2);
  }
}

TEST_CASE("property: non-complete graphs have an asteroidal pair of moplexes") {
  test::each_graph_upto(6, [](const Graph& g) {
    if (!is_complete(g)) REQUIRE(asteroidal_set_of_moplexes(g, 2).has_value());
  });
}
