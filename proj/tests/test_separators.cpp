#include "doctest.h"
#include "moplex/corpus.hpp"
#include "moplex/errors.hpp"
#include "moplex/moplex.hpp"
#include "moplex/oracles.hpp"
#include "moplex/separators.hpp"
#include "support.hpp"

using namespace moplex;
using moplex::test::set_of;

TEST_CASE("full components") {
  const Graph p3 = path_graph(3);
  const auto p3_full = full_components(p3, set_of(3, {1}));
  REQUIRE(p3_full.size() == 2);
  CHECK(p3_full[0] == set_of(3, {0}));
  CHECK(p3_full[1] == set_of(3, {2}));

  const Graph c4 = cycle_graph(4);  // 0-1-2-3-0; {1,3} plays the role of {2,4}
  const auto c4_full = full_components(c4, set_of(4, {1, 3}));
  REQUIRE(c4_full.size() == 2);
  CHECK(c4_full[0] == set_of(4, {0}));
  CHECK(c4_full[1] == set_of(4, {2}));

  const Graph k4 = complete_graph(4);
  // G - S is a single component, full by definition, so never two of them
  CHECK(full_components(k4, set_of(4, {0, 1})) == std::vector<VertexSet>{set_of(4, {2, 3})});
  CHECK(full_components(k4, set_of(4, {0, 1, 2})).size() == 1);
  CHECK(!is_minimal_separator(k4, set_of(4, {0, 1})).has_value());
}

TEST_CASE("is_minimal_separator") {
  const Graph p3 = path_graph(3);
  const auto cert = is_minimal_separator(p3, set_of(3, {1}));
  REQUIRE(cert.has_value());
  CHECK(cert->full_components.first == set_of(3, {0}));
  CHECK(cert->full_components.second == set_of(3, {2}));

  const Graph p4 = path_graph(4);
  CHECK(!is_minimal_separator(p4, set_of(4, {1, 2})).has_value());
  // frozen from brute_minimal_separators: {b,c} does separate a from d but is not minimal
  CHECK(oracle::brute_minimal_separators_between(p4, 0, 3) ==
        std::vector<VertexSet>{set_of(4, {1}), set_of(4, {2})});

  const Graph k5 = complete_graph(5);
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    VertexSet s(5);
    for (Vertex v = 0; v < 5; ++v) {
      if ((mask >> v) & 1U) s.insert(v);
    }
    CHECK(!is_minimal_separator(k5, s).has_value());
  }
  CHECK(!is_minimal_separator(Graph(2), Graph(2).empty_set()).has_value());
}

TEST_CASE("minimal separators between a pair") {
  const Graph p4 = path_graph(4);
  CHECK(minimal_separators_between(p4, 0, 3) == std::vector<VertexSet>{set_of(4, {1}), set_of(4, {2})});
  CHECK(minimal_separators_between(path_graph(3), 0, 2) == std::vector<VertexSet>{set_of(3, {1})});
  CHECK(minimal_separators_between(cycle_graph(4), 0, 2) == std::vector<VertexSet>{set_of(4, {1, 3})});
  CHECK_THROWS_AS(minimal_separators_between(p4, 0, 1), PreconditionError);
  CHECK_THROWS_AS(minimal_separators_between(p4, 2, 2), PreconditionError);
}

TEST_CASE("all minimal separators") {
  CHECK(all_minimal_separators(path_graph(4)) == std::vector<VertexSet>{set_of(4, {1}), set_of(4, {2})});
  CHECK(all_minimal_separators(complete_graph(6)).empty());
  // frozen from brute_minimal_separators: the five non-adjacent pairs of C5
  CHECK(all_minimal_separators(cycle_graph(5)) == std::vector<VertexSet>{set_of(5, {0, 2}), set_of(5, {0, 3}),
                                                                         set_of(5, {1, 3}), set_of(5, {1, 4}),
                                                                         set_of(5, {2, 4})});
}

namespace {

void check_certificates(const Graph& g) {
  for (const auto& s : all_minimal_separators(g)) {
    const auto cert = is_minimal_separator(g, s);
    REQUIRE(cert.has_value());
    const auto& [c1, c2] = cert->full_components;
    REQUIRE(!c1.intersects(c2));
    REQUIRE(!c1.intersects(s));
    REQUIRE(open_neighborhood(g, c1) == s);
    REQUIRE(open_neighborhood(g, c2) == s);
    // no proper subset separates representatives of the two full components
    const Vertex x = c1.front();
    const Vertex y = c2.front();
    for (Vertex drop : s) {
      VertexSet smaller = s;
      smaller.erase(drop);
      REQUIRE(component_of(g, ~smaller, x).contains(y));
    }
  }
}

}  // namespace

TEST_CASE("property: separator certificates are valid and minimal") {
  test::each_graph_upto(6, check_certificates);
  Corpus corpus({CorpusKind::random, 8, 0.4, 3, 300});
  while (auto g = corpus.next()) check_certificates(*g);
}

TEST_CASE("property: enumeration agrees with the subset oracle") {
  test::each_graph_upto(6, [](const Graph& g) { REQUIRE(all_minimal_separators(g) == oracle::brute_minimal_separators(g)); });
  for (const Graph& g : test::classes(7)) REQUIRE(all_minimal_separators(g) == oracle::brute_minimal_separators(g));
  for (std::size_t n : {8, 9, 10}) {
    Corpus corpus({CorpusKind::random, n, 0.45, 100 + n, 200});
    while (auto g = corpus.next()) REQUIRE(all_minimal_separators(*g) == oracle::brute_minimal_separators(*g));
  }
}

TEST_CASE("property: every component of G - S contains a moplex") {
  test::each_graph_upto(6, [](const Graph& g) {
    const auto ms = moplexes(g);
    for (const auto& s : all_minimal_separators(g)) {
      for (const auto& c : components(g, ~s)) {
        REQUIRE(std::any_of(ms.begin(), ms.end(), [&](const Moplex& m) { return m.vertices.is_subset_of(c); }));
      }
    }
  });
}
