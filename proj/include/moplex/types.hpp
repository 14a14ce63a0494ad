#pragma once

#include <compare>

#include "moplex/vertex_set.hpp"

namespace moplex {

/// An inclusion-maximal clique module whose neighbourhood is empty or a
/// minimal separator.
struct Moplex {
  VertexSet vertices;
  VertexSet neighborhood;
  /// N(vertices) is a clique.
  bool simplicial = false;

  friend bool operator==(const Moplex&, const Moplex&) = default;
  friend auto operator<=>(const Moplex& a, const Moplex& b) { return a.vertices <=> b.vertices; }
};

}  // namespace moplex
