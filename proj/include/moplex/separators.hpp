#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "moplex/graph.hpp"

namespace moplex {

/// A minimal separator together with two of its full components.
struct SeparatorCertificate {
  VertexSet separator;
  std::pair<VertexSet, VertexSet> full_components;
  std::optional<std::pair<Vertex, Vertex>> endpoints;
};

/// Components C of G - S with N(C) = S, ascending by minimum vertex.
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s);

/// A certificate iff S is non-empty and G - S has at least two S-full
/// components; the certificate holds the two lowest-id ones.
std::optional<SeparatorCertificate> is_minimal_separator(const Graph& g, const VertexSet& s);

/// True iff x and y lie in two distinct S-full components of G - S.
bool is_minimal_xy_separator(const Graph& g, const VertexSet& s, Vertex x, Vertex y);

/// Every minimal separator of g, sorted. Seed with N(C) for the components C
/// of G - N[v], then close under S -> N(C) for components C of G - (S u N(x)),
/// x in S, until no new set appears.
std::vector<VertexSet> all_minimal_separators(const Graph& g);

/// All minimal x,y-separators; x and y must be distinct and non-adjacent.
std::vector<VertexSet> minimal_separators_between(const Graph& g, Vertex x, Vertex y);

}  // namespace moplex
