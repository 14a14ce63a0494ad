#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moplex/graph.hpp"

namespace moplex {

struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;

  /// Id of the vertex with this label; throws InputError if absent.
  Vertex id(std::string_view label) const;
  std::vector<Vertex> ids(const std::vector<std::string>& names) const;
};

/// Eight vertices Center, A, B, C, D, A2, B2, C2 (ids 0..7); 14 edges.
/// Moplexes {A2} and {B2, C2}; Center is avoidable but not moplicial.
LabeledGraph figure1_graph();

/// Vertices a..f (ids 0..5), edges ad ab bd ed bc ce ef be.
LabeledGraph figure4_graph();

/// Triangle 0-1-2 with pendant vertices 3, 4, 5 on its corners.
Graph net_graph();
Graph claw_graph();
Graph petersen_graph();

}  // namespace moplex
