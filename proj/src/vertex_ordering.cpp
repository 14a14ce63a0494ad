#include "moplex/vertex_ordering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "moplex/errors.hpp"

namespace moplex {

VertexOrdering::VertexOrdering(std::vector<Vertex> sequence)
    : sequence_(std::move(sequence)),
      position_(sequence_.size(), std::numeric_limits<std::size_t>::max()) {
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    const Vertex v = sequence_[i];
    if (v >= sequence_.size()) {
      throw InputError("ordering mentions vertex " + std::to_string(v) + " but has only " +
                       std::to_string(sequence_.size()) + " entries");
    }
    if (position_[v] != std::numeric_limits<std::size_t>::max()) {
      throw InputError("ordering repeats vertex " + std::to_string(v));
    }
    position_[v] = i;
  }
}

VertexOrdering VertexOrdering::identity(std::size_t n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  return VertexOrdering(std::move(seq));
}

VertexOrdering VertexOrdering::reversed() const {
  std::vector<Vertex> seq(sequence_.rbegin(), sequence_.rend());
  return VertexOrdering(std::move(seq));
}

}  // namespace moplex
