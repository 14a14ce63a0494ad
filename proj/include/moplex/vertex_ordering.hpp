#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "moplex/vertex_set.hpp"

namespace moplex {

// A total order on the vertex set {0..n-1}: the sequence plus its inverse.
class VertexOrdering {
 public:
  VertexOrdering() = default;
  /// Throws InputError unless sequence is a permutation of 0..n-1.
  explicit VertexOrdering(std::vector<Vertex> sequence);
  static VertexOrdering identity(std::size_t n);

  std::size_t size() const { return sequence_.size(); }
  Vertex operator[](std::size_t index) const { return sequence_[index]; }
  std::size_t position(Vertex v) const { return position_.at(v); }
  bool before(Vertex a, Vertex b) const { return position(a) < position(b); }

  Vertex front() const { return sequence_.front(); }
  Vertex back() const { return sequence_.back(); }

  const std::vector<Vertex>& sequence() const { return sequence_; }
  VertexOrdering reversed() const;

  auto begin() const { return sequence_.begin(); }
  auto end() const { return sequence_.end(); }

  friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;

 private:
  std::vector<Vertex> sequence_;
  std::vector<std::size_t> position_;
};

}  // namespace moplex
