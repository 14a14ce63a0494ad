#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "moplex/graph.hpp"

namespace moplex {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph edgeless_graph(std::size_t n);
/// K_{1,m}: centre 0, leaves 1..m.
Graph star_graph(std::size_t m);

/// Largest n for which every labelled graph is enumerated.
inline constexpr std::size_t kAllLabeledLimit = 7;
/// Largest n for which isomorphism classes are generated.
inline constexpr std::size_t kAllUnlabeledLimit = 8;
/// Largest n accepted by canonical_code.
inline constexpr std::size_t kCanonicalLimit = 11;

enum class CorpusKind {
  all_labeled,
  all_unlabeled,
  random,
  paths,
  cycles,
  stars,
  cochain_random,
  cobipartite_random,
  bipartite_connected_random,
};

std::optional<CorpusKind> parse_corpus_kind(std::string_view name);
std::string_view corpus_kind_name(CorpusKind kind);

struct CorpusSpec {
  CorpusKind kind = CorpusKind::all_labeled;
  /// Vertex count (leaf count for stars).
  std::size_t n = 0;
  /// Edge probability for the random kinds.
  double p = 0.5;
  std::uint64_t seed = 0;
  /// Number of graphs for the random kinds.
  std::size_t count = 1;
};

// Restartable, deterministic stream of graphs.
class Corpus {
 public:
  /// Throws ResourceLimitError past the exhaustive limits.
  explicit Corpus(CorpusSpec spec);

  std::optional<Graph> next();
  void reset();
  const CorpusSpec& spec() const { return spec_; }

 private:
  Graph random_graph();

  CorpusSpec spec_;
  std::uint64_t index_ = 0;
  std::uint64_t total_ = 0;
  std::mt19937_64 rng_;
  std::vector<Graph> unlabeled_;
};

/// Calls visit on every labelled graph on n vertices, n <= kAllLabeledLimit.
template <typename Visit>
void for_each_labeled_graph(std::size_t n, Visit visit) {
  Corpus corpus({CorpusKind::all_labeled, n});
  while (auto g = corpus.next()) visit(*g);
}

/// Isomorphism-invariant code: the smallest upper-triangle adjacency word
/// over all relabellings compatible with colour refinement.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class on n vertices, built by
/// extending the classes on n-1 vertices with a new vertex in every way.
std::vector<Graph> isomorphism_classes(std::size_t n);

/// Relabels g by the permutation perm (vertex v becomes perm[v]).
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace moplex
