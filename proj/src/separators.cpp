#include "moplex/separators.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "moplex/errors.hpp"

namespace moplex {

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  for (auto& c : components(g, ~s)) {
    if (open_neighborhood(g, c) == s) out.push_back(std::move(c));
  }
  return out;
}

std::optional<SeparatorCertificate> is_minimal_separator(const Graph& g, const VertexSet& s) {
  if (s.empty()) return std::nullopt;
  auto full = full_components(g, s);
  if (full.size() < 2) return std::nullopt;
  return SeparatorCertificate{s, {std::move(full[0]), std::move(full[1])}, std::nullopt};
}

bool is_minimal_xy_separator(const Graph& g, const VertexSet& s, Vertex x, Vertex y) {
  if (x == y || s.contains(x) || s.contains(y) || s.empty()) return false;
  const VertexSet rest = ~s;
  const VertexSet cx = component_of(g, rest, x);
  if (cx.contains(y)) return false;
  const VertexSet cy = component_of(g, rest, y);
  return open_neighborhood(g, cx) == s && open_neighborhood(g, cy) == s;
}

std::vector<VertexSet> all_minimal_separators(const Graph& g) {
  std::unordered_set<VertexSet> found;
  std::deque<VertexSet> pending;
  auto offer = [&](VertexSet s) {
    if (s.empty()) return;
    if (found.insert(s).second) pending.push_back(std::move(s));
  };

  for (Vertex v = 0; v < g.order(); ++v) {
    for (const auto& c : components(g, ~closed_neighborhood(g, v))) {
      offer(open_neighborhood(g, c));
    }
  }
  while (!pending.empty()) {
    const VertexSet s = std::move(pending.front());
    pending.pop_front();
    for (Vertex x : s) {
      for (const auto& c : components(g, ~(s | g.neighbors(x)))) offer(open_neighborhood(g, c));
    }
  }

  std::vector<VertexSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> minimal_separators_between(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw PreconditionError("minimal_separators_between: x and y must be distinct");
  if (g.adjacent(x, y)) throw PreconditionError("minimal_separators_between: x and y are adjacent");
  std::vector<VertexSet> out;
  for (auto& s : all_minimal_separators(g)) {
    if (is_minimal_xy_separator(g, s, x, y)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace moplex
