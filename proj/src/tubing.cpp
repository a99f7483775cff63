#include "assoc/tubing.hpp"

#include <algorithm>

namespace assoc {

Tubing to_tubing(const SearchTree& t) {
  Tubing tubes;
  tubes.reserve(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) tubes.push_back(t.subtree(v));
  std::sort(tubes.begin(), tubes.end(), [](VertexSet a, VertexSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits() < b.bits();
  });
  return tubes;
}

bool is_tube(const Graph& g, VertexSet s) {
  return !s.empty() && is_connected_within(g, s);
}

bool is_valid_tubing(const Graph& g, const Tubing& tubes) {
  for (VertexSet s : tubes)
    if (!is_tube(g, s)) return false;
  for (std::size_t i = 0; i < tubes.size(); ++i) {
    for (std::size_t j = i + 1; j < tubes.size(); ++j) {
      VertexSet a = tubes[i], b = tubes[j];
      if (a == b) return false;  // set semantics: no duplicates
      bool nested = a.subset_of(b) || b.subset_of(a);
      bool nonadjacent = !is_connected_within(g, a | b);
      if (!nested && !nonadjacent) return false;
    }
  }
  return true;
}

}  // namespace assoc
