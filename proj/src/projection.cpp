#include "assoc/projection.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace assoc {

namespace {

// eligible = simplicial in G[domain] and outside s
std::vector<int> eliminable(const Graph& g, VertexSet domain, VertexSet s) {
  std::vector<int> out;
  for (int v : domain - s)
    if (is_simplicial_within(g, domain, v)) out.push_back(v);
  return out;
}

struct Splicer {
  std::vector<int> parent;  // parent per vertex, -1 root, -2 removed
  int root;

  explicit Splicer(const SearchTree& t) : root(t.root()) {
    parent.resize(t.vertex_count());
    for (int v = 0; v < t.vertex_count(); ++v) parent[v] = t.parent(v);
  }

  std::vector<int> children(int v) const {
    std::vector<int> out;
    for (std::size_t u = 0; u < parent.size(); ++u)
      if (parent[u] == v) out.push_back(static_cast<int>(u));
    return out;
  }

  void remove(int v) {
    std::vector<int> kids = children(v);
    if (kids.size() > 1)
      throw std::logic_error("simplicial vertex with two children");
    if (v == root) {
      if (kids.empty()) throw std::invalid_argument("cannot project away everything");
      root = kids[0];
      parent[kids[0]] = -1;
    } else if (!kids.empty()) {
      parent[kids[0]] = parent[v];
    }
    parent[v] = -2;
  }
};

SearchTree project_impl(const SearchTree& t, const InducedSubgraph& sub,
                        std::mt19937_64* rng) {
  const Graph& g = t.graph();
  VertexSet s;
  for (int old : sub.to_old) s.add(old);
  Splicer splicer(t);
  VertexSet domain = g.vertices();
  while (domain != s) {
    std::vector<int> cand = eliminable(g, domain, s);
    if (cand.empty())
      throw std::invalid_argument("set is not convex: elimination is stuck");
    int v = rng ? cand[(*rng)() % cand.size()] : cand.front();
    splicer.remove(v);
    domain.remove(v);
  }
  std::vector<int> parent(sub.to_old.size());
  for (std::size_t i = 0; i < sub.to_old.size(); ++i) {
    int p = splicer.parent[sub.to_old[i]];
    parent[i] = p < 0 ? -1 : sub.to_new[p];
  }
  return SearchTree(sub.graph, parent);
}

}  // namespace

bool is_convex(const Graph& g, VertexSet s) {
  if (!is_chordal(g)) throw std::invalid_argument("convexity needs a chordal graph");
  VertexSet domain = g.vertices();
  while (domain != s) {
    std::vector<int> cand = eliminable(g, domain, s);
    if (cand.empty()) return false;
    domain.remove(cand.front());
  }
  return true;
}

SearchTree project_tree(const SearchTree& t, const InducedSubgraph& sub) {
  return project_impl(t, sub, nullptr);
}

SearchTree project_tree_shuffled(const SearchTree& t, const InducedSubgraph& sub,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return project_impl(t, sub, &rng);
}

RotationSequence project_sequence(const SearchTree& start,
                                  const RotationSequence& seq,
                                  const InducedSubgraph& sub) {
  VertexSet s;
  for (int old : sub.to_old) s.add(old);
  RotationSequence out;
  SearchTree cur = start;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    int b = seq[k].child;
    int a = cur.parent(b);
    if (a < 0) throw RotationError(k, "step rotates the current root");
    if (s.contains(a) && s.contains(b)) out.push_back({sub.to_new[a], sub.to_new[b]});
    cur = rotate(cur, b);
  }
  return out;
}

}  // namespace assoc
