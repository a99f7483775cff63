#include "assoc/search_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace assoc {

SearchTree::SearchTree(const Graph& g, const std::vector<int>& parent)
    : graph_(&g) {
  int n = g.vertex_count();
  if (static_cast<int>(parent.size()) != n)
    throw std::invalid_argument("parent array size mismatch");
  parent_.resize(n);
  for (int v = 0; v < n; ++v) {
    int p = parent[v];
    if (p == -1 || p == v) {
      if (root_ != -1) throw std::invalid_argument("tree has two roots");
      root_ = v;
      parent_[v] = static_cast<std::int8_t>(v);
    } else {
      if (p < 0 || p >= n) throw std::invalid_argument("parent id out of range");
      parent_[v] = static_cast<std::int8_t>(p);
    }
  }
  if (root_ == -1) throw std::invalid_argument("tree has no root");
  // acyclic and spanning: every vertex must reach the root
  for (int v = 0; v < n; ++v) {
    int cur = v, hops = 0;
    while (cur != root_) {
      cur = parent_[cur];
      if (++hops > n) throw std::invalid_argument("parent links contain a cycle");
    }
  }
  key_.assign(reinterpret_cast<const char*>(parent_.data()), parent_.size());
}

SearchTree tree_from_key(const Graph& g, const std::string& key) {
  std::vector<int> parent(key.size());
  for (std::size_t v = 0; v < key.size(); ++v) parent[v] = key[v];
  return SearchTree(g, parent);
}

std::vector<int> SearchTree::children(int v) const {
  std::vector<int> out;
  for (int u = 0; u < vertex_count(); ++u)
    if (u != root_ && parent_[u] == v) out.push_back(u);
  return out;
}

bool SearchTree::is_leaf(int v) const {
  for (int u = 0; u < vertex_count(); ++u)
    if (u != root_ && parent_[u] == v) return false;
  return true;
}

VertexSet SearchTree::subtree(int v) const {
  // one upward pass per vertex; n is small
  VertexSet out;
  for (int u = 0; u < vertex_count(); ++u) {
    int cur = u;
    while (true) {
      if (cur == v) {
        out.add(u);
        break;
      }
      if (cur == root_) break;
      cur = parent_[cur];
    }
  }
  return out;
}

int SearchTree::depth(int v) const {
  int d = 0;
  while (v != root_) {
    v = parent_[v];
    ++d;
  }
  return d;
}

SearchTree from_ordering(const Graph& g, const EliminationOrdering& order) {
  int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("ordering must list every vertex once");
  std::vector<int> rank(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (v < 0 || v >= n || rank[v] != -1)
      throw std::invalid_argument("ordering is not a permutation of V");
    rank[v] = i;
  }
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");

  std::vector<int> parent(n, -1);
  // iterative stack of (domain, parent) pieces
  std::vector<std::pair<VertexSet, int>> todo{{g.vertices(), -1}};
  while (!todo.empty()) {
    auto [domain, par] = todo.back();
    todo.pop_back();
    int r = -1, best = n;
    for (int v : domain) {
      if (rank[v] < best) {
        best = rank[v];
        r = v;
      }
    }
    parent[r] = par;
    for (VertexSet comp : components_within(g, domain.without(r)))
      todo.emplace_back(comp, r);
  }
  return SearchTree(g, parent);
}

bool is_valid_search_tree(const Graph& g, const SearchTree& t) {
  int n = g.vertex_count();
  if (t.vertex_count() != n || &t.graph() != &g) return false;
  // subtree sets bottom-up
  std::vector<VertexSet> sub(n);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&t](int a, int b) { return t.depth(a) > t.depth(b); });
  for (int v : order) {
    sub[v] = VertexSet::single(v);
    for (int c : t.children(v)) sub[v] = sub[v] | sub[c];
  }
  for (int v = 0; v < n; ++v) {
    if (!is_connected_within(g, sub[v])) return false;
    // each child subtree must be closed under adjacency inside sub[v] - v,
    // which makes it exactly one component of G[sub[v]] - v
    VertexSet rest = sub[v].without(v);
    for (int c : t.children(v)) {
      VertexSet reach;
      for (int u : sub[c]) reach = reach | g.neighbors(u);
      if (!(reach & rest).subset_of(sub[c])) return false;
    }
  }
  return sub[t.root()] == g.vertices();
}

SearchTree rotate(const SearchTree& t, int b) {
  int a = t.parent(b);
  if (a < 0) throw std::invalid_argument("rotate: vertex is the root");
  const Graph& g = t.graph();
  VertexSet a_sub = t.subtree(a);
  // component of G[subtree(a)] - b that keeps a
  VertexSet b_prime = component_of(g, a_sub.without(b), a);

  std::vector<int> parent(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) parent[v] = t.parent(v);
  parent[b] = t.parent(a);  // -1 when a was the root
  parent[a] = b;
  for (int c : t.children(b)) {
    if (b_prime.contains(c)) parent[c] = a;
  }
  return SearchTree(g, parent);
}

std::vector<SearchTree> neighbors(const SearchTree& t) {
  std::vector<SearchTree> out;
  out.reserve(t.vertex_count() - 1);
  for (int v = 0; v < t.vertex_count(); ++v)
    if (v != t.root()) out.push_back(rotate(t, v));
  return out;
}

RotationSequence lift_to_root(const SearchTree& t, int v) {
  RotationSequence seq;
  SearchTree cur = t;
  while (cur.parent(v) != -1) {
    seq.push_back({cur.parent(v), v});
    cur = rotate(cur, v);
  }
  return seq;
}

int height(const SearchTree& t) {
  int best = 0;
  for (int v = 0; v < t.vertex_count(); ++v) best = std::max(best, t.depth(v));
  return best + 1;
}

SearchTree check_sequence(const Graph& g, const SearchTree& t,
                          const RotationSequence& seq) {
  if (&t.graph() != &g) throw std::invalid_argument("tree is not on this graph");
  SearchTree cur = t;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    int b = seq[k].child;
    if (b < 0 || b >= g.vertex_count())
      throw RotationError(k, "step " + std::to_string(k) + " names no vertex");
    if (cur.parent(b) == -1)
      throw RotationError(k, "step " + std::to_string(k) + " rotates the current root");
    cur = rotate(cur, b);
  }
  return cur;
}

Rotation rotation_between(const SearchTree& from, const SearchTree& to) {
  for (int b = 0; b < from.vertex_count(); ++b) {
    int a = from.parent(b);
    if (a >= 0 && to.parent(a) == b) return {a, b};
  }
  throw std::invalid_argument("trees are not related by one rotation");
}

RotationSequence inverted(const RotationSequence& seq) {
  RotationSequence out;
  out.reserve(seq.size());
  for (std::size_t i = seq.size(); i-- > 0;)
    out.push_back({seq[i].child, seq[i].parent});
  return out;
}

}  // namespace assoc
