#include "assoc/trivially_perfect.hpp"

#include <algorithm>
#include <stdexcept>

namespace assoc {

namespace {

// vertices adjacent to everything else in G[domain]
VertexSet universal_within(const Graph& g, VertexSet domain) {
  VertexSet out;
  for (int v : domain) {
    if (domain.without(v).subset_of(g.neighbors(v))) out.add(v);
  }
  return out;
}

// returns the index of the created node, or -1 when G[domain] has no
// universal vertex (not trivially perfect)
int build_ucd(const Graph& g, VertexSet domain,
              std::vector<UcdNode>& nodes) {
  VertexSet bag = universal_within(g, domain);
  if (bag.empty()) return -1;
  int idx = static_cast<int>(nodes.size());
  nodes.push_back({bag, {}});
  for (VertexSet comp : components_within(g, domain - bag)) {
    int child = build_ucd(g, comp, nodes);
    if (child < 0) return -1;
    nodes[idx].children.push_back(child);
  }
  return idx;
}

}  // namespace

std::optional<UniversalCliqueDecomposition> recognize_tp(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  UniversalCliqueDecomposition ucd;
  if (build_ucd(g, g.vertices(), ucd.nodes) < 0) return std::nullopt;
  return ucd;
}

bool is_valid_ucd(const Graph& g, const UniversalCliqueDecomposition& ucd) {
  if (ucd.nodes.empty()) return false;
  // bags partition V and are nonempty
  VertexSet seen;
  for (const UcdNode& node : ucd.nodes) {
    if (node.bag.empty() || node.bag.intersects(seen)) return false;
    seen = seen | node.bag;
  }
  if (seen != g.vertices()) return false;

  // subtree unions and the node holding each vertex
  std::vector<VertexSet> subtree_union(ucd.nodes.size());
  for (std::size_t i = ucd.nodes.size(); i-- > 0;) {
    subtree_union[i] = ucd.nodes[i].bag;
    for (int c : ucd.nodes[i].children) {
      if (c <= static_cast<int>(i)) return false;  // children come later
      subtree_union[i] = subtree_union[i] | subtree_union[c];
    }
  }
  std::vector<int> node_of(g.vertex_count(), -1);
  for (std::size_t i = 0; i < ucd.nodes.size(); ++i)
    for (int v : ucd.nodes[i].bag) node_of[v] = static_cast<int>(i);

  // every edge joins bags on a common root-to-leaf path: one endpoint's
  // node must contain the other in its subtree
  for (auto [u, v] : g.edges()) {
    int s = node_of[u], t = node_of[v];
    if (!(subtree_union[s].contains(v) || subtree_union[t].contains(u))) return false;
  }
  // each bag is the maximal universal clique of its subtree's union and
  // nonleaf nodes have at least two children
  for (std::size_t i = 0; i < ucd.nodes.size(); ++i) {
    if (ucd.nodes[i].bag != universal_within(g, subtree_union[i])) return false;
    if (ucd.nodes[i].children.size() == 1) return false;
  }
  return true;
}

SearchTree min_height_tree(const Graph& g, const UniversalCliqueDecomposition& ucd) {
  std::vector<int> parent(g.vertex_count(), -1);
  // (ucd node, tree vertex to attach the bag chain under)
  std::vector<std::pair<int, int>> todo{{ucd.root(), -1}};
  while (!todo.empty()) {
    auto [idx, attach] = todo.back();
    todo.pop_back();
    for (int v : ucd.nodes[idx].bag) {
      parent[v] = attach;
      attach = v;
    }
    for (int child : ucd.nodes[idx].children) todo.emplace_back(child, attach);
  }
  return SearchTree(g, parent);
}

RotationSequence tp_transform(const Graph& g, const SearchTree& t) {
  if (!recognize_tp(g)) throw std::invalid_argument("graph is not trivially perfect");
  RotationSequence seq;
  SearchTree cur = t;
  // domains are subtree vertex sets of the running tree
  std::vector<VertexSet> todo{g.vertices()};
  while (!todo.empty()) {
    VertexSet domain = todo.back();
    todo.pop_back();
    if (domain.count() == 1) continue;
    int r = universal_within(g, domain).min();
    // lift r to the top of its subtree; every step stays inside domain
    while (cur.parent(r) != -1 && domain.contains(cur.parent(r))) {
      seq.push_back({cur.parent(r), r});
      cur = rotate(cur, r);
    }
    for (VertexSet comp : components_within(g, domain.without(r)))
      todo.push_back(comp);
  }
  return seq;
}

RotationSequence tp_path(const Graph& g, const SearchTree& t1, const SearchTree& t2) {
  RotationSequence seq = tp_transform(g, t1);
  RotationSequence back = inverted(tp_transform(g, t2));
  seq.insert(seq.end(), back.begin(), back.end());
  return seq;
}

bool edge_bound(const Graph& g) {
  auto ucd = recognize_tp(g);
  if (!ucd) throw std::invalid_argument("graph is not trivially perfect");
  int td = height(min_height_tree(g, *ucd));
  return g.edge_count() < td * g.vertex_count();
}

}  // namespace assoc
