#include "assoc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace assoc {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (n > kMaxVertices)
    throw std::invalid_argument("graph exceeds the 64-vertex limit");
  adj_.resize(n);
  labels_.resize(n);
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    adj_[u].add(v);
    adj_[v].add(u);
  }
}

bool Graph::has_labels() const {
  return std::any_of(labels_.begin(), labels_.end(),
                     [](const std::string& s) { return !s.empty(); });
}

VertexSet component_of(const Graph& g, VertexSet domain, int v) {
  VertexSet comp = VertexSet::single(v);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (int u : frontier) next = next | (g.neighbors(u) & domain);
    frontier = next - comp;
    comp = comp | next;
  }
  return comp;
}

bool is_connected_within(const Graph& g, VertexSet domain) {
  if (domain.empty()) return false;
  return component_of(g, domain, domain.min()) == domain;
}

bool is_connected(const Graph& g) {
  return is_connected_within(g, g.vertices());
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet domain) {
  std::vector<VertexSet> out;
  VertexSet rest = domain;
  while (!rest.empty()) {
    VertexSet comp = component_of(g, rest, rest.min());
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, g.vertices());
}

bool is_simplicial_within(const Graph& g, VertexSet domain, int v) {
  VertexSet nbrs = g.neighbors(v) & domain;
  for (int u : nbrs) {
    if (!nbrs.without(u).subset_of(g.neighbors(u))) return false;
  }
  return true;
}

bool is_simplicial(const Graph& g, int v) {
  return is_simplicial_within(g, g.vertices(), v);
}

std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g) {
  std::vector<int> order;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    int pick = -1;
    for (int v : rest) {
      if (is_simplicial_within(g, rest, v)) {
        pick = v;
        break;
      }
    }
    if (pick < 0) return std::nullopt;  // stuck: g is not chordal
    order.push_back(pick);
    rest.remove(pick);
  }
  return order;
}

bool is_chordal(const Graph& g) {
  return perfect_elimination_ordering(g).has_value();
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("induced subgraph of empty set");
  std::vector<int> to_old = s.to_vector();
  std::vector<int> to_new(g.vertex_count(), -1);
  for (std::size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    if (s.contains(u) && s.contains(v)) edges.emplace_back(to_new[u], to_new[v]);
  }
  Graph sub(static_cast<int>(to_old.size()), std::move(edges));
  for (std::size_t i = 0; i < to_old.size(); ++i) sub.set_label(static_cast<int>(i), g.label(to_old[i]));
  return {std::move(sub), std::move(to_old), std::move(to_new)};
}

}  // namespace assoc
