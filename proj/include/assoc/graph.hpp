#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace assoc {

// Everything in the library works on graphs with dense ids 0..n-1 and
// n <= 64, so vertex sets fit in one machine word.
inline constexpr int kMaxVertices = 64;

class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> ids) {
    for (int v : ids) add(v);
  }

  static VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  void add(int v) { bits_ |= std::uint64_t{1} << v; }
  void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  bool contains(int v) const { return (bits_ >> v) & 1; }
  int count() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  // lowest id in the set, or -1 when empty
  int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  bool operator==(const VertexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
      out.push_back(std::countr_zero(rest));
    return out;
  }

  // iteration over members in ascending id order
  class iterator {
  public:
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator!=(const iterator& other) const { return rest_ != other.rest_; }

  private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

private:
  std::uint64_t bits_ = 0;
};

// Simple undirected labeled graph. Immutable after construction; all
// queries are read-only and safe to share between threads.
class Graph {
public:
  // Deduplicates edges. Throws std::invalid_argument on self-loops or
  // out-of-range endpoints.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // normalized (u < v), sorted lexicographically
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  const std::string& label(int v) const { return labels_[v]; }
  void set_label(int v, std::string name) { labels_[v] = std::move(name); }
  bool has_labels() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

// Structural queries. All treat the graph as immutable.
bool is_connected(const Graph& g);
bool is_connected_within(const Graph& g, VertexSet domain);

// component of v inside the induced subgraph G[domain]; v must be in domain
VertexSet component_of(const Graph& g, VertexSet domain, int v);
std::vector<VertexSet> components_within(const Graph& g, VertexSet domain);
std::vector<VertexSet> connected_components(const Graph& g);

// true iff G[N(v)] is a clique; empty or singleton neighborhoods count
bool is_simplicial(const Graph& g, int v);
bool is_simplicial_within(const Graph& g, VertexSet domain, int v);

// Greedy simplicial elimination. Returns an ordering iff g is chordal.
std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g);
bool is_chordal(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_old;  // new id -> old id, ascending
  std::vector<int> to_new;  // old id -> new id, -1 when absent
};

// Renumbers the kept vertices 0..|s|-1 in ascending id order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

}  // namespace assoc
