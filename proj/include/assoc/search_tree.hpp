#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "assoc/graph.hpp"

namespace assoc {

// One rotation step. Applying it only needs `child`; `parent` records who
// the parent was when the step was taken (useful for reversal, projection
// and reporting).
struct Rotation {
  int parent = -1;
  int child = -1;
  bool operator==(const Rotation&) const = default;
};

using RotationSequence = std::vector<Rotation>;

// Permutation of the vertex ids; the component-restricted reading (each
// prefix element roots the component containing it) is enforced by
// from_ordering, which accepts any permutation.
using EliminationOrdering = std::vector<int>;

// Rooted tree on V(G) in which the subtree of every vertex induces a
// connected subgraph and the children of v root the components of
// G[subtree(v)] - v. Values are immutable; rotate() returns a new tree.
// Trees keep a pointer to their graph, which must outlive them.
class SearchTree {
public:
  // parent[v] = parent id, or -1 for the root (exactly one)
  SearchTree(const Graph& g, const std::vector<int>& parent);

  const Graph& graph() const { return *graph_; }
  int vertex_count() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v] == v ? -1 : parent_[v]; }
  std::vector<int> children(int v) const;  // ascending ids
  bool is_leaf(int v) const;

  VertexSet subtree(int v) const;
  int depth(int v) const;  // root has depth 0

  // canonical encoding: parent bytes with the root slot holding its own id
  const std::string& key() const { return key_; }

  bool operator==(const SearchTree& other) const { return key_ == other.key_; }

private:
  SearchTree() = default;
  friend SearchTree tree_from_key(const Graph& g, const std::string& key);

  const Graph* graph_ = nullptr;
  std::string key_;                 // raw parent bytes, parent_[root] = root
  std::vector<std::int8_t> parent_; // same data, typed
  int root_ = -1;
};

struct TreeHash {
  std::size_t operator()(const SearchTree& t) const {
    return std::hash<std::string>()(t.key());
  }
};

SearchTree tree_from_key(const Graph& g, const std::string& key);

// Builds the search tree in which the first remaining vertex of `order`
// within each component becomes that component's root. Total over all
// permutations of V; g must be connected.
SearchTree from_ordering(const Graph& g, const EliminationOrdering& order);

bool is_valid_search_tree(const Graph& g, const SearchTree& t);

// Exchanges the subtree of b with the component of its parent's subtree
// that keeps the parent. b must not be the root.
SearchTree rotate(const SearchTree& t, int b);

// all n-1 trees at rotation distance one
std::vector<SearchTree> neighbors(const SearchTree& t);

// depth(v) rotations moving v to the root, each rotating v with its
// current parent
RotationSequence lift_to_root(const SearchTree& t, int v);

// 1 + max depth; a single-vertex tree has height 1
int height(const SearchTree& t);

// Replays seq from t. Throws RotationError when a step names the current
// root (the offending index is reported).
SearchTree check_sequence(const Graph& g, const SearchTree& t,
                          const RotationSequence& seq);

struct RotationError : std::invalid_argument {
  RotationError(std::size_t step, const std::string& msg)
      : std::invalid_argument(msg), step(step) {}
  std::size_t step;
};

// The unique rotation turning `from` into the adjacent tree `to`.
Rotation rotation_between(const SearchTree& from, const SearchTree& to);

// reverse of seq with every step inverted; replays from the end tree of
// seq back to its start tree
RotationSequence inverted(const RotationSequence& seq);

}  // namespace assoc
