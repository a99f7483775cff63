#pragma once

#include <optional>
#include <vector>

#include "assoc/graph.hpp"
#include "assoc/search_tree.hpp"

namespace assoc {

// Universal clique decomposition: a rooted tree of bags where every bag
// is the maximal universal clique of the subgraph induced by its subtree's
// bags. A connected graph has one iff it is trivially perfect.
struct UcdNode {
  VertexSet bag;
  std::vector<int> children;
};

struct UniversalCliqueDecomposition {
  std::vector<UcdNode> nodes;  // node 0 is the root
  int root() const { return 0; }
};

// Peels maximal universal cliques and recurses on components. Empty when
// g is not trivially perfect. g must be connected.
std::optional<UniversalCliqueDecomposition> recognize_tp(const Graph& g);

// invariant check used by tests and by the JSON reader
bool is_valid_ucd(const Graph& g, const UniversalCliqueDecomposition& ucd);

// Search tree of height equal to the clique number (= tree-depth for
// trivially perfect graphs): chains each bag in ascending id order and
// hangs child components off the bottom of the chain.
SearchTree min_height_tree(const Graph& g, const UniversalCliqueDecomposition& ucd);

// Transforms t into min_height_tree's result in at most m rotations:
// lifts the canonical root of each component, then recurses on the child
// subtrees. Throws when g is not trivially perfect.
RotationSequence tp_transform(const Graph& g, const SearchTree& t);

// tp_transform(t1) followed by the inverse of tp_transform(t2); at most
// 2m rotations, replaying from t1 to t2
RotationSequence tp_path(const Graph& g, const SearchTree& t1, const SearchTree& t2);

// checks m < td * n for trivially perfect g; throws otherwise
bool edge_bound(const Graph& g);

}  // namespace assoc
