#pragma once

#include <vector>

#include "assoc/graph.hpp"
#include "assoc/search_tree.hpp"

namespace assoc {

// A tubing is a set of tubes (connected vertex subsets) that are pairwise
// nested or non-adjacent. Maximal tubings correspond to search trees; the
// tube set of a tree includes the full vertex set for the root, matching
// the convention in which V itself is a tube.
using Tubing = std::vector<VertexSet>;

// the n subtree sets of t, sorted by (size, bits) for determinism
Tubing to_tubing(const SearchTree& t);

bool is_tube(const Graph& g, VertexSet s);
bool is_valid_tubing(const Graph& g, const Tubing& tubes);

}  // namespace assoc
