#pragma once

#include "assoc/graph.hpp"

namespace assoc {

// Smallest height of a search tree on connected g (single vertex has
// height one). Exact, by recursion over root choices with memoization on
// connected vertex subsets; refuses graphs above cap_n vertices since the
// subset table is the cost driver.
int tree_depth(const Graph& g, int cap_n = 16);

}  // namespace assoc
