#pragma once

#include <cstdint>

#include "assoc/graph.hpp"
#include "assoc/search_tree.hpp"

namespace assoc {

// Convexity and projections on chordal graphs. A vertex set is convex
// when its complement can be removed by iterated simplicial eliminations;
// projecting a search tree onto a convex set splices those vertices out
// one at a time (a simplicial vertex has at most one child, so each
// removal is a leaf drop, a root replacement, or a parent-child splice).

// Throws std::invalid_argument when g is not chordal.
bool is_convex(const Graph& g, VertexSet s);

// sub must be induced_subgraph(g, s) for the tree's graph g and a convex
// s; the result lives on sub.graph. Independent of elimination order.
SearchTree project_tree(const SearchTree& t, const InducedSubgraph& sub);

// test hook: same projection but with a seeded random choice among the
// eligible simplicial vertices at every step
SearchTree project_tree_shuffled(const SearchTree& t, const InducedSubgraph& sub,
                                 std::uint64_t seed);

// Keeps exactly the rotations whose two vertices lie in s, remapped to the
// ids of sub.graph. The result replays from project_tree(start, sub) to
// the projection of the end tree.
RotationSequence project_sequence(const SearchTree& start,
                                  const RotationSequence& seq,
                                  const InducedSubgraph& sub);

}  // namespace assoc
