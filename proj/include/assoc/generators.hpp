#pragma once

#include <cstdint>
#include <string>

#include "assoc/graph.hpp"

namespace assoc {

// Generators for the graph families the experiments run on. Vertex layout
// conventions are fixed so callers can address the designated parts:
//
//   complete_split(p, q) / complete_bipartite(p, q):
//       ids 0..p-1 form P (labels x1..xp), ids p..p+q-1 form Q (labels y1..yq)
//   star(q): complete_split(1, q); center is id 0
//   glued_cliques(k, s): k cliques of size s sharing vertex 0
//   clique_chain(k, t): t cliques of size k, consecutive cliques share one
//       vertex; clique i spans ids (i-1)(k-1) .. (i-1)(k-1)+k-1
//   ladder_pw2(n): 2n vertices; a_i = id i-1, b_i = id n+i-1, with edges
//       a_i a_{i+1}, b_i b_{i+1}, a_i b_i, a_i b_{i+1}

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int q);
Graph complete_split(int p, int q);
Graph complete_bipartite(int p, int q);
Graph glued_cliques(int k, int s);
Graph clique_chain(int k, int t);
Graph ladder_pw2(int n);

// Seeded trivially perfect graph: grows a pool of fragments by the three
// recursive rules (new isolated vertex, add universal vertex, disjoint
// union) and ends with a universal vertex over everything, so the result
// is connected. Vertex count is at most steps + 2.
Graph random_tp(std::uint64_t seed, int steps);

inline VertexSet split_part_p(int p) { return VertexSet::full(p); }
inline VertexSet split_part_q(int p, int q) {
  return VertexSet::full(p + q) - VertexSet::full(p);
}

// String form used by the CLI, e.g. "split:3,4", "ladder:8",
// "gluedcliques:2x5", "cliquechain:3x4", "randomtp:7,9", "path:5".
Graph graph_from_spec(const std::string& spec);

}  // namespace assoc
