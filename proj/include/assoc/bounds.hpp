#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "assoc/graph.hpp"
#include "assoc/search_tree.hpp"

namespace assoc {

// Bit-reversal permutation sigma_k on 2^{k-1} elements (1-based values):
// sigma_1 = (1), sigma_k = concat(2 sigma_{k-1} - 1, 2 sigma_{k-1}).
// Entries alternate between values <= n/2 and values > n/2.
struct BitReversalPermutation {
  int k = 1;
  std::vector<int> values;
};
BitReversalPermutation bit_reversal(int k);

// L/R split of a graph's vertices; for ladder_pw2(n) the left half is
// { a_i, b_i : i <= n/2 }.
struct TwoColoring {
  VertexSet left;
  VertexSet right;
};
TwoColoring ladder_two_coloring(int n);

// Hard target pair on ladder_pw2(n), n a power of two >= 2: T interleaves
// a_i, b_i left to right; T' lists the a_i in bit-reversal order and then
// the b_i in order.
std::pair<SearchTree, SearchTree> pw2_witness_trees(const Graph& ladder, int n);

// max number of bichromatic edges on a root-to-leaf path
int alternation_number(const SearchTree& t, const TwoColoring& coloring);

enum class RotationColor { monochromatic, bichromatic };
RotationColor classify_rotation(const SearchTree& t, int b, const TwoColoring& coloring);

// max{m, 2n - 20} and C(n,2)
std::pair<long long, long long> mp_bounds(const Graph& g);

inline long long td_bound(long long n, long long td) { return 2 * td * n; }

// c * tw * n * log2(n); the constant is the caller's, the value is
// indicative and never asserted
double tw_bound(long long n, long long tw, double c);

struct BoundReport {
  std::string spec;
  int n = 0;
  int m = 0;
  long long lower = 0;                 // max{m, 2n - 20}
  long long upper = 0;                 // C(n,2)
  std::optional<int> tree_depth;       // known family value
  std::optional<long long> td_upper;   // 2 * td * n
  std::optional<int> pathwidth;        // known family value
  std::optional<long long> exact;      // BFS diameter when within cap
};

// one row per small family instance, exact diameters filled in when the
// skeleton fits the cap
std::vector<BoundReport> family_bound_table(std::size_t node_cap);

// exact-diameter comparison for g subgraph of g2 (same vertex set)
bool monotonicity_check(const Graph& g, const Graph& g2, std::size_t node_cap);

}  // namespace assoc
