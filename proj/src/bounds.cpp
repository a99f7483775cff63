#include "assoc/bounds.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "assoc/flip_graph.hpp"
#include "assoc/generators.hpp"
#include "assoc/tree_depth.hpp"

namespace assoc {

BitReversalPermutation bit_reversal(int k) {
  if (k < 1) throw std::invalid_argument("bit_reversal: k must be at least 1");
  BitReversalPermutation sigma{1, {1}};
  while (sigma.k < k) {
    std::vector<int> next;
    next.reserve(sigma.values.size() * 2);
    for (int v : sigma.values) next.push_back(2 * v - 1);
    for (int v : sigma.values) next.push_back(2 * v);
    sigma.values = std::move(next);
    ++sigma.k;
  }
  return sigma;
}

TwoColoring ladder_two_coloring(int n) {
  TwoColoring coloring;
  for (int i = 1; i <= n; ++i) {
    VertexSet& side = i <= n / 2 ? coloring.left : coloring.right;
    side.add(i - 1);      // a_i
    side.add(n + i - 1);  // b_i
  }
  return coloring;
}

std::pair<SearchTree, SearchTree> pw2_witness_trees(const Graph& ladder, int n) {
  if (n < 2 || !std::has_single_bit(static_cast<unsigned>(n)))
    throw std::invalid_argument("witness trees need n a power of two >= 2");
  if (ladder.vertex_count() != 2 * n)
    throw std::invalid_argument("graph does not look like ladder_pw2(n)");
  int k = std::countr_zero(static_cast<unsigned>(n)) + 1;  // n = 2^{k-1}
  BitReversalPermutation sigma = bit_reversal(k);

  std::vector<int> order1, order2;
  for (int i = 1; i <= n; ++i) {
    order1.push_back(i - 1);
    order1.push_back(n + i - 1);
  }
  for (int value : sigma.values) order2.push_back(value - 1);
  for (int i = 1; i <= n; ++i) order2.push_back(n + i - 1);
  return {from_ordering(ladder, order1), from_ordering(ladder, order2)};
}

int alternation_number(const SearchTree& t, const TwoColoring& coloring) {
  int best = 0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    int count = 0;
    for (int cur = v; t.parent(cur) != -1; cur = t.parent(cur)) {
      int p = t.parent(cur);
      if (coloring.left.contains(cur) != coloring.left.contains(p)) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

RotationColor classify_rotation(const SearchTree& t, int b,
                                const TwoColoring& coloring) {
  int a = t.parent(b);
  if (a < 0) throw std::invalid_argument("the root has no rotation");
  return coloring.left.contains(a) == coloring.left.contains(b)
             ? RotationColor::monochromatic
             : RotationColor::bichromatic;
}

std::pair<long long, long long> mp_bounds(const Graph& g) {
  long long n = g.vertex_count(), m = g.edge_count();
  return {std::max(m, 2 * n - 20), n * (n - 1) / 2};
}

double tw_bound(long long n, long long tw, double c) {
  return c * static_cast<double>(tw) * static_cast<double>(n) *
         std::log2(static_cast<double>(n));
}

namespace {

BoundReport make_report(const std::string& spec, const Graph& g,
                        std::optional<int> td, std::optional<int> pw,
                        std::size_t node_cap) {
  BoundReport row;
  row.spec = spec;
  row.n = g.vertex_count();
  row.m = g.edge_count();
  auto [lo, hi] = mp_bounds(g);
  row.lower = lo;
  row.upper = hi;
  row.tree_depth = td;
  if (td) row.td_upper = td_bound(row.n, *td);
  row.pathwidth = pw;
  try {
    row.exact = diameter(g, node_cap).diameter;
  } catch (const CapExceeded&) {
    // row stays without an exact value
  }
  return row;
}

}  // namespace

std::vector<BoundReport> family_bound_table(std::size_t node_cap) {
  std::vector<BoundReport> rows;
  for (int n = 2; n <= 5; ++n)
    rows.push_back(make_report("complete:" + std::to_string(n), complete(n), n,
                               n - 1, node_cap));
  for (int n = 3; n <= 7; ++n)
    rows.push_back(make_report("path:" + std::to_string(n), path(n), std::nullopt,
                               1, node_cap));
  for (int q = 3; q <= 6; ++q)
    rows.push_back(make_report("star:" + std::to_string(q), star(q), 2, 1, node_cap));
  for (int p = 2; p <= 3; ++p)
    for (int q = 2; q <= 4; ++q)
      rows.push_back(make_report(
          "split:" + std::to_string(p) + "," + std::to_string(q),
          complete_split(p, q), p + 1, std::nullopt, node_cap));
  for (int k = 2; k <= 3; ++k)
    for (int t = 2; t <= 3; ++t)
      rows.push_back(make_report(
          "cliquechain:" + std::to_string(k) + "x" + std::to_string(t),
          clique_chain(k, t), std::nullopt, k - 1, node_cap));
  for (int k = 2; k <= 3; ++k)
    rows.push_back(make_report("gluedcliques:" + std::to_string(k) + "x3",
                               glued_cliques(k, 3), 3, std::nullopt, node_cap));
  rows.push_back(make_report("ladder:2", ladder_pw2(2), std::nullopt, 2, node_cap));
  rows.push_back(make_report("ladder:4", ladder_pw2(4), std::nullopt, 2, node_cap));
  return rows;
}

bool monotonicity_check(const Graph& g, const Graph& g2, std::size_t node_cap) {
  if (g.vertex_count() != g2.vertex_count())
    throw std::invalid_argument("monotonicity_check expects the same vertex set");
  for (auto [u, v] : g.edges())
    if (!g2.has_edge(u, v))
      throw std::invalid_argument("first graph is not a subgraph of the second");
  return diameter(g, node_cap).diameter <= diameter(g2, node_cap).diameter;
}

}  // namespace assoc
