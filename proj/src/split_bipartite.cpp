#include "assoc/split_bipartite.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace assoc {

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

int x_id(int i) { return i - 1; }            // x_1..x_p
int y_id(int p, int j) { return p + j - 1; } // y_1..y_q

// side vertices ordered by (depth in t, id): the order in which they
// appear in t from the root to the leaves, ties broken by id
std::vector<int> appearance_order(const SearchTree& t, VertexSet side) {
  std::vector<int> out = side.to_vector();
  std::vector<int> depth(t.vertex_count());
  for (int v : out) depth[v] = t.depth(v);
  std::stable_sort(out.begin(), out.end(),
                   [&depth](int a, int b) { return depth[a] < depth[b]; });
  return out;
}

// Lifts each vertex of `order` (front = topmost target) past every
// vertex outside `side` above it; processed vertices pile up in order at
// the top of the tree. Appends the rotations to seq and advances cur.
void lift_side(SearchTree& cur, VertexSet side, const std::vector<int>& order,
               RotationSequence& seq) {
  for (int v : order) {
    while (cur.parent(v) != -1 && !side.contains(cur.parent(v))) {
      seq.push_back({cur.parent(v), v});
      cur = rotate(cur, v);
    }
  }
}

// Sorts the chain of `target` vertices (already consecutive in the
// handle) into the target order by adjacent transpositions; one rotation
// per inversion.
void sort_block(SearchTree& cur, const std::vector<int>& target,
                RotationSequence& seq) {
  std::vector<int> rank(cur.vertex_count(), -1);
  for (std::size_t i = 0; i < target.size(); ++i) rank[target[i]] = static_cast<int>(i);
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int v : target) {
      int p = cur.parent(v);
      if (p >= 0 && rank[p] >= 0 && rank[p] > rank[v]) {
        seq.push_back({p, v});
        cur = rotate(cur, v);
        swapped = true;
      }
    }
  }
}

}  // namespace

Broom to_broom(const SearchTree& t) {
  Broom broom;
  int cur = t.root();
  while (true) {
    broom.handle.push_back(cur);
    std::vector<int> kids = t.children(cur);
    if (kids.size() == 1) {
      cur = kids[0];
      continue;
    }
    for (int leaf : kids) {
      if (!t.is_leaf(leaf))
        throw std::invalid_argument("tree is not a broom: star child has children");
      broom.leaves.add(leaf);
    }
    return broom;
  }
}

SearchTree broom_to_tree(const Graph& g, const Broom& broom) {
  std::vector<int> parent(g.vertex_count(), -1);
  int prev = -1;
  for (int v : broom.handle) {
    parent[v] = prev;
    prev = v;
  }
  for (int v : broom.leaves) parent[v] = prev;
  return SearchTree(g, parent);
}

std::pair<SearchTree, SearchTree> split_witnesses(const Graph& spk, int p, int q,
                                                  SplitWitnessParams params) {
  require(params.alpha >= 0 && params.alpha < p, "witness params need 0 <= alpha < p");
  require(params.beta >= 0 && params.beta < q, "witness params need 0 <= beta < q");
  std::vector<int> order1;
  for (int i = 1; i <= params.alpha; ++i) order1.push_back(x_id(i));
  for (int j = 1; j <= q; ++j) order1.push_back(y_id(p, j));
  for (int i = params.alpha + 1; i <= p; ++i) order1.push_back(x_id(i));

  std::vector<int> order2;
  for (int j = q; j > params.beta; --j) order2.push_back(y_id(p, j));
  order2.push_back(x_id(p));
  for (int j = params.beta; j >= 1; --j) order2.push_back(y_id(p, j));
  for (int i = p - 1; i >= 1; --i) order2.push_back(x_id(i));

  return {from_ordering(spk, order1), from_ordering(spk, order2)};
}

long long f_eval(int p, int q, int alpha, int beta, int k) {
  require(k >= 0 && k <= q, "f is defined for 0 <= k <= q");
  return choose2(p) + choose2(q) - choose2(k) + static_cast<long long>(alpha) * q +
         static_cast<long long>(k) * (2 * p - 2 * alpha - 1) + std::abs(beta - k);
}

long long split_distance_lower_bound(int p, int q, int alpha, int beta) {
  long long f0 = choose2(p) + choose2(q) + static_cast<long long>(alpha) * q + beta;
  long long fq = choose2(p) + static_cast<long long>(alpha) * q +
                 2LL * q * (p - alpha) - beta;
  return std::min(f0, fq);
}

SplitWitnessParams choose_witness_params(int p, int q) {
  require(p >= 1 && q >= 1, "p and q must be positive");
  if (q >= 4 * p + 1 || q == 1) return {0, 0};
  // gamma = (4p + 1 - q) / 4; alpha = floor(gamma), beta = floor(q * frac(gamma))
  int num = 4 * p + 1 - q;
  int alpha = num / 4;
  int beta = q * (num % 4) / 4;
  return {alpha, beta};
}

long long split_lower_bound(int p, int q) {
  require(p >= 1 && q >= 1, "p and q must be positive");
  if (q == 1) return choose2(p + 1);  // SPK_{p,1} is complete on p+1 vertices
  SplitWitnessParams params = choose_witness_params(p, q);
  return split_distance_lower_bound(p, q, params.alpha, params.beta);
}

long long split_diameter(int p, int q) {
  require(p >= 1 && q >= 1, "p and q must be positive");
  if (q >= 4 * p + 1) return 2LL * p * q + choose2(p);
  return static_cast<long long>(p) * q + choose2(q) / 2 + choose2(p);
}

HandleProfile handle_profile(int p, int q, const SearchTree& t) {
  HandleProfile profile;
  profile.w.reserve(q);
  for (int j = 1; j <= q; ++j) {
    int count = 0;
    for (int v = t.parent(y_id(p, j)); v != -1; v = t.parent(v))
      if (v < p) ++count;
    profile.w.push_back(count);
    profile.total += count;
  }
  return profile;
}

RotationSequence split_upper_path(const Graph& spk, int p, int q,
                                  const SearchTree& t1, const SearchTree& t2) {
  require(spk.vertex_count() == p + q, "graph does not match p + q");
  VertexSet part_p = VertexSet::full(p);
  RotationSequence seq;
  SearchTree cur = t1;
  // phase 1: every Q handle vertex of t1 sinks to the leaves (P rises)
  lift_side(cur, part_p, appearance_order(t1, part_p), seq);
  // phase 2: sort the P chain into t2's order
  sort_block(cur, appearance_order(t2, part_p), seq);
  // phase 3: undo t2's own push-down phase
  SearchTree other = t2;
  RotationSequence down;
  lift_side(other, part_p, appearance_order(t2, part_p), down);
  RotationSequence back = inverted(down);
  seq.insert(seq.end(), back.begin(), back.end());
  return seq;
}

RotationSequence split_upper_path_balanced(const Graph& spk, int p, int q,
                                           const SearchTree& t1,
                                           const SearchTree& t2) {
  require(q <= 4 * p, "balanced path needs q <= 4p");
  VertexSet part_p = VertexSet::full(p);
  VertexSet part_q = VertexSet::full(p + q) - VertexSet::full(p);

  RotationSequence path_a = split_upper_path(spk, p, q, t1, t2);

  // path B: all of Q climbs above all of P, never exchanging Q pairs,
  // then both blocks are sorted
  RotationSequence path_b;
  SearchTree cur = t1;
  lift_side(cur, part_q, appearance_order(t1, part_q), path_b);
  sort_block(cur, appearance_order(t2, part_q), path_b);
  sort_block(cur, appearance_order(t2, part_p), path_b);
  SearchTree other = t2;
  RotationSequence up;
  lift_side(other, part_q, appearance_order(t2, part_q), up);
  RotationSequence back = inverted(up);
  path_b.insert(path_b.end(), back.begin(), back.end());

  return path_a.size() <= path_b.size() ? path_a : path_b;
}

std::pair<SearchTree, SearchTree> bipartite_witnesses(const Graph& kpq, int p, int q) {
  std::vector<int> order1, order2;
  for (int j = 1; j <= q; ++j) order1.push_back(y_id(p, j));
  for (int j = q; j >= 1; --j) order2.push_back(y_id(p, j));
  for (int i = 1; i <= p; ++i) {
    order1.push_back(x_id(i));
    order2.push_back(x_id(i));
  }
  return {from_ordering(kpq, order1), from_ordering(kpq, order2)};
}

std::pair<SearchTree, SearchTree> xt_nt(const Graph& kpq, int p, int q,
                                        const SearchTree& t) {
  VertexSet part_p = VertexSet::full(p);
  VertexSet part_q = VertexSet::full(p + q) - VertexSet::full(p);
  std::vector<int> order_x = appearance_order(t, part_p);
  for (int v : part_q) order_x.push_back(v);
  std::vector<int> order_n = appearance_order(t, part_q);
  for (int v : part_p) order_n.push_back(v);
  return {from_ordering(kpq, order_x), from_ordering(kpq, order_n)};
}

RotationSequence bipartite_upper_path(const Graph& kpq, int p, int q,
                                      const SearchTree& t1, const SearchTree& t2) {
  require(kpq.vertex_count() == p + q, "graph does not match p + q");
  VertexSet part_p = VertexSet::full(p);
  VertexSet part_q = VertexSet::full(p + q) - VertexSet::full(p);

  auto build = [&](VertexSet first_side, VertexSet second_side) {
    RotationSequence seq;
    SearchTree cur = t1;
    lift_side(cur, first_side, appearance_order(t1, first_side), seq);
    lift_side(cur, second_side, appearance_order(t2, second_side), seq);
    SearchTree other = t2;
    RotationSequence tail;
    lift_side(other, second_side, appearance_order(t2, second_side), tail);
    RotationSequence back = inverted(tail);
    seq.insert(seq.end(), back.begin(), back.end());
    return seq;
  };

  RotationSequence p1 = build(part_p, part_q);  // T1 -> X_T1 -> N_T2 -> T2
  RotationSequence p2 = build(part_q, part_p);  // T1 -> N_T1 -> X_T2 -> T2
  return p1.size() <= p2.size() ? p1 : p2;
}

long long bipartite_diameter_unbalanced(int p, int q) {
  require(q >= 4 * p + 1,
          "exact bipartite diameter is only known for q >= 4p + 1");
  return 2LL * p * q;
}

}  // namespace assoc
