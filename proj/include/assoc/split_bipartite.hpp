#pragma once

#include <utility>
#include <vector>

#include "assoc/graph.hpp"
#include "assoc/search_tree.hpp"

namespace assoc {

// Search trees on complete split graphs SPK_{p,q} and complete bipartite
// graphs K_{p,q} are brooms: a handle chain ending at a star center whose
// children are the remaining vertices. Functions here take the graph
// built by complete_split(p, q) or complete_bipartite(p, q), so P is ids
// 0..p-1 and Q is ids p..p+q-1.

struct Broom {
  std::vector<int> handle;  // root first; last entry is the star center
  VertexSet leaves;
};

// Decomposes a valid search tree; throws when the tree is not a broom
// (which cannot happen for valid trees on these graphs).
Broom to_broom(const SearchTree& t);
SearchTree broom_to_tree(const Graph& g, const Broom& broom);

struct SplitWitnessParams {
  int alpha = 0;  // 0 <= alpha < p
  int beta = 0;   // 0 <= beta < q
};

// Witness brooms of the split lower bound: T1 orders the vertices
// x_1..x_alpha, y_1..y_q, x_{alpha+1}..x_p and T2 orders them
// y_q..y_{beta+1}, x_p, y_beta..y_1, x_{p-1}..x_1.
std::pair<SearchTree, SearchTree> split_witnesses(const Graph& spk, int p, int q,
                                                  SplitWitnessParams params);

// f(k) = C(p,2) + C(q,2) - C(k,2) + alpha*q + k(2p - 2alpha - 1) + |beta - k|
long long f_eval(int p, int q, int alpha, int beta, int k);

// C(p,2) + alpha*q + min{C(q,2) + beta, 2q(p - alpha) - beta}
long long split_distance_lower_bound(int p, int q, int alpha, int beta);

// parameters realizing the strongest lower bound for given p, q
SplitWitnessParams choose_witness_params(int p, int q);

long long split_lower_bound(int p, int q);

// exact diameter of the SPK_{p,q} associahedron:
//   2pq + C(p,2)                      when q >= 4p + 1
//   pq + floor(C(q,2)/2) + C(p,2)     otherwise
long long split_diameter(int p, int q);

// number of P vertices above each y_i, plus the total
struct HandleProfile {
  std::vector<int> w;
  int total = 0;
};
HandleProfile handle_profile(int p, int q, const SearchTree& t);

// Three phases: push the Q handle vertices of t1 down to the leaves,
// sort the P handle into t2's order, undo t2's push-down. At most
// 2pq + C(p,2) rotations, replaying from t1 to t2.
RotationSequence split_upper_path(const Graph& spk, int p, int q,
                                  const SearchTree& t1, const SearchTree& t2);

// Shorter of the push-down path and the pull-up path (all of Q above all
// of P, never exchanging Q pairs). Requires q <= 4p; at most
// pq + floor(C(q,2)/2) + C(p,2) rotations.
RotationSequence split_upper_path_balanced(const Graph& spk, int p, int q,
                                           const SearchTree& t1,
                                           const SearchTree& t2);

// Witness brooms on K_{p,q}: handles made of Q in the orders y_1..y_q and
// y_q..y_1, with P as leaves.
std::pair<SearchTree, SearchTree> bipartite_witnesses(const Graph& kpq, int p, int q);

// X_T keeps the order in which P appears in t (ties by id) as a handle
// with Q as leaves; N_T is the symmetric tree with a Q handle.
std::pair<SearchTree, SearchTree> xt_nt(const Graph& kpq, int p, int q,
                                        const SearchTree& t);

// Shorter of T1 -> X_{T1} -> N_{T2} -> T2 and T1 -> N_{T1} -> X_{T2} -> T2,
// where the middle segment exchanges the two sides in exactly pq
// rotations. At most 2pq rotations total.
RotationSequence bipartite_upper_path(const Graph& kpq, int p, int q,
                                      const SearchTree& t1, const SearchTree& t2);

// 2pq; requires q >= 4p + 1 (the balanced case is open)
long long bipartite_diameter_unbalanced(int p, int q);

}  // namespace assoc
