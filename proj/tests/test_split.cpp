#include <doctest.h>

#include <algorithm>
#include <random>

#include "assoc/enumerate.hpp"
#include "assoc/flip_graph.hpp"
#include "assoc/generators.hpp"
#include "assoc/search_tree.hpp"
#include "assoc/split_bipartite.hpp"

using namespace assoc;

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

SearchTree random_tree(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> order(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  return from_ordering(g, order);
}

}  // namespace

TEST_CASE("broom decomposition and round trip") {
  Graph spk = complete_split(2, 3);

  // all of Q as leaves under the last P vertex
  SearchTree all_leaves = from_ordering(spk, {0, 1, 2, 3, 4});
  Broom broom = to_broom(all_leaves);
  CHECK(broom.handle == std::vector<int>{0, 1});
  CHECK(broom.leaves == VertexSet{2, 3, 4});
  CHECK(broom_to_tree(spk, broom) == all_leaves);

  // a full chain has an empty leaf set
  SearchTree chain = from_ordering(spk, {2, 0, 3, 1, 4});
  Broom chain_broom = to_broom(chain);
  CHECK(chain_broom.leaves.empty());
  CHECK(chain_broom.handle.size() == 5);
  CHECK(broom_to_tree(spk, chain_broom) == chain);

  // every valid tree on the split graph converts and returns unchanged,
  // and its handle swallows all of P
  for (const SearchTree& t : enumerate_search_trees(spk)) {
    Broom b = to_broom(t);
    CHECK(broom_to_tree(spk, b) == t);
    VertexSet handle;
    for (int v : b.handle) handle.add(v);
    CHECK(VertexSet::full(2).subset_of(handle));
  }

  // on the complete bipartite graph the handle contains one full side
  Graph kpq = complete_bipartite(2, 3);
  for (const SearchTree& t : enumerate_search_trees(kpq)) {
    Broom b = to_broom(t);
    VertexSet handle;
    for (int v : b.handle) handle.add(v);
    bool covers_p = VertexSet::full(2).subset_of(handle);
    bool covers_q = (VertexSet::full(5) - VertexSet::full(2)).subset_of(handle);
    CHECK((covers_p || covers_q));
  }
}

TEST_CASE("split witnesses follow the prescribed vertex orders") {
  // alpha = beta = 0, p = 3: T2 runs through all of Q, then x_3
  Graph spk = complete_split(3, 5);
  auto [t1, t2] = split_witnesses(spk, 3, 5, {0, 0});
  CHECK(t2.root() == 3 + 5 - 1);       // y_q
  CHECK(t2.parent(2) == 3);            // x_3 is the child of y_1
  CHECK(t1.root() == 3);               // alpha = 0 roots T1 at y_1

  // alpha = p-1 roots T1 at x_1
  auto [t1b, t2b] = split_witnesses(spk, 3, 5, {2, 0});
  CHECK(t1b.root() == 0);
  CHECK(is_valid_search_tree(spk, t2b));

  // validity across the whole parameter box
  for (int p = 1; p <= 5; ++p) {
    for (int q = 1; q <= 5; ++q) {
      Graph g = complete_split(p, q);
      for (int alpha = 0; alpha < p; ++alpha) {
        for (int beta = 0; beta < q; ++beta) {
          auto [w1, w2] = split_witnesses(g, p, q, {alpha, beta});
          CHECK(is_valid_search_tree(g, w1));
          CHECK(is_valid_search_tree(g, w2));
        }
      }
    }
  }
  CHECK_THROWS_AS(split_witnesses(spk, 3, 5, {3, 0}), std::invalid_argument);
}

TEST_CASE("f evaluates the displayed formula") {
  CHECK(f_eval(3, 13, 0, 0, 0) == 81);
  // at the threshold q = 4p + 1, f(0) = f(q)
  CHECK(f_eval(3, 13, 0, 0, 13) == 81);
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q <= 12; ++q) {
      for (int alpha = 0; alpha < p; ++alpha) {
        for (int beta = 0; beta < q; ++beta) {
          CHECK(f_eval(p, q, alpha, beta, 0) ==
                choose2(p) + choose2(q) + 1LL * alpha * q + beta);
          CHECK(f_eval(p, q, alpha, beta, q) ==
                choose2(p) + 1LL * alpha * q + 2LL * q * (p - alpha) - beta);
        }
      }
    }
  }
  CHECK_THROWS_AS(f_eval(2, 3, 0, 0, 4), std::invalid_argument);
}

TEST_CASE("lower bounds and the closed-form diameter") {
  CHECK(split_lower_bound(1, 5) == 10);
  CHECK(split_lower_bound(2, 4) == 12);
  for (int p = 1; p <= 5; ++p) CHECK(split_lower_bound(p, 1) == choose2(p + 1));

  CHECK(split_diameter(1, 5) == 10);
  CHECK(split_diameter(2, 9) == 37);  // first branch: 2pq + C(p,2)
  CHECK(split_diameter(2, 4) == 12);
  CHECK(split_diameter(5, 1) == choose2(6));

  // the two sides of the argument always meet
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= 25; ++q)
      CHECK(split_lower_bound(p, q) == split_diameter(p, q));

  // parameter choice stays inside its box
  for (int p = 1; p <= 8; ++p) {
    for (int q = 1; q <= 33; ++q) {
      SplitWitnessParams params = choose_witness_params(p, q);
      CHECK(params.alpha >= 0);
      CHECK(params.alpha < p);
      CHECK(params.beta >= 0);
      CHECK(params.beta < q);
    }
  }
}

TEST_CASE("handle profiles count clique vertices above each leaf") {
  Graph spk = complete_split(2, 3);
  SearchTree all_leaves = from_ordering(spk, {0, 1, 2, 3, 4});
  HandleProfile profile = handle_profile(2, 3, all_leaves);
  CHECK(profile.w == std::vector<int>{2, 2, 2});  // every leaf sits under all of P
  CHECK(profile.total == 6);                      // = pq

  SearchTree mixed = from_ordering(spk, {2, 0, 3, 1, 4});
  HandleProfile mix = handle_profile(2, 3, mixed);
  CHECK(mix.w == std::vector<int>{0, 1, 2});
}

TEST_CASE("push-down paths stay within their budget and replay") {
  Graph spk = complete_split(2, 3);
  auto trees = enumerate_search_trees(spk);
  FlipGraph fg = build_flip_graph(spk);

  // two all-leaves brooms differing only in the P order: just the sort phase
  SearchTree s1 = from_ordering(spk, {0, 1, 2, 3, 4});
  SearchTree s2 = from_ordering(spk, {1, 0, 2, 3, 4});
  CHECK(split_upper_path(spk, 2, 3, s1, s1).empty());
  CHECK(split_upper_path(spk, 2, 3, s1, s2).size() == 1);

  std::mt19937_64 rng(7);
  for (int run = 0; run < 400; ++run) {
    const SearchTree& t1 = trees[rng() % trees.size()];
    const SearchTree& t2 = trees[rng() % trees.size()];
    RotationSequence plain = split_upper_path(spk, 2, 3, t1, t2);
    CHECK(plain.size() <= 2 * 2 * 3 + 1);  // 2pq + C(p,2)
    CHECK(check_sequence(spk, t1, plain) == t2);

    RotationSequence balanced = split_upper_path_balanced(spk, 2, 3, t1, t2);
    CHECK(balanced.size() <= 8);  // pq + floor(C(q,2)/2) + C(p,2)
    CHECK(check_sequence(spk, t1, balanced) == t2);
    CHECK(static_cast<int>(balanced.size()) >= distance_via_skeleton(fg, t1, t2));
  }

  // the push-down phase accounting: lifting P costs pq - sum(w_i)
  for (int run = 0; run < 100; ++run) {
    const SearchTree& t = trees[rng() % trees.size()];
    HandleProfile profile = handle_profile(2, 3, t);
    SearchTree target = from_ordering(spk, {0, 1, 2, 3, 4});
    RotationSequence down = split_upper_path(spk, 2, 3, t, target);
    // t's own push-down contributes pq - total; the target contributes 0
    int sort_cost = static_cast<int>(down.size()) - (6 - profile.total);
    CHECK(sort_cost >= 0);
    CHECK(sort_cost <= 1);  // at most C(2,2) = 1 inversion
  }

  CHECK_THROWS_AS(split_upper_path_balanced(complete_split(1, 5), 1, 5,
                                            trees[0], trees[0]),
                  std::invalid_argument);
}

TEST_CASE("balanced-path bound argument: the min never beats the crossing") {
  for (int p = 1; p <= 8; ++p) {
    for (int q = 1; q <= 4 * p && q <= 25; ++q) {
      long long worst = 0;
      for (long long w = 0; w <= 2LL * p * q; ++w)
        worst = std::max(worst, std::min(choose2(p) + 2LL * p * q - w,
                                         choose2(p) + choose2(q) + w));
      CHECK(worst <= 1LL * p * q + choose2(q) / 2 + choose2(p));
    }
  }
}

TEST_CASE("bipartite witnesses and the X/N trees") {
  Graph k23 = complete_bipartite(2, 3);
  auto [t1, t2] = bipartite_witnesses(k23, 2, 3);
  CHECK(is_valid_search_tree(k23, t1));
  CHECK(is_valid_search_tree(k23, t2));
  CHECK(t1.root() == 2);      // y_1
  CHECK(t2.root() == 4);      // y_q
  Broom b1 = to_broom(t1);
  CHECK(b1.handle == std::vector<int>{2, 3, 4});
  CHECK(b1.leaves == VertexSet{0, 1});

  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q <= 6; ++q) {
      Graph g = complete_bipartite(p, q);
      auto [w1, w2] = bipartite_witnesses(g, p, q);
      CHECK(is_valid_search_tree(g, w1));
      CHECK(is_valid_search_tree(g, w2));
      if (q == 1) CHECK(w1 == w2);  // degenerate: nothing to reverse
    }
  }

  // N_T is a fixed point; X_T has a pure P handle
  std::mt19937_64 rng(3);
  for (int run = 0; run < 50; ++run) {
    SearchTree t = random_tree(k23, rng);
    auto [xt, nt] = xt_nt(k23, 2, 3, t);
    CHECK(is_valid_search_tree(k23, xt));
    CHECK(is_valid_search_tree(k23, nt));
    CHECK(xt_nt(k23, 2, 3, nt).second == nt);
    Broom xb = to_broom(xt);
    CHECK(xb.handle.size() == 2);
    CHECK(xb.leaves == VertexSet{2, 3, 4});
  }
}

TEST_CASE("bipartite paths: exact exchange and the 2pq budget") {
  Graph k15 = complete_bipartite(1, 5);
  auto [w1, w2] = bipartite_witnesses(k15, 1, 5);
  RotationSequence seq = bipartite_upper_path(k15, 1, 5, w1, w2);
  CHECK(seq.size() == 10);  // exactly 2pq
  CHECK(check_sequence(k15, w1, seq) == w2);
  CHECK(distance(k15, w1, w2).distance == 10);

  Graph k23 = complete_bipartite(2, 3);
  std::mt19937_64 rng(13);
  auto trees = enumerate_search_trees(k23);
  FlipGraph fg = build_flip_graph(k23);
  for (int run = 0; run < 300; ++run) {
    const SearchTree& t1 = trees[rng() % trees.size()];
    const SearchTree& t2 = trees[rng() % trees.size()];
    RotationSequence path = bipartite_upper_path(k23, 2, 3, t1, t2);
    CHECK(path.size() <= 12);
    CHECK(check_sequence(k23, t1, path) == t2);
    CHECK(static_cast<int>(path.size()) >= distance_via_skeleton(fg, t1, t2));
  }

  // loop paths still come home
  SearchTree t = random_tree(k23, rng);
  RotationSequence loop = bipartite_upper_path(k23, 2, 3, t, t);
  CHECK(loop.size() <= 12);
  CHECK(check_sequence(k23, t, loop) == t);
}

TEST_CASE("unbalanced bipartite diameter formula") {
  CHECK(bipartite_diameter_unbalanced(1, 5) == 10);
  CHECK(bipartite_diameter_unbalanced(1, 9) == 18);
  CHECK(bipartite_diameter_unbalanced(2, 9) == 36);
  CHECK_THROWS_AS(bipartite_diameter_unbalanced(2, 8), std::invalid_argument);

  // construction certifies the K_{2,9} value without any skeleton
  Graph k29 = complete_bipartite(2, 9);
  auto [t1, t2] = bipartite_witnesses(k29, 2, 9);
  RotationSequence seq = bipartite_upper_path(k29, 2, 9, t1, t2);
  CHECK(seq.size() == 36);
  CHECK(check_sequence(k29, t1, seq) == t2);
}

TEST_CASE("dist(T, X_T) + dist(T, N_T) stays within pq") {
  Graph k23 = complete_bipartite(2, 3);
  FlipGraph fg = build_flip_graph(k23);
  for (const SearchTree& t : enumerate_search_trees(k23)) {
    auto [xt, nt] = xt_nt(k23, 2, 3, t);
    CHECK(distance_via_skeleton(fg, t, xt) + distance_via_skeleton(fg, t, nt) <= 6);
  }
}
