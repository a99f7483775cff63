#include <doctest.h>

#include <random>

#include "assoc/bounds.hpp"
#include "assoc/enumerate.hpp"
#include "assoc/generators.hpp"
#include "assoc/projection.hpp"
#include "assoc/search_tree.hpp"

using namespace assoc;

TEST_CASE("convexity via iterated simplicial elimination") {
  Graph p3 = path(3);
  CHECK(is_convex(p3, p3.vertices()));
  // both endpoints without the middle: 1 is never simplicial while 0 and 2
  // remain, so the elimination gets stuck
  CHECK_FALSE(is_convex(p3, VertexSet{0, 2}));
  CHECK(is_convex(p3, VertexSet{0, 1}));

  for (int n : {2, 4, 8}) {
    Graph ladder = ladder_pw2(n);
    TwoColoring coloring = ladder_two_coloring(n);
    CHECK(is_convex(ladder, coloring.left));
    CHECK(is_convex(ladder, coloring.right));
  }

  CHECK_THROWS_AS(is_convex(cycle(4), VertexSet{0, 1}), std::invalid_argument);
}

TEST_CASE("projection cases: leaf, root, splice") {
  Graph p3 = path(3);
  SearchTree chain = from_ordering(p3, {0, 1, 2});  // 0 -> 1 -> 2

  // drop the deep leaf 2
  auto sub01 = induced_subgraph(p3, VertexSet{0, 1});
  SearchTree no_leaf = project_tree(chain, sub01);
  CHECK(no_leaf.root() == 0);
  CHECK(no_leaf.parent(1) == 0);

  // drop the root 0
  auto sub12 = induced_subgraph(p3, VertexSet{1, 2});
  SearchTree no_root = project_tree(chain, sub12);
  CHECK(no_root.root() == 0);  // renumbered: old 1
  CHECK(no_root.parent(1) == 0);

  // splice a middle vertex: on K_3 every vertex is simplicial
  Graph k3 = complete(3);
  SearchTree chain3 = from_ordering(k3, {0, 1, 2});
  auto sub = induced_subgraph(k3, VertexSet{0, 2});
  SearchTree spliced = project_tree(chain3, sub);
  CHECK(spliced.root() == 0);
  CHECK(spliced.parent(1) == 0);  // old 2 hangs under old 0

  // projecting onto everything changes nothing
  auto all = induced_subgraph(p3, p3.vertices());
  CHECK(project_tree(chain, all) == chain);
}

TEST_CASE("projection is independent of the elimination order") {
  std::mt19937_64 rng(31);
  Graph ladder = ladder_pw2(2);
  for (const SearchTree& t : enumerate_search_trees(ladder)) {
    for (VertexSet s : {VertexSet{0, 1, 2, 3}, VertexSet{0, 2}, VertexSet{1, 3},
                        VertexSet{0, 1, 2}}) {
      if (!is_convex(ladder, s)) continue;
      auto sub = induced_subgraph(ladder, s);
      SearchTree reference = project_tree(t, sub);
      for (int trial = 0; trial < 5; ++trial)
        CHECK(project_tree_shuffled(t, sub, rng()) == reference);
    }
  }
}

TEST_CASE("projection commutes with rotations inside the kept set") {
  Graph ladder = ladder_pw2(2);
  TwoColoring coloring = ladder_two_coloring(2);
  for (VertexSet s : {coloring.left, coloring.right}) {
    auto sub = induced_subgraph(ladder, s);
    for (const SearchTree& t : enumerate_search_trees(ladder)) {
      SearchTree projected = project_tree(t, sub);
      for (int b = 0; b < ladder.vertex_count(); ++b) {
        if (b == t.root()) continue;
        int a = t.parent(b);
        SearchTree rotated_then = project_tree(rotate(t, b), sub);
        if (s.contains(a) && s.contains(b)) {
          CHECK(rotated_then == rotate(projected, sub.to_new[b]));
        } else {
          CHECK(rotated_then == projected);
        }
      }
    }
  }
}

TEST_CASE("projected sequences replay between projected trees") {
  std::mt19937_64 rng(47);
  for (const Graph& g : {ladder_pw2(2), complete_split(2, 4)}) {
    for (int run = 0; run < 100; ++run) {
      // random convex set by eliminating a few simplicial vertices
      VertexSet s = g.vertices();
      int removals = static_cast<int>(rng() % 3);
      for (int step = 0; step < removals && s.count() > 1; ++step) {
        std::vector<int> cand;
        for (int v : s)
          if (is_simplicial_within(g, s, v)) cand.push_back(v);
        if (cand.empty()) break;
        s.remove(cand[rng() % cand.size()]);
      }
      auto sub = induced_subgraph(g, s);

      std::vector<int> order(g.vertex_count());
      for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      SearchTree start = from_ordering(g, order);
      SearchTree cur = start;
      RotationSequence seq;
      for (int k = 0; k < 20; ++k) {
        int b;
        do b = static_cast<int>(rng() % static_cast<unsigned>(g.vertex_count()));
        while (b == cur.root());
        seq.push_back({cur.parent(b), b});
        cur = rotate(cur, b);
      }
      RotationSequence projected = project_sequence(start, seq, sub);
      CHECK(projected.size() <= seq.size());
      CHECK(check_sequence(sub.graph, project_tree(start, sub), projected) ==
            project_tree(cur, sub));
    }
  }
}

TEST_CASE("a single rotation outside the set projects to nothing") {
  Graph ladder = ladder_pw2(2);
  TwoColoring coloring = ladder_two_coloring(2);
  auto sub = induced_subgraph(ladder, coloring.left);
  for (const SearchTree& t : enumerate_search_trees(ladder)) {
    for (int b = 0; b < ladder.vertex_count(); ++b) {
      if (b == t.root()) continue;
      int a = t.parent(b);
      if (coloring.left.contains(a) && coloring.left.contains(b)) continue;
      RotationSequence seq{{a, b}};
      CHECK(project_sequence(t, seq, sub).empty());
      CHECK(project_tree(rotate(t, b), sub) == project_tree(t, sub));
    }
  }
}

TEST_CASE("non-convex sets are rejected") {
  Graph p3 = path(3);
  SearchTree chain = from_ordering(p3, {0, 1, 2});
  auto bad = induced_subgraph(p3, VertexSet{0, 2});
  CHECK_THROWS_AS(project_tree(chain, bad), std::invalid_argument);
}
