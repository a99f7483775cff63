#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "assoc/enumerate.hpp"
#include "assoc/generators.hpp"
#include "assoc/io.hpp"
#include "assoc/search_tree.hpp"
#include "assoc/tree_depth.hpp"
#include "assoc/tubing.hpp"

using namespace assoc;

namespace {

// independent oracle: all n! orderings, deduplicated by canonical key
std::set<std::string> trees_from_all_orderings(const Graph& g) {
  std::vector<int> order(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
  std::set<std::string> seen;
  do {
    seen.insert(from_ordering(g, order).key());
  } while (std::next_permutation(order.begin(), order.end()));
  return seen;
}

Graph random_connected(std::mt19937_64& rng, int max_n) {
  while (true) {
    int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2 == 0) edges.emplace_back(u, v);
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
}

SearchTree random_tree(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> order(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  return from_ordering(g, order);
}

}  // namespace

TEST_CASE("from_ordering picks component-wise first vertices") {
  Graph p3 = path(3);
  SearchTree mid = from_ordering(p3, {1, 0, 2});
  CHECK(mid.root() == 1);
  CHECK(mid.children(1) == std::vector<int>{0, 2});

  SearchTree chain = from_ordering(p3, {0, 1, 2});
  CHECK(chain.root() == 0);
  CHECK(chain.parent(1) == 0);
  CHECK(chain.parent(2) == 1);

  SearchTree k3 = from_ordering(complete(3), {2, 0, 1});
  CHECK(k3.root() == 2);
  CHECK(k3.parent(0) == 2);
  CHECK(k3.parent(1) == 0);

  Graph disconnected(2, {});
  CHECK_THROWS_AS(from_ordering(disconnected, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(from_ordering(p3, {0, 0, 2}), std::invalid_argument);
}

TEST_CASE("constructed trees are valid, hand-built junk is not") {
  Graph p3 = path(3);
  // both endpoints as children of 0: {2} is not a component of G - 0
  CHECK_FALSE(is_valid_search_tree(p3, SearchTree(p3, {-1, 0, 0})));
  Graph single(1, {});
  CHECK(is_valid_search_tree(single, SearchTree(single, {-1})));

  std::mt19937_64 rng(11);
  for (int run = 0; run < 1000; ++run) {
    Graph g = random_connected(rng, 8);
    CHECK(is_valid_search_tree(g, random_tree(g, rng)));
  }
}

TEST_CASE("tree constructor rejects malformed parent arrays") {
  Graph p3 = path(3);
  CHECK_THROWS_AS(SearchTree(p3, {-1, -1, 1}), std::invalid_argument);  // two roots
  CHECK_THROWS_AS(SearchTree(p3, {1, 0, 0}), std::invalid_argument);    // cycle
  CHECK_THROWS_AS(SearchTree(p3, {-1, 0}), std::invalid_argument);      // size
}

TEST_CASE("tubings from trees, including the worked five-vertex example") {
  // graph on {a,b,c,d,e} = {0,1,2,3,4} whose tree c -> d -> b -> {a,e}
  // has tube set {{a,b,c,d,e},{a,b,d,e},{a,b,e},{a},{e}}
  Graph g(5, {{0, 1}, {1, 4}, {0, 3}, {2, 3}});
  SearchTree t = from_ordering(g, {2, 3, 1, 0, 4});
  REQUIRE(is_valid_search_tree(g, t));
  Tubing tubes = to_tubing(t);
  Tubing expected = {VertexSet{0}, VertexSet{4}, VertexSet{0, 1, 4},
                     VertexSet{0, 1, 3, 4}, VertexSet{0, 1, 2, 3, 4}};
  std::sort(expected.begin(), expected.end(),
            [](VertexSet a, VertexSet b) {
              return a.count() != b.count() ? a.count() < b.count()
                                            : a.bits() < b.bits();
            });
  CHECK(tubes == expected);
  CHECK(is_valid_tubing(g, tubes));

  Graph single(1, {});
  CHECK(to_tubing(SearchTree(single, {-1})) == Tubing{VertexSet{0}});

  SearchTree k3 = from_ordering(complete(3), {2, 0, 1});
  Tubing k3_tubes = to_tubing(k3);
  CHECK(k3_tubes == Tubing{VertexSet{1}, VertexSet{0, 1}, VertexSet{0, 1, 2}});
}

TEST_CASE("tubing validity cases on the path") {
  Graph p3 = path(3);
  CHECK(is_valid_tubing(p3, {VertexSet{0}, VertexSet{2}}));       // non-adjacent
  CHECK_FALSE(is_valid_tubing(p3, {VertexSet{0, 1}, VertexSet{1, 2}}));
  CHECK_FALSE(is_valid_tubing(p3, {VertexSet{0, 2}}));            // not connected
}

TEST_CASE("every tree maps to a valid tubing, injectively") {
  for (const Graph& g : {path(4), complete(4), star(4), ladder_pw2(2)}) {
    std::set<std::string> seen;
    for (const SearchTree& t : enumerate_search_trees(g)) {
      Tubing tubes = to_tubing(t);
      CHECK(is_valid_tubing(g, tubes));
      CHECK(static_cast<int>(tubes.size()) == g.vertex_count());
      std::string fingerprint;
      for (VertexSet s : tubes) fingerprint += std::to_string(s.bits()) + ",";
      CHECK(seen.insert(fingerprint).second);
    }
  }
}

TEST_CASE("rotations exchange exactly one tube pair and invert") {
  Graph two(2, {{0, 1}});
  SearchTree t01 = from_ordering(two, {0, 1});
  SearchTree t10 = rotate(t01, 1);
  CHECK(t10.root() == 1);
  CHECK(rotate(t10, 0) == t01);

  for (const Graph& g : {path(4), complete(3), star(3)}) {
    for (const SearchTree& t : enumerate_search_trees(g)) {
      Tubing before = to_tubing(t);
      for (int b = 0; b < g.vertex_count(); ++b) {
        if (b == t.root()) continue;
        int a = t.parent(b);
        SearchTree rotated = rotate(t, b);
        CHECK(is_valid_search_tree(g, rotated));
        // flip symmetry: rotating back at the old parent restores t
        CHECK(rotate(rotated, a) == t);
        // the tubings differ in exactly one tube on each side
        Tubing after = to_tubing(rotated);
        std::set<std::uint64_t> sa, sb;
        for (VertexSet s : before) sa.insert(s.bits());
        for (VertexSet s : after) sb.insert(s.bits());
        std::vector<std::uint64_t> gone, added;
        for (auto bits : sa)
          if (!sb.count(bits)) gone.push_back(bits);
        for (auto bits : sb)
          if (!sa.count(bits)) added.push_back(bits);
        CHECK(gone.size() == 1);
        CHECK(added.size() == 1);
      }
    }
  }
  CHECK_THROWS_AS(rotate(t01, 0), std::invalid_argument);
}

TEST_CASE("neighbor lists have n-1 distinct valid members") {
  Graph two(2, {{0, 1}});
  CHECK(neighbors(from_ordering(two, {0, 1})).size() == 1);

  for (const Graph& g : {complete(3), path(4), star(4), cycle(4)}) {
    for (const SearchTree& t : enumerate_search_trees(g)) {
      auto list = neighbors(t);
      CHECK(static_cast<int>(list.size()) == g.vertex_count() - 1);
      std::set<std::string> keys;
      for (const SearchTree& nb : list) {
        CHECK(is_valid_search_tree(g, nb));
        keys.insert(nb.key());
      }
      CHECK(keys.size() == list.size());
    }
  }
}

TEST_CASE("lifting a vertex to the root costs its depth") {
  Graph k3 = complete(3);
  SearchTree chain = from_ordering(k3, {2, 0, 1});
  CHECK(lift_to_root(chain, 2).empty());
  RotationSequence lift = lift_to_root(chain, 1);
  CHECK(lift.size() == 2);
  CHECK(check_sequence(k3, chain, lift).root() == 1);

  std::mt19937_64 rng(23);
  for (int run = 0; run < 1000; ++run) {
    Graph g = random_connected(rng, 8);
    SearchTree t = random_tree(g, rng);
    int v = static_cast<int>(rng() % static_cast<unsigned>(g.vertex_count()));
    RotationSequence seq = lift_to_root(t, v);
    CHECK(static_cast<int>(seq.size()) == t.depth(v));
    CHECK(check_sequence(g, t, seq).root() == v);
  }
}

TEST_CASE("check_sequence reports the failing step") {
  Graph p3 = path(3);
  SearchTree t = from_ordering(p3, {0, 1, 2});
  CHECK(check_sequence(p3, t, {}) == t);
  try {
    check_sequence(p3, t, {{-1, 0}});  // rotates the root
    FAIL("expected RotationError");
  } catch (const RotationError& e) {
    CHECK(e.step == 0);
  }
}

TEST_CASE("enumeration counts match the brute-force ordering oracle") {
  CHECK(count_search_trees(path(3)).to_string() == "5");
  CHECK(count_search_trees(complete(3)).to_string() == "6");

  // stellohedron vertex count via s(q) = 1 + q * s(q-1)
  long long s = 1;
  for (int q = 1; q <= 5; ++q) s = 1 + q * s;
  CHECK(count_search_trees(star(5)).to_string() == std::to_string(s));
  CHECK(s == 326);

  for (const Graph& g : {path(4), cycle(5), cycle(6), star(4), star(5),
                         complete(4), complete_split(2, 3), ladder_pw2(2),
                         complete_bipartite(2, 3), glued_cliques(2, 3)}) {
    auto oracle = trees_from_all_orderings(g);
    auto enumerated = enumerate_search_trees(g);
    CHECK(enumerated.size() == oracle.size());
    CHECK(count_search_trees(g).to_u64() == oracle.size());
    for (const SearchTree& t : enumerated) CHECK(oracle.count(t.key()) == 1);
  }

  CHECK_THROWS_AS(enumerate_search_trees(star(5), 100), CapExceeded);
}

TEST_CASE("heights and tree-depth") {
  Graph single(1, {});
  CHECK(height(SearchTree(single, {-1})) == 1);
  CHECK(height(from_ordering(complete(4), {0, 1, 2, 3})) == 4);
  CHECK(height(from_ordering(star(4), {0, 1, 2, 3, 4})) == 2);

  CHECK(tree_depth(single) == 1);
  for (int n = 2; n <= 6; ++n) CHECK(tree_depth(complete(n)) == n);
  for (int q = 2; q <= 6; ++q) CHECK(tree_depth(star(q)) == 2);
  CHECK(tree_depth(complete_split(2, 4)) == 3);
  CHECK(tree_depth(complete_split(3, 4)) == 4);
  CHECK(tree_depth(complete_bipartite(2, 3)) == 3);
  CHECK(tree_depth(complete_bipartite(3, 4)) == 4);
  CHECK(tree_depth(path(7)) == 3);

  CHECK_THROWS_AS(tree_depth(complete(5), 4), CapExceeded);
}

TEST_CASE("tree-depth is the minimum enumerated height") {
  for (const Graph& g : {path(4), complete(4), star(4), cycle(5),
                         complete_split(2, 2), ladder_pw2(2)}) {
    int td = tree_depth(g);
    int best = g.vertex_count() + 1;
    for (const SearchTree& t : enumerate_search_trees(g)) {
      CHECK(td <= height(t));
      best = std::min(best, height(t));
    }
    CHECK(best == td);
  }
}

TEST_CASE("tree text, JSON and DOT formats") {
  Graph p3 = path(3);
  SearchTree t = from_ordering(p3, {1, 0, 2});
  std::string text = tree_to_text(t);
  CHECK(text == "1; 0:1, 2:1");
  CHECK(tree_from_text(p3, text) == t);

  auto j = tree_to_json(t);
  CHECK(j["root"] == 1);
  CHECK(j["parent"][1].is_null());
  CHECK(tree_from_json(p3, j) == t);

  Graph single(1, {});
  SearchTree lone(single, {-1});
  CHECK(tree_from_text(single, tree_to_text(lone)) == lone);

  std::string dot = tree_to_dot(t);
  CHECK(dot.find("\"1\" -> \"0\"") != std::string::npos);
  CHECK(dot.find("\"1\" -> \"2\"") != std::string::npos);

  CHECK_THROWS_AS(tree_from_text(p3, "nonsense"), std::invalid_argument);
  // parseable but not a search tree: the parser leaves validity to callers
  SearchTree fan = tree_from_text(p3, "0; 1:0, 2:0");
  CHECK_FALSE(is_valid_search_tree(p3, fan));
}
