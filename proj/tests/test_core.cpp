#include <doctest.h>

#include <random>
#include <set>

#include "assoc/bigint.hpp"
#include "assoc/generators.hpp"
#include "assoc/graph.hpp"
#include "assoc/io.hpp"
#include "assoc/trivially_perfect.hpp"

using namespace assoc;

TEST_CASE("big integers add, multiply and print") {
  BigUint a(123456789012345ULL);
  BigUint b(987654321098765ULL);
  CHECK((a + b).to_string() == "1111111110111110");
  CHECK((a * BigUint(0)).to_string() == "0");
  CHECK(BigUint(0).to_string() == "0");

  // 21! does not fit in 64 bits
  BigUint fact(1);
  for (std::uint64_t i = 2; i <= 21; ++i) fact *= BigUint(i);
  CHECK(fact.to_string() == "51090942171709440000");
  CHECK_FALSE(fact.fits_u64());
  BigUint fact20(1);
  for (std::uint64_t i = 2; i <= 20; ++i) fact20 *= BigUint(i);
  CHECK(fact20.fits_u64());
  CHECK(fact20.to_u64() == 2432902008176640000ULL);
  CHECK(fact20 < fact);
  CHECK(BigUint(5) == BigUint(5));
}

TEST_CASE("graph construction deduplicates and validates") {
  Graph single(1, {});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(p3.edge_count() == 2);

  Graph dup(3, {{0, 1}, {1, 2}, {1, 0}});
  CHECK(dup.edge_count() == 2);

  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
}

TEST_CASE("connectivity and components") {
  CHECK(is_connected(path(3)));
  CHECK_FALSE(is_connected(Graph(2, {})));
  CHECK(is_connected(Graph(1, {})));
  CHECK(is_connected(complete_split(2, 4)));

  // path minus its middle vertex
  Graph p3 = path(3);
  auto comps = components_within(p3, p3.vertices().without(1));
  CHECK(comps.size() == 2);

  // star minus its center leaves q singletons
  Graph s = star(5);
  auto leaves = components_within(s, s.vertices().without(0));
  CHECK(leaves.size() == 5);
  for (const VertexSet& comp : leaves) CHECK(comp.count() == 1);

  CHECK(connected_components(complete(4)).size() == 1);
}

TEST_CASE("induced subgraphs renumber and report the mapping") {
  Graph p3 = path(3);
  auto sub = induced_subgraph(p3, VertexSet{0, 1});
  CHECK(sub.graph.vertex_count() == 2);
  CHECK(sub.graph.edge_count() == 1);
  CHECK(sub.to_old == std::vector<int>{0, 1});

  auto k3 = induced_subgraph(complete(4), VertexSet{0, 2, 3});
  CHECK(k3.graph.edge_count() == 3);
  CHECK(k3.to_new[2] == 1);

  // the independent side of a split graph induces no edges
  Graph spk = complete_split(2, 4);
  auto q_side = induced_subgraph(spk, split_part_q(2, 4));
  CHECK(q_side.graph.vertex_count() == 4);
  CHECK(q_side.graph.edge_count() == 0);

  CHECK_THROWS_AS(induced_subgraph(p3, VertexSet{}), std::invalid_argument);
}

TEST_CASE("simplicial vertices and elimination orderings") {
  Graph p3 = path(3);
  CHECK(is_simplicial(p3, 0));
  CHECK(is_simplicial(p3, 2));
  CHECK_FALSE(is_simplicial(p3, 1));
  for (int v = 0; v < 5; ++v) CHECK(is_simplicial(complete(5), v));

  auto order = perfect_elimination_ordering(p3);
  REQUIRE(order.has_value());
  CHECK((order->front() == 0 || order->front() == 2));

  CHECK_FALSE(perfect_elimination_ordering(cycle(4)).has_value());
  CHECK(is_chordal(complete_split(2, 4)));
  CHECK_FALSE(is_chordal(complete_bipartite(2, 2)));
}

TEST_CASE("family generators match their edge counts") {
  CHECK(complete_split(3, 4).edge_count() == 15);  // pq + C(p,2)
  CHECK(complete_bipartite(3, 4).edge_count() == 12);

  Graph glued = glued_cliques(2, 5);
  CHECK(glued.vertex_count() == 9);
  CHECK(glued.edge_count() == 20);  // 2 * C(5,2) = td * n / 2 with td = 5
  CHECK(glued.label(0) == "v");

  Graph ladder = ladder_pw2(4);
  CHECK(ladder.vertex_count() == 8);
  CHECK(ladder.edge_count() == 13);  // 3 + 3 + 4 rungs + 3 diagonals

  for (int k = 2; k <= 6; ++k) {
    for (int t = 1; t <= 6; ++t) {
      Graph chain = clique_chain(k, t);
      CHECK(chain.vertex_count() == t * (k - 1) + 1);
      CHECK(chain.edge_count() == t * k * (k - 1) / 2);
    }
  }

  CHECK(cycle(5).edge_count() == 5);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(complete_split(0, 3), std::invalid_argument);
}

TEST_CASE("every generator output is connected and simple") {
  const std::vector<Graph> graphs = {
      complete(5),          path(6),          cycle(6),
      star(5),              complete_split(3, 3), complete_bipartite(2, 4),
      glued_cliques(3, 3),  clique_chain(3, 3),   ladder_pw2(5),
      random_tp(42, 9)};
  for (const Graph& g : graphs) {
    CHECK(is_connected(g));
    for (auto [u, v] : g.edges()) {
      CHECK(u < v);  // normalized, no self-loops
      CHECK(v < g.vertex_count());
    }
  }
}

TEST_CASE("split degrees follow the two-sided pattern") {
  for (int p = 1; p <= 8; ++p) {
    for (int q = 1; q <= 8; ++q) {
      Graph spk = complete_split(p, q);
      for (int v = 0; v < p; ++v) CHECK(spk.degree(v) == p - 1 + q);
      for (int v = p; v < p + q; ++v) CHECK(spk.degree(v) == p);
    }
  }
}

TEST_CASE("ladders are chordal for every size") {
  for (int n = 2; n <= 32; ++n) CHECK(is_chordal(ladder_pw2(n)));
}

TEST_CASE("seeded trivially perfect graphs really are trivially perfect") {
  std::mt19937_64 rng(7);
  for (int run = 0; run < 1000; ++run) {
    Graph g = random_tp(rng(), 1 + static_cast<int>(rng() % 12));
    CHECK(is_connected(g));
    CHECK(recognize_tp(g).has_value());
  }
}

TEST_CASE("graph spec strings") {
  CHECK(graph_from_spec("split:3,4").edge_count() == 15);
  CHECK(graph_from_spec("ladder:8").vertex_count() == 16);
  CHECK(graph_from_spec("gluedcliques:2x5").vertex_count() == 9);
  CHECK(graph_from_spec("cliquechain:3x4").vertex_count() == 9);
  CHECK(graph_from_spec("randomtp:5,6").vertex_count() >= 2);
  CHECK_THROWS_AS(graph_from_spec("frobnicate:3"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_spec("path"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_spec("split:3"), std::invalid_argument);
}

TEST_CASE("edge list and JSON round trips") {
  Graph g = complete_split(2, 3);
  Graph back = graph_from_edge_list(graph_to_edge_list(g));
  CHECK(back == g);

  Graph json_back = graph_from_json(graph_to_json(g));
  CHECK(json_back == g);
  CHECK(json_back.label(0) == "x1");
  CHECK(json_back.label(2) == "y1");

  Graph commented = graph_from_edge_list("# a comment\n2 1\n0 1\n");
  CHECK(commented.edge_count() == 1);
  CHECK_THROWS_AS(graph_from_edge_list("2 5\n0 1\n"), std::invalid_argument);
}
