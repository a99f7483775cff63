#include "assoc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "assoc/bounds.hpp"
#include "assoc/enumerate.hpp"
#include "assoc/flip_graph.hpp"
#include "assoc/generators.hpp"
#include "assoc/projection.hpp"
#include "assoc/search_tree.hpp"
#include "assoc/split_bipartite.hpp"
#include "assoc/tree_depth.hpp"
#include "assoc/trivially_perfect.hpp"

namespace assoc {

namespace {

// BFS-exact golden values derived with this artifact (no closed form is
// known for them): rotation distance of the hard pair on ladder_pw2(n).
// ladder_pw2(8) has ~7.4e10 search trees and stays beyond any desk-scale
// cap, so only n = 2 and n = 4 are pinned.
constexpr int kLadderWitnessDistance2 = 1;
constexpr int kLadderWitnessDistance4 = 7;

struct Ctx {
  VerifyReport& report;
  const VerifyConfig& config;

  template <typename T>
  static std::string str(const T& value) {
    std::ostringstream out;
    out << value;
    return out.str();
  }

  void check(const std::string& name, const std::string& expected,
             const std::string& actual, bool pass) {
    report.checks.push_back({name, expected, actual, pass});
  }
  template <typename A, typename B>
  void equal(const std::string& name, const A& expected, const B& actual) {
    check(name, str(expected), str(actual), str(expected) == str(actual));
  }
  template <typename A, typename B>
  void at_most(const std::string& name, const A& value, const B& bound) {
    check(name, "<= " + str(bound), str(value), value <= bound);
  }
  template <typename A, typename B>
  void at_least(const std::string& name, const A& value, const B& bound) {
    check(name, ">= " + str(bound), str(value), value >= bound);
  }
  void truth(const std::string& name, bool ok) {
    check(name, "true", ok ? "true" : "false", ok);
  }
  std::size_t scaled(std::size_t count) const {
    return std::max<std::size_t>(1, static_cast<std::size_t>(
                                        static_cast<double>(count) * config.scale));
  }
};

Graph random_connected_graph(std::mt19937_64& rng, int min_n, int max_n) {
  while (true) {
    int n = min_n + static_cast<int>(rng() % static_cast<unsigned>(max_n - min_n + 1));
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

// connected spanning subgraph obtained by dropping removable edges
Graph random_connected_subgraph(const Graph& g, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> kept = g.edges();
  std::shuffle(kept.begin(), kept.end(), rng);
  for (std::size_t i = 0; i < kept.size();) {
    if (rng() % 2 != 0) {
      ++i;
      continue;
    }
    std::vector<std::pair<int, int>> trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_connected(Graph(g.vertex_count(), trial))) {
      kept = std::move(trial);
    } else {
      ++i;
    }
  }
  return Graph(g.vertex_count(), kept);
}

// remaining set after removing a few random simplicial vertices
VertexSet random_convex_set(const Graph& g, std::mt19937_64& rng) {
  VertexSet domain = g.vertices();
  int removals = static_cast<int>(rng() % static_cast<unsigned>(g.vertex_count()));
  for (int step = 0; step < removals && domain.count() > 1; ++step) {
    std::vector<int> simplicial;
    for (int v : domain)
      if (is_simplicial_within(g, domain, v)) simplicial.push_back(v);
    if (simplicial.empty()) break;
    domain.remove(simplicial[rng() % simplicial.size()]);
  }
  return domain;
}

void verify_mlb(Ctx& ctx) {
  const std::vector<std::pair<std::string, Graph>> named = {
      {"complete:4", complete(4)},         {"star:5", star(5)},
      {"star:6", star(6)},                 {"path:7", path(7)},
      {"cycle:5", cycle(5)},               {"split:2,3", complete_split(2, 3)},
      {"ladder:2", ladder_pw2(2)}};
  for (const auto& [spec, g] : named) {
    auto [lo, hi] = mp_bounds(g);
    int exact = diameter(g, ctx.config.node_cap, ctx.config.threads).diameter;
    ctx.truth(spec + " sandwich " + Ctx::str(lo) + " <= " + Ctx::str(exact) +
                  " <= " + Ctx::str(hi),
              lo <= exact && exact <= hi);
  }
  std::mt19937_64 rng(ctx.config.seed);
  std::size_t rounds = ctx.scaled(30);
  std::size_t good = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    Graph g = random_connected_graph(rng, 2, 6);
    auto [lo, hi] = mp_bounds(g);
    int exact = diameter(g, ctx.config.node_cap, ctx.config.threads).diameter;
    if (lo <= exact && exact <= hi) ++good;
  }
  ctx.equal("random graphs (n <= 6) sandwiched", rounds, good);
}

void verify_monot(Ctx& ctx) {
  int pentagon = diameter(path(3), ctx.config.node_cap).diameter;
  int hexagon = diameter(complete(3), ctx.config.node_cap).diameter;
  ctx.equal("path:3 diameter (pentagon)", 2, pentagon);
  ctx.equal("complete:3 diameter (hexagon)", 3, hexagon);
  ctx.truth("P_3 inside K_3 keeps diameters ordered", pentagon <= hexagon);
  ctx.truth("identical graphs tie",
            monotonicity_check(star(4), star(4), ctx.config.node_cap));
  std::mt19937_64 rng(ctx.config.seed + 1);
  std::size_t rounds = ctx.scaled(50);
  std::size_t good = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    Graph big = random_connected_graph(rng, 3, 6);
    Graph small = random_connected_subgraph(big, rng);
    if (monotonicity_check(small, big, ctx.config.node_cap)) ++good;
  }
  ctx.equal("seeded subgraph pairs non-decreasing", rounds, good);
}

void verify_teo1tp(Ctx& ctx) {
  std::mt19937_64 rng(ctx.config.seed + 2);
  std::size_t rounds = ctx.scaled(20);
  std::size_t good = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    Graph g = random_tp(rng(), 5);  // at most 7 vertices
    int m = g.edge_count();
    int exact = diameter(g, ctx.config.node_cap, ctx.config.threads).diameter;
    if (m <= exact && exact <= 2 * m) ++good;
  }
  ctx.equal("trivially perfect: m <= diameter <= 2m", rounds, good);
}

void verify_teo2tp(Ctx& ctx) {
  std::mt19937_64 rng(ctx.config.seed + 3);
  std::size_t rounds = ctx.scaled(500);
  std::size_t transform_ok = 0, path_ok = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    Graph g = random_tp(rng(), 7);  // at most 9 vertices
    auto ucd = recognize_tp(g);
    SearchTree canonical = min_height_tree(g, *ucd);
    SearchTree t1 = random_tree(g, rng);
    SearchTree t2 = random_tree(g, rng);
    RotationSequence s1 = tp_transform(g, t1);
    if (static_cast<int>(s1.size()) <= g.edge_count() &&
        check_sequence(g, t1, s1) == canonical)
      ++transform_ok;
    RotationSequence s12 = tp_path(g, t1, t2);
    if (static_cast<int>(s12.size()) <= 2 * g.edge_count() &&
        check_sequence(g, t1, s12) == t2)
      ++path_ok;
  }
  ctx.equal("tp_transform length <= m and ends canonical", rounds, transform_ok);
  ctx.equal("tp_path length <= 2m and replays t1 -> t2", rounds, path_ok);
  // the diameter statement itself, on skeleton-sized instances
  std::size_t small_rounds = ctx.scaled(20), small_good = 0;
  for (std::size_t i = 0; i < small_rounds; ++i) {
    Graph g = random_tp(rng(), 5);
    int exact = diameter(g, ctx.config.node_cap, ctx.config.threads).diameter;
    if (exact <= 2 * g.edge_count()) ++small_good;
  }
  ctx.equal("BFS diameter <= 2m", small_rounds, small_good);
}

void verify_mtp(Ctx& ctx) {
  std::mt19937_64 rng(ctx.config.seed + 4);
  std::size_t rounds = ctx.scaled(500);
  std::size_t bound_ok = 0, td_ok = 0, td_checked = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    Graph g = random_tp(rng(), 10);  // at most 12 vertices
    if (edge_bound(g)) ++bound_ok;
    if (g.vertex_count() <= 10) {
      ++td_checked;
      auto ucd = recognize_tp(g);
      if (height(min_height_tree(g, *ucd)) == tree_depth(g)) ++td_ok;
    }
  }
  ctx.equal("m < td * n on seeded instances", rounds, bound_ok);
  ctx.equal("min-height tree height equals tree-depth", td_checked, td_ok);
}

void verify_tdub(Ctx& ctx) {
  const std::vector<std::tuple<std::string, Graph, int>> named = {
      {"star:5", star(5), 2},
      {"split:2,3", complete_split(2, 3), 3},
      {"complete:4", complete(4), 4},
      {"gluedcliques:2x3", glued_cliques(2, 3), 3}};
  for (const auto& [spec, g, td] : named) {
    int exact = diameter(g, ctx.config.node_cap, ctx.config.threads).diameter;
    ctx.at_most(spec + " diameter vs 2*td*n", exact,
                td_bound(g.vertex_count(), td));
  }
  std::mt19937_64 rng(ctx.config.seed + 5);
  std::size_t rounds = ctx.scaled(15);
  std::size_t good = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    Graph g = random_tp(rng(), 5);
    auto ucd = recognize_tp(g);
    int td = height(min_height_tree(g, *ucd));
    int exact = diameter(g, ctx.config.node_cap, ctx.config.threads).diameter;
    if (exact <= td_bound(g.vertex_count(), td)) ++good;
  }
  ctx.equal("random trivially perfect instances under 2*td*n", rounds, good);
}

void verify_tdlb(Ctx& ctx) {
  for (auto [k, s] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}}) {
    Graph g = glued_cliques(k, s);
    std::string spec = "gluedcliques:" + Ctx::str(k) + "x" + Ctx::str(s);
    int n = k * (s - 1);  // the construction has n+1 vertices
    ctx.equal(spec + " tree-depth", s, tree_depth(g));
    ctx.equal(spec + " edge count td*n/2", s * n / 2, g.edge_count());
    try {
      int exact = diameter(g, ctx.config.node_cap, ctx.config.threads).diameter;
      ctx.at_least(spec + " diameter vs td*n/2", exact, s * n / 2);
    } catch (const CapExceeded&) {
      // formula checks above still stand; skeleton too large to verify
    }
  }
}

void verify_pwcliques(Ctx& ctx) {
  std::size_t formula_ok = 0, total = 0;
  for (int k = 2; k <= 4; ++k) {
    for (int t = 2; t <= 4; ++t) {
      Graph g = clique_chain(k, t);
      int n = t * (k - 1);  // the construction has n+1 vertices
      ++total;
      if (g.vertex_count() == n + 1 && 2 * g.edge_count() == n * k && is_chordal(g))
        ++formula_ok;
    }
  }
  ctx.equal("clique chains: interval shape and m = nk/2", total, formula_ok);
  Graph g = clique_chain(3, 2);
  int exact = diameter(g, ctx.config.node_cap, ctx.config.threads).diameter;
  ctx.at_least("cliquechain:3x2 diameter vs m", exact, g.edge_count());
}

void verify_pw2lb_invariants(Ctx& ctx) {
  bool alternates = true;
  for (int k = 2; k <= 12; ++k) {
    BitReversalPermutation sigma = bit_reversal(k);
    int n = static_cast<int>(sigma.values.size());
    for (int i = 0; i < n; ++i) {
      bool small = sigma.values[i] <= n / 2;
      if (small != (i % 2 == 0)) alternates = false;
    }
  }
  ctx.truth("sigma_k alternates around n/2 for k <= 12", alternates);
  ctx.truth("sigma_4 listing",
            bit_reversal(4).values == std::vector<int>({1, 5, 3, 7, 2, 6, 4, 8}));

  for (int n : {4, 8}) {
    Graph ladder = ladder_pw2(n);
    auto [t, t_prime] = pw2_witness_trees(ladder, n);
    TwoColoring coloring = ladder_two_coloring(n);
    ctx.truth("ladder:" + Ctx::str(n) + " witnesses valid",
              is_valid_search_tree(ladder, t) &&
                  is_valid_search_tree(ladder, t_prime));
    ctx.equal("alternation of T on ladder:" + Ctx::str(n), 1,
              alternation_number(t, coloring));
    ctx.equal("alternation of T' on ladder:" + Ctx::str(n), n + 1,
              alternation_number(t_prime, coloring));
  }

  std::mt19937_64 rng(ctx.config.seed + 6);
  std::size_t rounds = ctx.scaled(100'000);
  std::size_t mono_bad = 0, jump_bad = 0;
  for (int n : {4, 8}) {
    Graph ladder = ladder_pw2(n);
    TwoColoring coloring = ladder_two_coloring(n);
    SearchTree cur = random_tree(ladder, rng);
    int alt = alternation_number(cur, coloring);
    for (std::size_t i = 0; i < rounds / 2; ++i) {
      int b;
      do b = static_cast<int>(rng() % static_cast<unsigned>(ladder.vertex_count()));
      while (b == cur.root());
      RotationColor color = classify_rotation(cur, b, coloring);
      cur = rotate(cur, b);
      int next = alternation_number(cur, coloring);
      if (color == RotationColor::monochromatic && next > alt) ++mono_bad;
      if (next > alt + 2) ++jump_bad;
      alt = next;
    }
  }
  ctx.equal("monochromatic rotations never raise alternation", std::size_t{0},
            mono_bad);
  ctx.equal("no rotation raises alternation by more than 2", std::size_t{0},
            jump_bad);

  Graph ladder2 = ladder_pw2(2);
  auto [a2, b2] = pw2_witness_trees(ladder2, 2);
  int d2 = distance(ladder2, a2, b2, ctx.config.visit_cap).distance;
  ctx.equal("witness distance on ladder:2", kLadderWitnessDistance2, d2);

  Graph ladder4 = ladder_pw2(4);
  auto [a4, b4] = pw2_witness_trees(ladder4, 4);
  DistanceCertificate cert = distance(ladder4, a4, b4, ctx.config.visit_cap);
  ctx.equal("witness distance on ladder:4", kLadderWitnessDistance4,
            cert.distance);
  ctx.at_least("recurrence l(4) >= 2*l(2) + 2", cert.distance,
               2 * kLadderWitnessDistance2 + 2);

  // a shortest path must cross the coloring at least n/2 times
  TwoColoring coloring = ladder_two_coloring(4);
  SearchTree cur = a4;
  int bichromatic = 0;
  for (const Rotation& step : cert.witness) {
    if (classify_rotation(cur, step.child, coloring) == RotationColor::bichromatic)
      ++bichromatic;
    cur = rotate(cur, step.child);
  }
  ctx.truth("shortest witness path replays", cur == b4);
  ctx.at_least("bichromatic rotations on a shortest path", bichromatic, 2);
}

void verify_p1cb(Ctx& ctx) {
  long long violations = 0, identity_bad = 0;
#pragma omp parallel for collapse(2) reduction(+ : violations, identity_bad) \
    schedule(dynamic)
  for (int p = 1; p <= 8; ++p) {
    for (int q = 1; q <= 40; ++q) {
      for (int alpha = 0; alpha < p; ++alpha) {
        for (int beta = 0; beta < q; ++beta) {
          long long f0 = f_eval(p, q, alpha, beta, 0);
          long long fq = f_eval(p, q, alpha, beta, q);
          long long cp = static_cast<long long>(p) * (p - 1) / 2;
          long long cq = static_cast<long long>(q) * (q - 1) / 2;
          if (f0 != cp + cq + static_cast<long long>(alpha) * q + beta)
            ++identity_bad;
          if (fq !=
              cp + static_cast<long long>(alpha) * q + 2LL * q * (p - alpha) - beta)
            ++identity_bad;
          long long low = std::min(f0, fq);
          for (int k = 0; k <= q; ++k)
            if (f_eval(p, q, alpha, beta, k) < low) ++violations;
        }
      }
    }
  }
  ctx.equal("f(k) >= min{f(0), f(q)} on the full grid", 0LL, violations);
  ctx.equal("closed forms of f(0) and f(q)", 0LL, identity_bad);
}

void verify_l2cb_witness(Ctx& ctx) {
  for (auto [p, q] :
       std::vector<std::pair<int, int>>{{1, 4}, {1, 5}, {2, 3}, {2, 4}}) {
    Graph spk = complete_split(p, q);
    SplitWitnessParams params = choose_witness_params(p, q);
    auto [t1, t2] = split_witnesses(spk, p, q, params);
    int dist_exact = distance(spk, t1, t2, ctx.config.visit_cap).distance;
    long long bound = split_distance_lower_bound(p, q, params.alpha, params.beta);
    ctx.at_least("SPK_{" + Ctx::str(p) + "," + Ctx::str(q) + "} witness distance",
                 dist_exact, bound);
  }
  std::size_t valid = 0, total = 0;
  for (int p = 1; p <= 5; ++p) {
    for (int q = 1; q <= 5; ++q) {
      Graph spk = complete_split(p, q);
      for (int alpha = 0; alpha < p; ++alpha) {
        for (int beta = 0; beta < q; ++beta) {
          auto [t1, t2] = split_witnesses(spk, p, q, {alpha, beta});
          ++total;
          if (is_valid_search_tree(spk, t1) && is_valid_search_tree(spk, t2))
            ++valid;
        }
      }
    }
  }
  ctx.equal("witness brooms valid for all p,q <= 5", total, valid);
}

void verify_csga(Ctx& ctx) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{
           {1, 1}, {1, 4}, {1, 5}, {2, 2}, {2, 3}, {2, 4}, {3, 1}}) {
    Graph spk = complete_split(p, q);
    int exact = diameter(spk, ctx.config.node_cap, ctx.config.threads).diameter;
    ctx.equal("SPK_{" + Ctx::str(p) + "," + Ctx::str(q) + "} diameter formula",
              split_diameter(p, q), exact);
  }
  // witness-pair construction matches the closed form with no BFS at all:
  // the lower bound and the built path pinch the distance exactly
  std::size_t exact_matches = 0, total = 0;
  for (int p = 1; p <= 5; ++p) {
    for (int q = 2; q <= 20; ++q) {
      Graph spk = complete_split(p, q);
      SplitWitnessParams params = choose_witness_params(p, q);
      auto [t1, t2] = split_witnesses(spk, p, q, params);
      RotationSequence seq = q <= 4 * p
                                 ? split_upper_path_balanced(spk, p, q, t1, t2)
                                 : split_upper_path(spk, p, q, t1, t2);
      ++total;
      if (check_sequence(spk, t1, seq) == t2 &&
          static_cast<long long>(seq.size()) == split_diameter(p, q) &&
          split_lower_bound(p, q) == split_diameter(p, q))
        ++exact_matches;
    }
  }
  ctx.equal("witness paths realize the closed form (p <= 5, q <= 20)", total,
            exact_matches);
}

void verify_stello(Ctx& ctx) {
  ctx.equal("stellohedron diameter of star:5", 10,
            diameter(star(5), ctx.config.node_cap, ctx.config.threads).diameter);
  ctx.equal("stellohedron diameter of star:6", 12,
            diameter(star(6), ctx.config.node_cap, ctx.config.threads).diameter);
  bool formula_ok = true;
  for (int n = 5; n <= 20; ++n)
    if (split_diameter(1, n) != 2LL * n) formula_ok = false;
  ctx.truth("split formula reduces to 2n for stars (5 <= n <= 20)", formula_ok);
}

void verify_lemme_dist_sp(Ctx& ctx) {
  Graph k23 = complete_bipartite(2, 3);
  FlipGraph fg = build_flip_graph(k23, ctx.config.node_cap);
  auto trees = enumerate_search_trees(k23);
  VertexSet part_p = VertexSet::full(2);
  VertexSet part_q = VertexSet::full(5) - part_p;
  int worst = 0;
  std::size_t fixed_points = 0, construct_ok = 0;
  for (const SearchTree& t : trees) {
    auto [xt, nt] = xt_nt(k23, 2, 3, t);
    worst = std::max(worst, distance_via_skeleton(fg, t, xt) +
                                distance_via_skeleton(fg, t, nt));
    if (xt_nt(k23, 2, 3, nt).second == nt) ++fixed_points;
    // the two lift constructions split the pq exchanges between them
    std::size_t cost_x = 0, cost_n = 0;
    for (int x : part_p)
      for (int v = t.parent(x); v != -1; v = t.parent(v))
        if (part_q.contains(v)) ++cost_x;
    for (int y : part_q)
      for (int v = t.parent(y); v != -1; v = t.parent(v))
        if (part_p.contains(v)) ++cost_n;
    if (cost_x + cost_n == 6) ++construct_ok;
  }
  ctx.at_most("worst dist(T, X_T) + dist(T, N_T) on K_{2,3}", worst, 6);
  ctx.equal("N_T is a fixed point of the N construction", trees.size(),
            fixed_points);
  ctx.equal("lift costs split pq exactly", trees.size(), construct_ok);
}

void verify_l3sp(Ctx& ctx) {
  Graph k23 = complete_bipartite(2, 3);
  FlipGraph fg = build_flip_graph(k23, ctx.config.node_cap);
  auto trees = enumerate_search_trees(k23);
  std::size_t good = 0, pairs = 0;
  for (const SearchTree& t1 : trees) {
    for (const SearchTree& t2 : trees) {
      RotationSequence seq = bipartite_upper_path(k23, 2, 3, t1, t2);
      ++pairs;
      if (seq.size() <= 12 && check_sequence(k23, t1, seq) == t2 &&
          static_cast<int>(seq.size()) >= distance_via_skeleton(fg, t1, t2))
        ++good;
    }
  }
  ctx.equal("all K_{2,3} pairs: replay, <= 2pq, >= exact distance", pairs, good);
}

void verify_teo1_sp(Ctx& ctx) {
  for (int q : {5, 6}) {
    Graph g = complete_bipartite(1, q);
    auto [t1, t2] = bipartite_witnesses(g, 1, q);
    ctx.equal("K_{1," + Ctx::str(q) + "} witness distance 2pq", 2 * q,
              distance(g, t1, t2, ctx.config.visit_cap).distance);
  }
  std::size_t exact_paths = 0, total = 0;
  for (int p = 1; p <= 4; ++p) {
    for (int q = 4 * p + 1; q <= 20; ++q) {
      Graph g = complete_bipartite(p, q);
      auto [t1, t2] = bipartite_witnesses(g, p, q);
      RotationSequence seq = bipartite_upper_path(g, p, q, t1, t2);
      ++total;
      if (check_sequence(g, t1, seq) == t2 &&
          static_cast<long long>(seq.size()) == 2LL * p * q &&
          bipartite_diameter_unbalanced(p, q) == 2LL * p * q)
        ++exact_paths;
    }
  }
  ctx.equal("unbalanced witness paths have length 2pq", total, exact_paths);
  bool guarded = false;
  try {
    bipartite_diameter_unbalanced(2, 8);
  } catch (const std::invalid_argument&) {
    guarded = true;  // balanced case is open
  }
  ctx.truth("balanced case refuses to claim a diameter", guarded);
}

void verify_projection(Ctx& ctx) {
  std::mt19937_64 rng(ctx.config.seed + 7);
  std::size_t rounds = ctx.scaled(200);
  std::size_t replay_ok = 0, order_ok = 0;
  const std::vector<Graph> graphs = {ladder_pw2(2), complete_split(2, 3),
                                     complete_split(2, 4)};
  for (std::size_t i = 0; i < rounds; ++i) {
    const Graph& g = graphs[i % graphs.size()];
    VertexSet s = random_convex_set(g, rng);
    auto sub = induced_subgraph(g, s);
    SearchTree start = random_tree(g, rng);
    SearchTree cur = start;
    RotationSequence seq;
    std::size_t len = 1 + rng() % 30;
    for (std::size_t k = 0; k < len; ++k) {
      int b;
      do b = static_cast<int>(rng() % static_cast<unsigned>(g.vertex_count()));
      while (b == cur.root());
      seq.push_back({cur.parent(b), b});
      cur = rotate(cur, b);
    }
    SearchTree start_proj = project_tree(start, sub);
    SearchTree end_proj = project_tree(cur, sub);
    RotationSequence proj = project_sequence(start, seq, sub);
    if (check_sequence(sub.graph, start_proj, proj) == end_proj) ++replay_ok;
    if (project_tree_shuffled(start, sub, rng()) == start_proj) ++order_ok;
  }
  ctx.equal("projected sequences replay between projected trees", rounds,
            replay_ok);
  ctx.equal("projection independent of elimination order", rounds, order_ok);

  // a rotation involving a removed vertex leaves the projection unchanged
  Graph ladder = ladder_pw2(2);
  TwoColoring coloring = ladder_two_coloring(2);
  auto sub = induced_subgraph(ladder, coloring.left);
  std::size_t unchanged = 0, checked = 0;
  for (const SearchTree& t : enumerate_search_trees(ladder)) {
    for (int b = 0; b < ladder.vertex_count(); ++b) {
      if (b == t.root()) continue;
      int a = t.parent(b);
      if (coloring.left.contains(a) && coloring.left.contains(b)) continue;
      ++checked;
      if (project_tree(rotate(t, b), sub) == project_tree(t, sub)) ++unchanged;
    }
  }
  ctx.equal("rotations outside S keep the projection fixed", checked, unchanged);
}

using TheoremFn = void (*)(Ctx&);

const std::vector<std::pair<std::string, TheoremFn>>& theorem_table() {
  static const std::vector<std::pair<std::string, TheoremFn>> table = {
      {"mlb", verify_mlb},
      {"monot", verify_monot},
      {"teo1tp", verify_teo1tp},
      {"teo2tp", verify_teo2tp},
      {"mtp", verify_mtp},
      {"tdub", verify_tdub},
      {"tdlb", verify_tdlb},
      {"pwcliques", verify_pwcliques},
      {"pw2lb-invariants", verify_pw2lb_invariants},
      {"p1cb", verify_p1cb},
      {"l2cb-witness", verify_l2cb_witness},
      {"csga", verify_csga},
      {"stello", verify_stello},
      {"lemme-dist-sp", verify_lemme_dist_sp},
      {"l3sp", verify_l3sp},
      {"teo1-sp", verify_teo1_sp},
      {"projection", verify_projection},
  };
  return table;
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.pass; });
}

const std::vector<std::string>& known_theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : theorem_table()) out.push_back(id);
    return out;
  }();
  return ids;
}

VerifyReport verify(const std::string& theorem_id, const VerifyConfig& config) {
  for (const auto& [id, fn] : theorem_table()) {
    if (id != theorem_id) continue;
    VerifyReport report;
    report.theorem = id;
    Ctx ctx{report, config};
    auto start = std::chrono::steady_clock::now();
    fn(ctx);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
  }
  throw std::invalid_argument("unknown theorem id: " + theorem_id);
}

VerifyConfig VerifyConfig::from_json(const nlohmann::json& j) {
  VerifyConfig config;
  if (j.contains("scale")) config.scale = j.at("scale").get<double>();
  if (j.contains("node_cap")) config.node_cap = j.at("node_cap").get<std::size_t>();
  if (j.contains("visit_cap"))
    config.visit_cap = j.at("visit_cap").get<std::size_t>();
  if (j.contains("threads")) config.threads = j.at("threads").get<int>();
  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  return config;
}

nlohmann::json report_to_json(const VerifyReport& report, bool with_timing) {
  nlohmann::json checks = nlohmann::json::array();
  for (const VerifyCheck& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"pass", c.pass}});
  nlohmann::json j{{"theorem", report.theorem}, {"checks", checks}};
  if (with_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

}  // namespace assoc
