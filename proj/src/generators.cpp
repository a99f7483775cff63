#include "assoc/generators.hpp"

#include <random>
#include <stdexcept>

namespace assoc {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph complete(int n) {
  require(n >= 1, "complete: n must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  require(n >= 1, "path: n must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be at least 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 1, 0);
  return Graph(n, std::move(edges));
}

Graph star(int q) {
  return complete_split(1, q);
}

Graph complete_split(int p, int q) {
  require(p >= 1 && q >= 1, "complete_split: p and q must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v) edges.emplace_back(u, v);
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < q; ++v) edges.emplace_back(u, p + v);
  Graph g(p + q, std::move(edges));
  for (int i = 0; i < p; ++i) g.set_label(i, "x" + std::to_string(i + 1));
  for (int i = 0; i < q; ++i) g.set_label(p + i, "y" + std::to_string(i + 1));
  return g;
}

Graph complete_bipartite(int p, int q) {
  require(p >= 1 && q >= 1, "complete_bipartite: p and q must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < q; ++v) edges.emplace_back(u, p + v);
  Graph g(p + q, std::move(edges));
  for (int i = 0; i < p; ++i) g.set_label(i, "x" + std::to_string(i + 1));
  for (int i = 0; i < q; ++i) g.set_label(p + i, "y" + std::to_string(i + 1));
  return g;
}

Graph glued_cliques(int k, int s) {
  require(k >= 1 && s >= 2, "glued_cliques: need k >= 1 cliques of size >= 2");
  // vertex 0 shared by all cliques; clique i adds s-1 private vertices
  int n = 1 + k * (s - 1);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    std::vector<int> clique{0};
    for (int j = 0; j < s - 1; ++j) clique.push_back(1 + i * (s - 1) + j);
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b)
        edges.emplace_back(clique[a], clique[b]);
  }
  Graph g(n, std::move(edges));
  g.set_label(0, "v");
  return g;
}

Graph clique_chain(int k, int t) {
  require(k >= 2 && t >= 1, "clique_chain: need cliques of size >= 2");
  int n = t * (k - 1) + 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < t; ++i) {
    int base = i * (k - 1);
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) edges.emplace_back(base + a, base + b);
  }
  return Graph(n, std::move(edges));
}

Graph ladder_pw2(int n) {
  require(n >= 2, "ladder_pw2: n must be at least 2");
  require(2 * n <= kMaxVertices, "ladder_pw2: too many vertices");
  auto a = [](int i) { return i - 1; };          // a_1..a_n
  auto b = [n](int i) { return n + i - 1; };     // b_1..b_n
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back(a(i), b(i));
    if (i < n) {
      edges.emplace_back(a(i), a(i + 1));
      edges.emplace_back(b(i), b(i + 1));
      edges.emplace_back(a(i), b(i + 1));
    }
  }
  Graph g(2 * n, std::move(edges));
  for (int i = 1; i <= n; ++i) {
    g.set_label(a(i), "a" + std::to_string(i));
    g.set_label(b(i), "b" + std::to_string(i));
  }
  return g;
}

Graph random_tp(std::uint64_t seed, int steps) {
  require(steps >= 0, "random_tp: steps must be non-negative");
  std::mt19937_64 rng(seed);
  // pool of fragments; each fragment is a list of global vertex ids plus
  // the edges between them
  struct Fragment {
    std::vector<int> vertices;
  };
  std::vector<std::pair<int, int>> edges;
  std::vector<Fragment> pool{Fragment{{0}}};
  int next_id = 1;
  for (int s = 0; s < steps; ++s) {
    int rule = static_cast<int>(rng() % 3);
    if (rule == 0) {
      pool.push_back(Fragment{{next_id++}});
    } else if (rule == 1) {
      // universal vertex over one fragment
      Fragment& f = pool[rng() % pool.size()];
      int u = next_id++;
      for (int v : f.vertices) edges.emplace_back(u, v);
      f.vertices.push_back(u);
    } else if (pool.size() >= 2) {
      // disjoint union of two fragments
      std::size_t i = rng() % pool.size();
      std::size_t j = rng() % (pool.size() - 1);
      if (j >= i) ++j;
      pool[i].vertices.insert(pool[i].vertices.end(), pool[j].vertices.begin(),
                              pool[j].vertices.end());
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    }
  }
  // final universal vertex over everything makes the result connected
  int u = next_id++;
  for (const Fragment& f : pool)
    for (int v : f.vertices) edges.emplace_back(u, v);
  return Graph(next_id, std::move(edges));
}

Graph graph_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("graph spec needs the form name:params");
  std::string name = spec.substr(0, colon);
  std::string params = spec.substr(colon + 1);
  auto parse_ints = [&params](char sep) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= params.size()) {
      std::size_t next = params.find(sep, pos);
      std::string tok = params.substr(pos, next == std::string::npos ? next : next - pos);
      try {
        out.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad number in graph spec: " + tok);
      }
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return out;
  };
  auto one = [&](char sep) {
    auto v = parse_ints(sep);
    if (v.size() != 1) throw std::invalid_argument("spec " + name + " takes one parameter");
    return v[0];
  };
  auto two = [&](char sep) {
    auto v = parse_ints(sep);
    if (v.size() != 2) throw std::invalid_argument("spec " + name + " takes two parameters");
    return std::make_pair(v[0], v[1]);
  };
  if (name == "complete") return complete(one(','));
  if (name == "path") return path(one(','));
  if (name == "cycle") return cycle(one(','));
  if (name == "star") return star(one(','));
  if (name == "split") {
    auto [p, q] = two(',');
    return complete_split(p, q);
  }
  if (name == "bipartite") {
    auto [p, q] = two(',');
    return complete_bipartite(p, q);
  }
  if (name == "gluedcliques") {
    auto [k, s] = two('x');
    return glued_cliques(k, s);
  }
  if (name == "cliquechain") {
    auto [k, t] = two('x');
    return clique_chain(k, t);
  }
  if (name == "ladder") return ladder_pw2(one(','));
  if (name == "randomtp") {
    auto [seed, steps] = two(',');
    return random_tp(static_cast<std::uint64_t>(seed), steps);
  }
  throw std::invalid_argument("unknown graph family: " + name);
}

}  // namespace assoc
