#include "assoc/flip_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace assoc {

namespace {

std::uint64_t pack_key(const std::string& key) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < key.size(); ++i)
    out |= static_cast<std::uint64_t>(static_cast<unsigned char>(key[i]) & 0xf) << (4 * i);
  return out;
}

// plain BFS over the materialized skeleton; returns eccentricity and the
// farthest node
std::pair<int, int> bfs_ecc(const FlipGraph& fg, int src, std::vector<int>& dist) {
  dist.assign(fg.node_count(), -1);
  std::vector<int> queue;
  queue.reserve(fg.node_count());
  queue.push_back(src);
  dist[src] = 0;
  int far = src;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : fg.neighbors_of(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        if (dist[v] > dist[far]) far = v;
        queue.push_back(v);
      }
    }
  }
  return {dist[far], far};
}

}  // namespace

SearchTree FlipGraph::tree(int id) const {
  std::string key(keys_.begin() + static_cast<std::ptrdiff_t>(id) * n_,
                  keys_.begin() + static_cast<std::ptrdiff_t>(id + 1) * n_);
  return tree_from_key(*source_, key);
}

int FlipGraph::id_of(const SearchTree& t) const {
  if (n_ <= 16) {
    auto it = packed_index_.find(pack_key(t.key()));
    return it == packed_index_.end() ? -1 : it->second;
  }
  auto it = index_.find(t.key());
  return it == index_.end() ? -1 : it->second;
}

FlipGraph build_flip_graph(const Graph& g, std::size_t node_cap) {
  // exact node count first: counting is cheap next to materialization, and
  // the cap error can then report the real size
  BigUint count = count_search_trees(g);
  if (count > BigUint(node_cap))
    throw CapExceeded("flip graph would have " + count.to_string() + " nodes",
                      node_cap);
  const std::size_t expected = count.to_u64();

  // keys + adjacency + index entries, coarsely; refuse anything that would
  // not fit the 8 GiB budget
  constexpr std::size_t kMemoryBudget = std::size_t{8} << 30;
  std::size_t per_node = static_cast<std::size_t>(g.vertex_count()) +
                         4 * static_cast<std::size_t>(g.vertex_count() - 1) + 48;
  if (expected > kMemoryBudget / per_node)
    throw CapExceeded("flip graph with " + std::to_string(expected) +
                          " nodes would blow the memory budget",
                      kMemoryBudget);

  FlipGraph fg;
  fg.source_ = &g;
  fg.n_ = g.vertex_count();
  fg.adjacency_.reserve(expected);
  fg.keys_.reserve(expected * static_cast<std::size_t>(fg.n_));

  auto intern = [&fg](const SearchTree& t) {
    int next = static_cast<int>(fg.adjacency_.size());
    auto record = [&fg, &t] {
      fg.keys_.insert(fg.keys_.end(), t.key().begin(), t.key().end());
      fg.adjacency_.emplace_back();
    };
    if (fg.n_ <= 16) {
      auto [it, fresh] = fg.packed_index_.emplace(pack_key(t.key()), next);
      if (fresh) record();
      return std::pair{it->second, fresh};
    }
    auto [it, fresh] = fg.index_.emplace(t.key(), next);
    if (fresh) record();
    return std::pair{it->second, fresh};
  };

  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  SearchTree seed = from_ordering(g, order);
  std::deque<SearchTree> queue;
  intern(seed);
  queue.push_back(seed);
  while (!queue.empty()) {
    SearchTree t = std::move(queue.front());
    queue.pop_front();
    int tid = fg.id_of(t);
    for (const SearchTree& nb : neighbors(t)) {
      auto [nid, fresh] = intern(nb);
      fg.adjacency_[tid].push_back(nid);
      if (fresh) queue.push_back(nb);
    }
  }
  if (fg.node_count() != expected)
    throw std::logic_error("skeleton closure disagrees with the tree count");
  return fg;
}

std::vector<int> all_eccentricities_serial(const FlipGraph& fg) {
  std::vector<int> ecc(fg.node_count());
  std::vector<int> dist;
  for (std::size_t src = 0; src < fg.node_count(); ++src)
    ecc[src] = bfs_ecc(fg, static_cast<int>(src), dist).first;
  return ecc;
}

std::vector<int> all_eccentricities(const FlipGraph& fg, int threads) {
  std::vector<int> ecc(fg.node_count());
  const int count = static_cast<int>(fg.node_count());
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel
  {
    std::vector<int> dist;
#pragma omp for schedule(dynamic, 16)
    for (int src = 0; src < count; ++src)
      ecc[src] = bfs_ecc(fg, src, dist).first;
  }
#else
  (void)threads;
  std::vector<int> dist;
  for (int src = 0; src < count; ++src) ecc[src] = bfs_ecc(fg, src, dist).first;
#endif
  return ecc;
}

DiameterResult diameter(const FlipGraph& fg, int threads, bool prune) {
  DiameterResult best;
  best.nodes = fg.node_count();
  if (fg.node_count() <= 1) return best;

  // double sweep: BFS from node 0, then from the farthest node found;
  // d0[u] + ecc(far) bounds ecc(u) from above
  std::vector<int> d0;
  int far0 = bfs_ecc(fg, 0, d0).second;
  std::vector<int> dfar;
  auto [ecc_far, opposite] = bfs_ecc(fg, far0, dfar);
  best.diameter = ecc_far;
  best.from = far0;
  best.to = opposite;

  const int count = static_cast<int>(fg.node_count());
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel
  {
    std::vector<int> dist;
    DiameterResult local = best;
#pragma omp for schedule(dynamic, 16)
    for (int src = 0; src < count; ++src) {
      if (prune && dfar[src] + ecc_far <= local.diameter) continue;
      auto [ecc, far] = bfs_ecc(fg, src, dist);
      if (ecc > local.diameter) {
        local.diameter = ecc;
        local.from = src;
        local.to = far;
      }
    }
#pragma omp critical
    {
      if (local.diameter > best.diameter) {
        best.diameter = local.diameter;
        best.from = local.from;
        best.to = local.to;
      }
    }
  }
#else
  (void)threads;
  std::vector<int> dist;
  for (int src = 0; src < count; ++src) {
    if (prune && dfar[src] + ecc_far <= best.diameter) continue;
    auto [ecc, far] = bfs_ecc(fg, src, dist);
    if (ecc > best.diameter) {
      best.diameter = ecc;
      best.from = src;
      best.to = far;
    }
  }
#endif
  return best;
}

DiameterResult diameter(const Graph& g, std::size_t node_cap, int threads) {
  FlipGraph fg = build_flip_graph(g, node_cap);
  return diameter(fg, threads);
}

int eccentricity(const FlipGraph& fg, const SearchTree& t) {
  int id = fg.id_of(t);
  if (id < 0) throw std::invalid_argument("tree is not a node of this flip graph");
  std::vector<int> dist;
  return bfs_ecc(fg, id, dist).first;
}

namespace {

struct BfsLink {
  std::string prev;  // key of the BFS parent
  int child = -1;    // rotation child applied at prev to reach this tree
};

using Frontier = std::vector<std::string>;
using Visited = std::unordered_map<std::string, BfsLink>;

// expands `frontier` one level; returns a meeting key if the other side
// already visited some generated tree
std::string expand(const Graph& g, Frontier& frontier, Visited& mine,
                   const Visited& other, std::size_t visit_cap,
                   std::size_t& touched) {
  Frontier next;
  for (const std::string& key : frontier) {
    SearchTree t = tree_from_key(g, key);
    for (int b = 0; b < g.vertex_count(); ++b) {
      if (b == t.root()) continue;
      SearchTree nb = rotate(t, b);
      if (mine.contains(nb.key())) continue;
      mine.emplace(nb.key(), BfsLink{key, b});
      if (++touched > visit_cap)
        throw CapExceeded("bidirectional search frontier", visit_cap);
      if (other.contains(nb.key())) return nb.key();
      next.push_back(nb.key());
    }
  }
  frontier = std::move(next);
  return {};
}

// key chain from the search root of `side` down to `key`
std::vector<std::string> chain_to(const Visited& side, std::string key) {
  std::vector<std::string> chain{key};
  while (true) {
    const BfsLink& link = side.at(chain.back());
    if (link.child < 0) break;
    chain.push_back(link.prev);
  }
  return chain;
}

}  // namespace

DistanceCertificate distance(const Graph& g, const SearchTree& t1,
                             const SearchTree& t2, std::size_t visit_cap) {
  if (&t1.graph() != &g || &t2.graph() != &g)
    throw std::invalid_argument("trees must live on the argument graph");
  if (t1 == t2) return {0, {}};

  Visited fwd{{t1.key(), {}}}, bwd{{t2.key(), {}}};
  Frontier ffront{t1.key()}, bfront{t2.key()};
  std::size_t touched = 2;
  std::string meet;
  while (meet.empty()) {
    if (ffront.empty() || bfront.empty())
      throw std::logic_error("flip graph should be connected");
    if (ffront.size() <= bfront.size())
      meet = expand(g, ffront, fwd, bwd, visit_cap, touched);
    else
      meet = expand(g, bfront, bwd, fwd, visit_cap, touched);
  }

  // stitch key path t1 -> meet -> t2, then read off rotations
  std::vector<std::string> head = chain_to(fwd, meet);   // meet .. t1
  std::vector<std::string> tail = chain_to(bwd, meet);   // meet .. t2
  std::vector<std::string> keys(head.rbegin(), head.rend());
  keys.insert(keys.end(), tail.begin() + 1, tail.end());

  DistanceCertificate cert;
  cert.distance = static_cast<int>(keys.size()) - 1;
  for (std::size_t i = 0; i + 1 < keys.size(); ++i)
    cert.witness.push_back(
        rotation_between(tree_from_key(g, keys[i]), tree_from_key(g, keys[i + 1])));
  return cert;
}

int distance_via_skeleton(const FlipGraph& fg, const SearchTree& t1,
                          const SearchTree& t2) {
  int a = fg.id_of(t1), b = fg.id_of(t2);
  if (a < 0 || b < 0) throw std::invalid_argument("tree is not a node of this flip graph");
  std::vector<int> dist;
  bfs_ecc(fg, a, dist);
  return dist[b];
}

}  // namespace assoc
