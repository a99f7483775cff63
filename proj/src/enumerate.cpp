#include "assoc/enumerate.hpp"

#include <unordered_map>

namespace assoc {

namespace {

BigUint count_rec(const Graph& g, VertexSet domain,
                  std::unordered_map<std::uint64_t, BigUint>& memo) {
  if (domain.count() == 1) return BigUint(1);
  if (auto it = memo.find(domain.bits()); it != memo.end()) return it->second;
  BigUint total;
  for (int r : domain) {
    BigUint prod(1);
    for (VertexSet comp : components_within(g, domain.without(r)))
      prod *= count_rec(g, comp, memo);
    total += prod;
  }
  if (memo.size() >= (std::size_t{1} << 24))
    throw CapExceeded("count_search_trees memo table too large", std::size_t{1} << 24);
  memo.emplace(domain.bits(), total);
  return total;
}

struct Enumerator {
  const Graph& g;
  const std::function<void(const SearchTree&)>& fn;
  std::size_t cap;
  std::size_t count = 0;
  std::vector<int> parent;

  // assigns roots for every component of `domains[idx..]`, then emits
  void components(std::vector<VertexSet>& domains, std::size_t idx, int par,
                  const std::function<void()>& done) {
    if (idx == domains.size()) {
      done();
      return;
    }
    piece(domains[idx], par, [&] { components(domains, idx + 1, par, done); });
  }

  void piece(VertexSet domain, int par, const std::function<void()>& done) {
    for (int r : domain) {
      parent[r] = par;
      auto comps = components_within(g, domain.without(r));
      components(comps, 0, r, done);
      parent[r] = -2;
    }
  }

  void run() {
    parent.assign(g.vertex_count(), -2);
    piece(g.vertices(), -1, [&] {
      if (++count > cap) throw CapExceeded("search tree enumeration", cap);
      fn(SearchTree(g, parent));
    });
  }
};

}  // namespace

BigUint count_search_trees(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  std::unordered_map<std::uint64_t, BigUint> memo;
  return count_rec(g, g.vertices(), memo);
}

std::size_t for_each_search_tree(const Graph& g,
                                 const std::function<void(const SearchTree&)>& fn,
                                 std::size_t cap) {
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  Enumerator e{g, fn, cap, 0, {}};
  e.run();
  return e.count;
}

std::vector<SearchTree> enumerate_search_trees(const Graph& g, std::size_t cap) {
  std::vector<SearchTree> out;
  for_each_search_tree(g, [&out](const SearchTree& t) { out.push_back(t); }, cap);
  return out;
}

}  // namespace assoc
