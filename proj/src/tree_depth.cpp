#include "assoc/tree_depth.hpp"

#include <algorithm>
#include <unordered_map>

#include "assoc/enumerate.hpp"

namespace assoc {

namespace {

int td_rec(const Graph& g, VertexSet domain,
           std::unordered_map<std::uint64_t, int>& memo) {
  if (domain.count() == 1) return 1;
  if (auto it = memo.find(domain.bits()); it != memo.end()) return it->second;
  int best = domain.count();  // chain is always achievable
  for (int r : domain) {
    int worst = 0;
    for (VertexSet comp : components_within(g, domain.without(r)))
      worst = std::max(worst, td_rec(g, comp, memo));
    best = std::min(best, 1 + worst);
  }
  memo.emplace(domain.bits(), best);
  return best;
}

}  // namespace

int tree_depth(const Graph& g, int cap_n) {
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  if (g.vertex_count() > cap_n)
    throw CapExceeded("tree_depth vertex count", static_cast<std::size_t>(cap_n));
  std::unordered_map<std::uint64_t, int> memo;
  return td_rec(g, g.vertices(), memo);
}

}  // namespace assoc
