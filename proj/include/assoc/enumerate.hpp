#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "assoc/bigint.hpp"
#include "assoc/graph.hpp"
#include "assoc/search_tree.hpp"

namespace assoc {

// Hard limits raise this instead of silently truncating; a wrong "exact"
// answer is worse than no answer.
struct CapExceeded : std::runtime_error {
  CapExceeded(const std::string& what, std::size_t limit)
      : std::runtime_error(what + " (cap " + std::to_string(limit) + ")"),
        limit(limit) {}
  std::size_t limit;
};

inline constexpr std::size_t kDefaultEnumCap = 5'000'000;

// Exact number of search trees on g (the graph Catalan number), by
// recursive root choice with memoization on connected vertex subsets.
BigUint count_search_trees(const Graph& g);

// Visits each search tree exactly once. Returns the number visited; stops
// with CapExceeded beyond the cap.
std::size_t for_each_search_tree(const Graph& g,
                                 const std::function<void(const SearchTree&)>& fn,
                                 std::size_t cap = kDefaultEnumCap);

std::vector<SearchTree> enumerate_search_trees(const Graph& g,
                                               std::size_t cap = kDefaultEnumCap);

}  // namespace assoc
