#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "assoc/enumerate.hpp"
#include "assoc/graph.hpp"
#include "assoc/search_tree.hpp"

namespace assoc {

inline constexpr std::size_t kDefaultNodeCap = 5'000'000;

// Materialized skeleton of the graph associahedron: one node per search
// tree, one edge per rotation. Every node has degree n-1 and the skeleton
// is connected.
class FlipGraph {
public:
  const Graph& source() const { return *source_; }
  std::size_t node_count() const { return adjacency_.size(); }
  const std::vector<int>& neighbors_of(int id) const { return adjacency_[id]; }

  SearchTree tree(int id) const;
  int id_of(const SearchTree& t) const;  // -1 when absent

private:
  friend FlipGraph build_flip_graph(const Graph& g, std::size_t node_cap);

  const Graph* source_ = nullptr;
  int n_ = 0;
  std::vector<char> keys_;  // node i's canonical key at [i*n, (i+1)*n)
  std::vector<std::vector<int>> adjacency_;
  // n <= 16 packs keys into one word (4 bits per parent slot); larger
  // graphs fall back to string keys
  std::unordered_map<std::uint64_t, int> packed_index_;
  std::unordered_map<std::string, int> index_;
};

// Breadth-first closure under rotations starting from one tree. Throws
// CapExceeded (with the running count) past node_cap.
FlipGraph build_flip_graph(const Graph& g, std::size_t node_cap = kDefaultNodeCap);

// All-sources BFS eccentricities. The OpenMP variant splits sources over
// threads (0 = hardware default); results are identical to the serial
// reference, which the tests compare against.
std::vector<int> all_eccentricities_serial(const FlipGraph& fg);
std::vector<int> all_eccentricities(const FlipGraph& fg, int threads = 0);

struct DiameterResult {
  int diameter = 0;
  int from = 0;  // node ids of an antipodal pair
  int to = 0;
  std::size_t nodes = 0;
};

// Exact diameter by BFS from every node. Double-sweep pruning skips
// sources whose eccentricity upper bound cannot beat the best found so
// far; exactness is preserved.
DiameterResult diameter(const FlipGraph& fg, int threads = 0, bool prune = true);
DiameterResult diameter(const Graph& g, std::size_t node_cap = kDefaultNodeCap,
                        int threads = 0);

int eccentricity(const FlipGraph& fg, const SearchTree& t);

struct DistanceCertificate {
  int distance = 0;
  RotationSequence witness;  // replays from t1 to t2
};

// Exact rotation distance by bidirectional BFS generating neighbors on
// the fly; no full skeleton needed. visit_cap bounds the total number of
// distinct trees touched.
DistanceCertificate distance(const Graph& g, const SearchTree& t1,
                             const SearchTree& t2,
                             std::size_t visit_cap = kDefaultNodeCap);

// single-source oracle used to cross-check the bidirectional search
int distance_via_skeleton(const FlipGraph& fg, const SearchTree& t1,
                          const SearchTree& t2);

}  // namespace assoc
