#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hoaxnet {

// Immutable undirected graph with dense node ids 0..N-1.
// Safe to share across threads once constructed.
class Network {
 public:
  Network(int node_count, std::vector<std::pair<int, int>> edges,
          std::vector<std::int64_t> original_ids);

  int node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  int degree(int node) const { return static_cast<int>(adjacency_[node].size()); }
  std::span<const int> neighbors(int node) const { return adjacency_[node]; }

  // Edges in input order of first appearance, dense ids, min endpoint first.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Original id of a dense node (identity for already-dense inputs).
  std::int64_t original_id(int node) const { return original_ids_[node]; }

  double mean_degree() const {
    return node_count_ == 0 ? 0.0
                            : 2.0 * static_cast<double>(edges_.size()) / node_count_;
  }

  bool is_connected() const;

  // Component label per node plus component count.
  std::pair<std::vector<int>, int> connected_components() const;

 private:
  int node_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::int64_t> original_ids_;
};

// Parses a SNAP-style edge list: one edge per line, two whitespace-separated
// non-negative integers, '#' lines ignored. Node ids are remapped to dense
// 0..N-1 in order of first appearance; duplicate and reversed-duplicate
// edges collapse to one. Throws std::runtime_error with the offending line
// number on malformed input or self-loops.
Network load_edge_list(std::istream& source);
Network load_edge_list_file(const std::string& path);

// Writes the edge list back out using original ids in first-appearance
// order, so load(save(load(x))) reproduces the same Network.
void save_edge_list(const Network& net, std::ostream& sink);

// The floor(N*fraction) highest-degree nodes not in `excluded`, capped at
// the number of non-excluded nodes. Ties at the cutoff break by ascending
// node id. Result is sorted by ascending node id.
std::vector<int> top_fraction_by_degree(const Network& net, double fraction,
                                        const std::vector<int>& excluded);

}  // namespace hoaxnet
