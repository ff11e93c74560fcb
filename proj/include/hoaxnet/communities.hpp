#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hoaxnet/graph.hpp"

namespace hoaxnet {

// Node -> community map with k non-empty communities. Community ids are
// canonical: ascending order of each community's smallest member node.
struct Partition {
  std::vector<int> community_of;
  int k = 0;
  std::vector<int> sizes;
  bool converged = true;

  int node_count() const { return static_cast<int>(community_of.size()); }
  void validate() const;  // throws on any violated invariant
};

// Asynchronous fluid communities (Pares et al.): k seed nodes each found a
// community of density 1/size; vertices are swept in a freshly shuffled
// order and move to the community maximizing the density sum over the
// vertex and its neighbors. A vertex never leaves a community it would
// empty; ties keep the current community when it is maximal, otherwise
// break uniformly at random. Stops on a sweep with no change, or flags the
// partition non-converged after max_sweeps.
//
// Requires a connected graph and 1 <= k <= N; throws otherwise.
Partition fluid_communities(const Network& net, int k, std::uint64_t seed,
                            int max_sweeps = 100);

// Text format: header "node_id,community_id", one pair per line, nodes in
// ascending id order. load validates all Partition invariants and, when
// expected_nodes >= 0, that the file covers exactly that many nodes.
void save_partition(const Partition& partition, std::ostream& sink);
Partition load_partition(std::istream& source, int expected_nodes = -1);
Partition load_partition_file(const std::string& path, int expected_nodes = -1);
void save_partition_file(const Partition& partition, const std::string& path);

}  // namespace hoaxnet
