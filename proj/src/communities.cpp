#include "hoaxnet/communities.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hoaxnet/rng.hpp"

namespace hoaxnet {

void Partition::validate() const {
  if (k <= 0) throw std::runtime_error("partition: k must be positive");
  if (static_cast<int>(sizes.size()) != k)
    throw std::runtime_error("partition: sizes/k mismatch");
  std::vector<int> counted(k, 0);
  for (int v = 0; v < node_count(); ++v) {
    const int c = community_of[v];
    if (c < 0 || c >= k)
      throw std::runtime_error("partition: node " + std::to_string(v) +
                               " has community id " + std::to_string(c) +
                               " outside 0.." + std::to_string(k - 1));
    ++counted[c];
  }
  for (int c = 0; c < k; ++c) {
    if (counted[c] != sizes[c])
      throw std::runtime_error("partition: recorded size of community " +
                               std::to_string(c) + " is wrong");
    if (counted[c] == 0)
      throw std::runtime_error("partition: community " + std::to_string(c) +
                               " is empty");
  }
}

namespace {

// Relabel communities by ascending smallest member node id, so the same
// clustering always gets the same labels regardless of seeding order.
void canonicalize(Partition& p) {
  std::vector<int> first_member(p.k, p.node_count());
  for (int v = 0; v < p.node_count(); ++v)
    first_member[p.community_of[v]] = std::min(first_member[p.community_of[v]], v);

  std::vector<int> order(p.k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return first_member[a] < first_member[b]; });

  std::vector<int> new_label(p.k);
  for (int rank = 0; rank < p.k; ++rank) new_label[order[rank]] = rank;

  std::vector<int> new_sizes(p.k);
  for (int c = 0; c < p.k; ++c) new_sizes[new_label[c]] = p.sizes[c];
  for (int& c : p.community_of) c = new_label[c];
  p.sizes = std::move(new_sizes);
}

}  // namespace

Partition fluid_communities(const Network& net, int k, std::uint64_t seed,
                            int max_sweeps) {
  const int n = net.node_count();
  if (k < 1 || k > n)
    throw std::invalid_argument("fluid_communities: k=" + std::to_string(k) +
                                " outside 1.." + std::to_string(n));
  if (auto [comp, count] = net.connected_components(); count > 1) {
    int other = -1;
    for (int v = 0; v < n && other < 0; ++v)
      if (comp[v] != comp[0]) other = v;
    throw std::runtime_error(
        "fluid_communities: graph is disconnected (node 0 and node " +
        std::to_string(other) + " lie in different components)");
  }

  Rng rng(seed);
  Partition p;
  p.k = k;
  p.community_of.assign(n, -1);
  p.sizes.assign(k, 0);

  std::vector<int> all_nodes(n);
  std::iota(all_nodes.begin(), all_nodes.end(), 0);
  const std::vector<int> seeds =
      sample_without_replacement(all_nodes, static_cast<std::size_t>(k), rng);
  for (int c = 0; c < k; ++c) {
    p.community_of[seeds[c]] = c;
    p.sizes[c] = 1;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> score(k, 0.0);
  std::vector<int> touched;
  std::vector<int> maximizers;

  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    // fresh shuffle each sweep
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
      std::swap(order[i], order[j]);
    }

    int changes = 0;
    for (const int v : order) {
      const int current = p.community_of[v];
      if (current != -1 && p.sizes[current] == 1) continue;  // would empty it

      touched.clear();
      auto add = [&](int c) {
        if (score[c] == 0.0) touched.push_back(c);
        score[c] += 1.0 / static_cast<double>(p.sizes[c]);
      };
      if (current != -1) add(current);
      for (const int u : net.neighbors(v)) {
        const int c = p.community_of[u];
        if (c != -1) add(c);
      }
      if (touched.empty()) continue;  // no community in reach yet

      double best = 0.0;
      for (const int c : touched) best = std::max(best, score[c]);
      const double cut = best - 1e-12;
      maximizers.clear();
      bool current_is_max = false;
      for (const int c : touched) {
        if (score[c] >= cut) {
          maximizers.push_back(c);
          if (c == current) current_is_max = true;
        }
        score[c] = 0.0;
      }

      if (current_is_max) continue;
      const int chosen =
          maximizers[maximizers.size() == 1
                         ? 0
                         : static_cast<std::size_t>(rng.next_below(maximizers.size()))];
      if (current != -1) --p.sizes[current];
      p.community_of[v] = chosen;
      ++p.sizes[chosen];
      ++changes;
    }
    converged = (changes == 0);
  }

  p.converged = converged;
  canonicalize(p);
  p.validate();
  return p;
}

void save_partition(const Partition& partition, std::ostream& sink) {
  sink << "node_id,community_id\n";
  for (int v = 0; v < partition.node_count(); ++v)
    sink << v << ',' << partition.community_of[v] << '\n';
}

Partition load_partition(std::istream& source, int expected_nodes) {
  std::string line;
  if (!std::getline(source, line) ||
      line.find("node_id,community_id") != 0)
    throw std::runtime_error("partition file: missing node_id,community_id header");

  std::vector<std::pair<int, int>> rows;
  std::size_t line_no = 1;
  while (std::getline(source, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    int node = -1, community = -1;
    char comma = 0;
    if (!(fields >> node >> comma >> community) || comma != ',' || node < 0 ||
        community < 0)
      throw std::runtime_error("partition file line " + std::to_string(line_no) +
                               ": expected 'node_id,community_id': '" + line + "'");
    rows.emplace_back(node, community);
  }
  if (rows.empty()) throw std::runtime_error("partition file: no assignments");

  int n = 0;
  for (const auto& [node, community] : rows) n = std::max(n, node + 1);
  if (expected_nodes >= 0) n = std::max(n, expected_nodes);

  Partition p;
  p.community_of.assign(n, -1);
  for (const auto& [node, community] : rows) {
    if (p.community_of[node] != -1)
      throw std::runtime_error("partition file: node " + std::to_string(node) +
                               " assigned twice");
    p.community_of[node] = community;
    p.k = std::max(p.k, community + 1);
  }
  for (int v = 0; v < n; ++v)
    if (p.community_of[v] == -1)
      throw std::runtime_error("partition file: node " + std::to_string(v) +
                               " unassigned");
  if (expected_nodes >= 0 && n != expected_nodes)
    throw std::runtime_error("partition file: covers " + std::to_string(n) +
                             " nodes, expected " + std::to_string(expected_nodes));

  p.sizes.assign(p.k, 0);
  for (const int c : p.community_of) ++p.sizes[c];
  p.validate();
  return p;
}

Partition load_partition_file(const std::string& path, int expected_nodes) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open partition file: " + path);
  return load_partition(in, expected_nodes);
}

void save_partition_file(const Partition& partition, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write partition file: " + path);
  save_partition(partition, out);
}

}  // namespace hoaxnet
