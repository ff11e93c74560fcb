// Deterministic generator for the committed benchmark network: a stand-in
// for the SNAP ego-Facebook graph with the same node count, edge count and
// mean degree, heavy-tailed degrees, and eight planted communities whose
// size fractions follow the clustering reported for that graph. Used where
// the original dataset cannot be redistributed or downloaded.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>

#include "hoaxnet/rng.hpp"

namespace {

using hoaxnet::Rng;

constexpr double kCommunityFractions[8] = {0.0881, 0.132, 0.2213, 0.04,
                                           0.07,   0.10,  0.15,   0.1986};
constexpr double kInternalEdgeShare = 0.95;
constexpr double kParetoShape = 1.5;
constexpr double kWeightCap = 60.0;

struct WeightedPicker {
  std::vector<int> nodes;
  std::vector<double> prefix;  // cumulative weights

  void build(const std::vector<int>& members, const std::vector<double>& weight) {
    nodes = members;
    prefix.resize(nodes.size());
    double total = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      total += weight[nodes[i]];
      prefix[i] = total;
    }
  }

  double total() const { return prefix.back(); }

  int pick(Rng& rng) const {
    const double x = rng.next_double() * total();
    const auto it = std::lower_bound(prefix.begin(), prefix.end(), x);
    return nodes[std::min<std::size_t>(it - prefix.begin(), nodes.size() - 1)];
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generate the deterministic benchmark social graph"};
  std::string out_path;
  int node_count = 4039;
  long long edge_target = 88234;
  std::uint64_t seed = 20230815;
  app.add_option("--out", out_path, "edge list file to write")->required();
  app.add_option("--nodes", node_count, "number of nodes");
  app.add_option("--edges", edge_target, "number of edges");
  app.add_option("--seed", seed, "generator seed");
  CLI11_PARSE(app, argc, argv);

  Rng rng(seed);
  const int n = node_count;

  // planted community sizes, remainder absorbed by the last community
  std::vector<int> sizes;
  int assigned = 0;
  for (int c = 0; c < 7; ++c) {
    sizes.push_back(static_cast<int>(std::lround(kCommunityFractions[c] * n)));
    assigned += sizes.back();
  }
  sizes.push_back(n - assigned);

  std::vector<int> community(n);
  std::vector<std::vector<int>> members(8);
  {
    int v = 0;
    for (int c = 0; c < 8; ++c)
      for (int i = 0; i < sizes[c]; ++i, ++v) {
        community[v] = c;
        members[c].push_back(v);
      }
  }

  // capped Pareto weights give the heavy-tailed degree sequence
  std::vector<double> weight(n);
  for (double& w : weight)
    w = std::min(std::pow(1.0 - rng.next_double(), -1.0 / kParetoShape), kWeightCap);

  std::vector<WeightedPicker> community_picker(8);
  for (int c = 0; c < 8; ++c) community_picker[c].build(members[c], weight);
  WeightedPicker global_picker;
  {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    global_picker.build(all, weight);
  }
  std::vector<double> community_weight_prefix(8);
  {
    double total = 0;
    for (int c = 0; c < 8; ++c) {
      total += community_picker[c].total();
      community_weight_prefix[c] = total;
    }
  }
  auto pick_community = [&] {
    const double x = rng.next_double() * community_weight_prefix.back();
    const auto it = std::lower_bound(community_weight_prefix.begin(),
                                     community_weight_prefix.end(), x);
    return static_cast<int>(
        std::min<std::size_t>(it - community_weight_prefix.begin(), 7));
  };

  std::unordered_set<std::uint64_t> seen;
  std::vector<std::pair<int, int>> edges;
  UnionFind components(n);
  auto add_edge = [&](int a, int b) {
    if (a == b) return false;
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    const std::uint64_t key =
        (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint32_t>(hi);
    if (!seen.insert(key).second) return false;
    edges.emplace_back(lo, hi);
    components.unite(lo, hi);
    return true;
  };

  // every node gets one edge inside its community first
  for (int v = 0; v < n; ++v) {
    const int c = community[v];
    for (int attempt = 0; attempt < 1000; ++attempt)
      if (add_edge(v, community_picker[c].pick(rng))) break;
  }

  // fill almost to target, holding a reserve for connectivity bridges
  const long long reserve = 64;
  while (static_cast<long long>(edges.size()) < edge_target - reserve) {
    if (rng.next_double() < kInternalEdgeShare) {
      const int c = pick_community();
      add_edge(community_picker[c].pick(rng), community_picker[c].pick(rng));
    } else {
      add_edge(global_picker.pick(rng), global_picker.pick(rng));
    }
  }

  // bridge any remaining components into node 0's component
  for (int v = 1; v < n; ++v)
    if (components.find(v) != components.find(0)) add_edge(0, v);

  while (static_cast<long long>(edges.size()) < edge_target)
    add_edge(global_picker.pick(rng), global_picker.pick(rng));

  std::sort(edges.begin(), edges.end());

  std::ofstream out(out_path);
  if (!out) {
    std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
    return 1;
  }
  out << "# benchmark social graph: " << n << " nodes, " << edges.size()
      << " edges, seed " << seed << "\n";
  out << "# planted communities (node ranges):";
  {
    int start = 0;
    for (int c = 0; c < 8; ++c) {
      out << ' ' << start << "-" << (start + sizes[c] - 1);
      start += sizes[c];
    }
    out << "\n";
  }
  for (const auto& [a, b] : edges) out << a << ' ' << b << '\n';

  std::vector<int> degree(n, 0);
  for (const auto& [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  std::printf("nodes=%d edges=%zu mean_degree=%.4f max_degree=%d min_degree=%d\n",
              n, edges.size(),
              2.0 * static_cast<double>(edges.size()) / n,
              *std::max_element(degree.begin(), degree.end()),
              *std::min_element(degree.begin(), degree.end()));
  return 0;
}
