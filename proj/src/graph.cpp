#include "hoaxnet/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hoaxnet {

Network::Network(int node_count, std::vector<std::pair<int, int>> edges,
                 std::vector<std::int64_t> original_ids)
    : node_count_(node_count),
      edges_(std::move(edges)),
      original_ids_(std::move(original_ids)) {
  adjacency_.resize(node_count_);
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Network::is_connected() const {
  return connected_components().second <= 1;
}

std::pair<std::vector<int>, int> Network::connected_components() const {
  std::vector<int> comp(node_count_, -1);
  std::vector<int> stack;
  int count = 0;
  for (int start = 0; start < node_count_; ++start) {
    if (comp[start] != -1) continue;
    comp[start] = count;
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : adjacency_[v]) {
        if (comp[u] == -1) {
          comp[u] = count;
          stack.push_back(u);
        }
      }
    }
    ++count;
  }
  return {std::move(comp), count};
}

Network load_edge_list(std::istream& source) {
  std::unordered_map<std::int64_t, int> dense_of;
  std::vector<std::int64_t> original_ids;
  std::vector<std::pair<int, int>> edges;
  std::unordered_set<std::uint64_t> seen;

  auto dense = [&](std::int64_t original) {
    auto [it, inserted] = dense_of.try_emplace(original, static_cast<int>(original_ids.size()));
    if (inserted) original_ids.push_back(original);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;

    std::istringstream fields(line);
    std::int64_t a = 0, b = 0;
    std::string trailing;
    if (!(fields >> a >> b) || a < 0 || b < 0 || (fields >> trailing))
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": expected two non-negative integers: '" + line + "'");
    if (a == b)
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": self-loop at line " + std::to_string(line_no));

    const int da = dense(a);
    const int db = dense(b);
    const int lo = std::min(da, db);
    const int hi = std::max(da, db);
    const std::uint64_t key =
        (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint32_t>(hi);
    if (seen.insert(key).second) edges.emplace_back(lo, hi);
  }
  const int node_count = static_cast<int>(original_ids.size());
  return Network(node_count, std::move(edges), std::move(original_ids));
}

Network load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  return load_edge_list(in);
}

void save_edge_list(const Network& net, std::ostream& sink) {
  for (const auto& [a, b] : net.edges())
    sink << net.original_id(a) << ' ' << net.original_id(b) << '\n';
}

std::vector<int> top_fraction_by_degree(const Network& net, double fraction,
                                        const std::vector<int>& excluded) {
  if (fraction < 0.0 || fraction > 1.0)
    throw std::invalid_argument("top_fraction_by_degree: fraction outside [0,1]");

  std::vector<char> is_excluded(net.node_count(), 0);
  for (int v : excluded) is_excluded[v] = 1;

  std::vector<int> candidates;
  candidates.reserve(net.node_count());
  for (int v = 0; v < net.node_count(); ++v)
    if (!is_excluded[v]) candidates.push_back(v);

  const std::size_t want = static_cast<std::size_t>(
      static_cast<double>(net.node_count()) * fraction);
  const std::size_t take = std::min(want, candidates.size());

  std::partial_sort(candidates.begin(), candidates.begin() + take, candidates.end(),
                    [&](int a, int b) {
                      if (net.degree(a) != net.degree(b))
                        return net.degree(a) > net.degree(b);
                      return a < b;
                    });
  candidates.resize(take);
  std::sort(candidates.begin(), candidates.end());
  return candidates;
}

}  // namespace hoaxnet
