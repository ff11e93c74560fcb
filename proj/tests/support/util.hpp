#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hoaxnet/graph.hpp"
#include "hoaxnet/rng.hpp"

namespace testutil {

inline hoaxnet::Network net_from_text(const std::string& text) {
  std::istringstream in(text);
  return hoaxnet::load_edge_list(in);
}

inline hoaxnet::Network net_from_edges(
    const std::vector<std::pair<int, int>>& edges) {
  std::ostringstream out;
  for (const auto& [a, b] : edges) out << a << ' ' << b << '\n';
  return net_from_text(out.str());
}

// Connected random graph on n nodes: a random spanning tree plus extra
// random edges. Generator for property tests.
inline hoaxnet::Network random_connected_net(int n, int extra_edges,
                                             hoaxnet::Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng.next_below(v)), v);
  for (int i = 0; i < extra_edges; ++i) {
    const int a = static_cast<int>(rng.next_below(n));
    const int b = static_cast<int>(rng.next_below(n));
    if (a != b) edges.emplace_back(a, b);
  }
  return net_from_edges(edges);
}

}  // namespace testutil
