#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "hoaxnet/graph.hpp"
#include "support/util.hpp"

using namespace hoaxnet;

TEST_CASE("two-edge path graph") {
  const Network net = testutil::net_from_text("0 1\n1 2\n");
  CHECK(net.node_count() == 3);
  CHECK(net.edge_count() == 2);
  CHECK(net.degree(0) == 1);
  CHECK(net.degree(1) == 2);
  CHECK(net.degree(2) == 1);
  CHECK(net.is_connected());
}

TEST_CASE("duplicate and reversed edges collapse") {
  const Network net = testutil::net_from_text("0 1\n1 0\n0 1\n1 2\n");
  CHECK(net.edge_count() == 2);
}

TEST_CASE("comments and blank lines are ignored") {
  const Network net = testutil::net_from_text("# header\n\n0 1\n  # indented\n1 2\n");
  CHECK(net.edge_count() == 2);
}

TEST_CASE("sparse ids remap densely in order of first appearance") {
  const Network net = testutil::net_from_text("100 7\n7 42\n");
  CHECK(net.node_count() == 3);
  CHECK(net.original_id(0) == 100);
  CHECK(net.original_id(1) == 7);
  CHECK(net.original_id(2) == 42);
  // adjacency symmetric around the hub (dense id 1)
  CHECK(net.degree(1) == 2);
}

TEST_CASE("malformed line reports its line number") {
  std::istringstream in("0 1\nnot an edge\n");
  CHECK_THROWS_WITH_AS(load_edge_list(in), doctest::Contains("line 2"),
                       std::runtime_error);
}

TEST_CASE("self-loop rejected with line number") {
  std::istringstream in("1 1\n");
  CHECK_THROWS_WITH_AS(load_edge_list(in), doctest::Contains("self-loop at line 1"),
                       std::runtime_error);
}

TEST_CASE("adjacency is symmetric and degrees sum to twice the edges") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Network net = testutil::random_connected_net(30, 40, rng);
    std::size_t degree_sum = 0;
    for (int v = 0; v < net.node_count(); ++v) {
      degree_sum += net.degree(v);
      for (int u : net.neighbors(v)) {
        const auto nbrs = net.neighbors(u);
        CHECK(std::binary_search(nbrs.begin(), nbrs.end(), v));
      }
    }
    CHECK(degree_sum == 2 * net.edge_count());
  }
}

TEST_CASE("save then load round-trips the network") {
  Rng rng(11);
  const Network net = testutil::random_connected_net(25, 30, rng);
  std::ostringstream saved;
  save_edge_list(net, saved);
  const Network reloaded = testutil::net_from_text(saved.str());
  REQUIRE(reloaded.node_count() == net.node_count());
  CHECK(reloaded.edges() == net.edges());
  for (int v = 0; v < net.node_count(); ++v)
    CHECK(reloaded.original_id(v) == net.original_id(v));
}

TEST_CASE("top_fraction_by_degree: zero fraction") {
  const Network net = testutil::net_from_text("0 1\n1 2\n");
  CHECK(top_fraction_by_degree(net, 0.0, {}).empty());
}

TEST_CASE("top_fraction_by_degree: star center wins") {
  const Network star = testutil::net_from_edges({{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(top_fraction_by_degree(star, 0.2, {}) == std::vector<int>{0});
}

TEST_CASE("top_fraction_by_degree matches brute-force sort") {
  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const Network net = testutil::random_connected_net(40, 60, rng);
    const double fraction = static_cast<double>(rng.next_below(101)) / 100.0;
    std::vector<int> excluded;
    for (int v = 0; v < net.node_count(); ++v)
      if (rng.next_double() < 0.2) excluded.push_back(v);

    const std::vector<int> got = top_fraction_by_degree(net, fraction, excluded);

    // oracle: full stable sort by (degree desc, id asc) over non-excluded
    std::vector<int> order;
    for (int v = 0; v < net.node_count(); ++v)
      if (!std::count(excluded.begin(), excluded.end(), v)) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (net.degree(a) != net.degree(b)) return net.degree(a) > net.degree(b);
      return a < b;
    });
    const std::size_t want = std::min<std::size_t>(
        static_cast<std::size_t>(net.node_count() * fraction), order.size());
    std::vector<int> expected(order.begin(), order.begin() + want);
    std::sort(expected.begin(), expected.end());

    CHECK(got == expected);
    for (int v : got)
      CHECK_FALSE(std::count(excluded.begin(), excluded.end(), v));
  }
}
