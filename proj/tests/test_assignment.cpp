#include <doctest.h>

#include <algorithm>
#include <set>

#include "hoaxnet/assignment.hpp"
#include "hoaxnet/communities.hpp"
#include "support/util.hpp"

using namespace hoaxnet;

namespace {

int count_class(const ClassAssignment& a, AgentClass c) {
  return static_cast<int>(std::count(a.class_of.begin(), a.class_of.end(), c));
}

}  // namespace

TEST_CASE("class counts follow the floored percentages") {
  Rng rng(5);
  const Network net = testutil::random_connected_net(200, 800, rng);
  const Partition part = fluid_communities(net, 4, 9);

  const ClassAssignment a = assign_classes(net, part, std::nullopt, 2.0, 3.0, 123u);
  CHECK(a.influencer_set.size() == 2);  // floor(200*0.01)
  CHECK(a.bot_pool.size() == 20);       // floor(200*0.10)
  CHECK(a.botB_set.size() == 4);        // floor(200*0.02)
  CHECK(a.botF_set.size() == 6);        // floor(200*0.03)
  CHECK(count_class(a, AgentClass::BotB) == 4);
  CHECK(count_class(a, AgentClass::BotF) == 6);
  CHECK(count_class(a, AgentClass::Scholar) == 0);

  // bots disjoint and inside the pool, pool disjoint from influencers
  std::set<int> botb(a.botB_set.begin(), a.botB_set.end());
  for (int v : a.botF_set) CHECK_FALSE(botb.count(v));
  std::set<int> pool(a.bot_pool.begin(), a.bot_pool.end());
  for (int v : a.botB_set) CHECK(pool.count(v));
  for (int v : a.botF_set) CHECK(pool.count(v));
  for (int v : a.influencer_set) CHECK_FALSE(pool.count(v));
}

TEST_CASE("precedence: bot over influencer over scholar over normal") {
  Rng rng(6);
  const Network net = testutil::random_connected_net(100, 400, rng);
  const Partition part = fluid_communities(net, 2, 3);
  const int scholar_community = 0;
  const ClassAssignment a =
      assign_classes(net, part, scholar_community, 5.0, 5.0, 42u);

  for (int v : a.botB_set) CHECK(a.class_of[v] == AgentClass::BotB);
  for (int v : a.botF_set) CHECK(a.class_of[v] == AgentClass::BotF);
  for (int v : a.influencer_set)
    CHECK((a.class_of[v] == AgentClass::Influencer || is_bot(a.class_of[v])));

  // scholars = community members minus promoted influencers and bots
  int expected_scholars = part.sizes[scholar_community];
  for (int v = 0; v < net.node_count(); ++v)
    if (part.community_of[v] == scholar_community &&
        a.class_of[v] != AgentClass::Scholar)
      --expected_scholars;
  CHECK(count_class(a, AgentClass::Scholar) == expected_scholars);
  for (int v = 0; v < net.node_count(); ++v)
    if (a.class_of[v] == AgentClass::Scholar)
      CHECK(part.community_of[v] == scholar_community);
}

TEST_CASE("bot demand beyond the pool is rejected with both numbers") {
  Rng rng(8);
  const Network net = testutil::random_connected_net(100, 300, rng);
  const Partition part = fluid_communities(net, 2, 1);
  CHECK_THROWS_WITH_AS(assign_classes(net, part, std::nullopt, 8.0, 8.0, 1u),
                       doctest::Contains("16 bots requested"),
                       std::invalid_argument);
}

TEST_CASE("invalid scholar community rejected") {
  Rng rng(8);
  const Network net = testutil::random_connected_net(30, 60, rng);
  const Partition part = fluid_communities(net, 2, 1);
  CHECK_THROWS_AS(assign_classes(net, part, 5, 0.0, 0.0, 1u),
                  std::invalid_argument);
}

TEST_CASE("assignment is deterministic in the seed") {
  Rng rng(10);
  const Network net = testutil::random_connected_net(150, 500, rng);
  const Partition part = fluid_communities(net, 3, 2);
  const ClassAssignment a = assign_classes(net, part, 1, 4.0, 4.0, 777u);
  const ClassAssignment b = assign_classes(net, part, 1, 4.0, 4.0, 777u);
  CHECK(a.class_of == b.class_of);
  const ClassAssignment c = assign_classes(net, part, 1, 4.0, 4.0, 778u);
  CHECK(a.class_of != c.class_of);  // different draws with overwhelming odds
}

TEST_CASE("initialize_states: boundary percentages") {
  Rng rng(12);
  const Network net = testutil::random_connected_net(50, 100, rng);
  const Partition part = fluid_communities(net, 1, 0);
  const ClassAssignment a = assign_classes(net, part, std::nullopt, 0.0, 0.0, 3u);

  Rng draw0(1);
  const auto all_s = initialize_states(a, 0.0, draw0);
  CHECK(std::count(all_s.begin(), all_s.end(), State::S) == 50);

  Rng draw100(1);
  const auto all_b = initialize_states(a, 100.0, draw100);
  CHECK(std::count(all_b.begin(), all_b.end(), State::B) == 50);
}

TEST_CASE("initialize_states: believer count is floored and bots stay pinned") {
  Rng rng(14);
  const Network net = testutil::random_connected_net(200, 700, rng);
  const Partition part = fluid_communities(net, 1, 0);
  const ClassAssignment a = assign_classes(net, part, std::nullopt, 3.0, 3.0, 5u);

  Rng draw(9);
  const auto states = initialize_states(a, 10.0, draw);
  for (int v : a.botB_set) CHECK(states[v] == State::B);
  for (int v : a.botF_set) CHECK(states[v] == State::F);
  // floor(200*0.10)=20 sampled believers on top of 6 believer bots
  CHECK(std::count(states.begin(), states.end(), State::B) == 26);
  CHECK(std::count(states.begin(), states.end(), State::F) == 6);
}
