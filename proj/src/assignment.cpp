#include "hoaxnet/assignment.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hoaxnet {

ClassAssignment assign_classes(const Network& net, const Partition& part,
                               std::optional<int> scholar_community,
                               double pct_b_bot, double pct_f_bot, Rng& rng) {
  const int n = net.node_count();
  if (part.node_count() != n)
    throw std::invalid_argument("assign_classes: partition/network size mismatch");
  if (scholar_community && (*scholar_community < 0 || *scholar_community >= part.k))
    throw std::invalid_argument("assign_classes: invalid scholar community id " +
                                std::to_string(*scholar_community));
  if (pct_b_bot < 0 || pct_f_bot < 0 || pct_b_bot > 100 || pct_f_bot > 100)
    throw std::invalid_argument("assign_classes: bot percentage outside [0,100]");

  ClassAssignment a;
  a.scholar_community = scholar_community;
  a.influencer_set = top_fraction_by_degree(net, 0.01, {});
  a.bot_pool = top_fraction_by_degree(net, 0.10, a.influencer_set);

  const std::size_t want_b = static_cast<std::size_t>(n * pct_b_bot / 100.0);
  const std::size_t want_f = static_cast<std::size_t>(n * pct_f_bot / 100.0);
  if (want_b + want_f > a.bot_pool.size())
    throw std::invalid_argument(
        "assign_classes: " + std::to_string(want_b + want_f) +
        " bots requested but the super-spreader pool has only " +
        std::to_string(a.bot_pool.size()) + " nodes");

  std::vector<int> drawn = sample_without_replacement(a.bot_pool, want_b + want_f, rng);
  a.botB_set.assign(drawn.begin(), drawn.begin() + want_b);
  a.botF_set.assign(drawn.begin() + want_b, drawn.end());
  std::sort(a.botB_set.begin(), a.botB_set.end());
  std::sort(a.botF_set.begin(), a.botF_set.end());

  a.class_of.assign(n, AgentClass::Normal);
  if (scholar_community)
    for (int v = 0; v < n; ++v)
      if (part.community_of[v] == *scholar_community)
        a.class_of[v] = AgentClass::Scholar;
  for (int v : a.influencer_set) a.class_of[v] = AgentClass::Influencer;
  for (int v : a.botB_set) a.class_of[v] = AgentClass::BotB;
  for (int v : a.botF_set) a.class_of[v] = AgentClass::BotF;
  return a;
}

ClassAssignment assign_classes(const Network& net, const Partition& part,
                               std::optional<int> scholar_community,
                               double pct_b_bot, double pct_f_bot,
                               std::uint64_t seed) {
  Rng rng(seed);
  return assign_classes(net, part, scholar_community, pct_b_bot, pct_f_bot, rng);
}

std::vector<State> initialize_states(const ClassAssignment& assign,
                                     double pct_initial_believers, Rng& rng) {
  if (pct_initial_believers < 0 || pct_initial_believers > 100)
    throw std::invalid_argument("initialize_states: percentage outside [0,100]");

  const int n = assign.node_count();
  std::vector<State> state(n, State::S);
  std::vector<int> non_bots;
  non_bots.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (assign.class_of[v] == AgentClass::BotB) state[v] = State::B;
    else if (assign.class_of[v] == AgentClass::BotF) state[v] = State::F;
    else non_bots.push_back(v);
  }

  const std::size_t want = static_cast<std::size_t>(n * pct_initial_believers / 100.0);
  const std::size_t take = std::min(want, non_bots.size());
  for (int v : sample_without_replacement(std::move(non_bots), take, rng))
    state[v] = State::B;
  return state;
}

}  // namespace hoaxnet
