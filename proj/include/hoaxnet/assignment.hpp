#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hoaxnet/communities.hpp"
#include "hoaxnet/graph.hpp"
#include "hoaxnet/rng.hpp"

namespace hoaxnet {

enum class AgentClass : std::uint8_t { Normal, Scholar, Influencer, BotB, BotF };
enum class State : std::uint8_t { S, B, F };

constexpr int kAgentClassCount = 5;

inline bool is_bot(AgentClass c) {
  return c == AgentClass::BotB || c == AgentClass::BotF;
}

// Per-node agent classes for one run. Influencers are the top 1% of nodes
// by degree; bots are drawn from the top 10% by degree excluding the
// influencers. Precedence on overlap: Bot > Influencer > Scholar > Normal.
struct ClassAssignment {
  std::vector<AgentClass> class_of;
  std::optional<int> scholar_community;
  std::vector<int> influencer_set;
  std::vector<int> bot_pool;
  std::vector<int> botB_set;
  std::vector<int> botF_set;

  int node_count() const { return static_cast<int>(class_of.size()); }
};

// Draws bot sets with `rng` and resolves every node's class. Percentages
// are percent of the whole network, floored to whole agents. Throws when
// the bot demand exceeds the pool or scholar_community is invalid.
ClassAssignment assign_classes(const Network& net, const Partition& part,
                               std::optional<int> scholar_community,
                               double pct_b_bot, double pct_f_bot, Rng& rng);

ClassAssignment assign_classes(const Network& net, const Partition& part,
                               std::optional<int> scholar_community,
                               double pct_b_bot, double pct_f_bot,
                               std::uint64_t seed);

// Initial states at tick 0: bots pinned to their state, floor(N*pct/100)
// believers sampled uniformly from the non-bot nodes, everyone else S.
std::vector<State> initialize_states(const ClassAssignment& assign,
                                     double pct_initial_believers, Rng& rng);

}  // namespace hoaxnet
