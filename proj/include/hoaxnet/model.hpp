#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hoaxnet/assignment.hpp"
#include "hoaxnet/graph.hpp"
#include "hoaxnet/rng.hpp"

namespace hoaxnet {

struct ClassProbs {
  double p_verify = 0.05;
  double p_forget = 0.10;
};

struct ModelParams {
  double alpha = 0.8;   // hoax credibility
  double beta = 0.5;    // spreading rate
  ClassProbs normal;    // paper baseline: p_v 0.05, p_f 0.1
  ClassProbs scholar;
  ClassProbs influencer;
  int ticks = 168;      // one week of hourly steps

  const ClassProbs& probs_for(AgentClass c) const {
    switch (c) {
      case AgentClass::Scholar: return scholar;
      case AgentClass::Influencer: return influencer;
      default: return normal;  // bots never consult their probabilities
    }
  }

  void validate() const;  // throws on out-of-range values
};

// Per-tick state counts, overall and per class.
struct TickCounts {
  int s = 0, b = 0, f = 0;
  int s_normal = 0, b_normal = 0, f_normal = 0;
  int s_scholar = 0, b_scholar = 0, f_scholar = 0;
  int s_influencer = 0, b_influencer = 0, f_influencer = 0;
  int b_bot = 0, f_bot = 0;
};

struct Trajectory {
  std::vector<TickCounts> series;  // index = tick, length ticks+1
  std::uint64_t seed = 0;

  const TickCounts& final_counts() const { return series.back(); }
};

// Spreading pressure on a susceptible node with n_b believer and n_f
// fact-checker neighbors: (f_B, f_F). Both zero when the neighborhood is
// inactive; otherwise f_B + f_F == beta.
std::pair<double, double> spreading_rates(double alpha, double beta, int n_b,
                                          int n_f);

// One synchronous update: every transition is computed from the tick-t
// state and applied atomically. Draws consume `rng` in ascending node-id
// order, one uniform per non-bot node per tick.
std::vector<State> step(const std::vector<State>& states, const Network& net,
                        const ClassAssignment& assign, const ModelParams& params,
                        Rng& rng);

// Full seeded run: initial states from `rng`, then params.ticks synchronous
// steps, with counts recorded at every tick including tick 0. Believer and
// fact-checker neighbor totals are maintained incrementally as states
// change instead of rescanning adjacency each tick.
Trajectory run(const Network& net, const ClassAssignment& assign,
               const ModelParams& params, double pct_initial_believers,
               Rng& rng);

// Convenience: derives assignment and run from one seed, the unit the
// sweep harness schedules.
Trajectory run_seeded(const Network& net, const Partition& part,
                      std::optional<int> scholar_community, double pct_b_bot,
                      double pct_f_bot, const ModelParams& params,
                      double pct_initial_believers, std::uint64_t seed);

// Time-series table, one row per tick.
void write_trajectory(std::ostream& sink, const Trajectory& trajectory,
                      long long setting_id, int replicate);
extern const char* const kTrajectoryHeader;

}  // namespace hoaxnet
