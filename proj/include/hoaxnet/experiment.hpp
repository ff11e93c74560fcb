#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hoaxnet/communities.hpp"
#include "hoaxnet/graph.hpp"
#include "hoaxnet/model.hpp"

namespace hoaxnet {

// One point of the parameter grid. setting_id is the 0-based index in the
// documented expansion order (alpha outermost, pct_f_bot innermost).
struct Setting {
  long long setting_id = 0;
  double alpha = 0.8;
  double beta = 0.5;
  double pct_initial_believers = 10.0;
  std::optional<int> scholar_community;
  double pv_scholar = 0.05;
  double pf_scholar = 0.10;
  double pv_influencer = 0.05;
  double pf_influencer = 0.10;
  double pct_b_bot = 0.0;
  double pct_f_bot = 0.0;

  ModelParams model_params(int ticks) const;
};

// Per-parameter value lists plus the replicate protocol.
struct SweepSpec {
  std::vector<double> alpha{0.8};
  std::vector<double> beta{0.5};
  std::vector<double> pct_initial_believers{10.0};
  std::vector<std::optional<int>> scholar_community{std::nullopt};
  std::vector<double> pv_scholar{0.05};
  std::vector<double> pf_scholar{0.10};
  std::vector<double> pv_influencer{0.05};
  std::vector<double> pf_influencer{0.10};
  std::vector<double> pct_b_bot{0.0};
  std::vector<double> pct_f_bot{0.0};
  int replicates = 4;
  int ticks = 168;
  std::uint64_t base_seed = 0;

  std::size_t setting_count() const;
  std::size_t run_count() const { return setting_count() * replicates; }
  void validate() const;  // throws naming the offending parameter
};

struct RunResult {
  Setting setting;
  int replicate = 0;
  std::uint64_t seed = 0;
  int final_s = 0, final_b = 0, final_f = 0;
  std::optional<Trajectory> trajectory;  // kept only when requested
};

struct SettingSummary {
  Setting setting;
  double mean_s = 0, std_s = 0;
  double mean_b = 0, std_b = 0;
  double mean_f = 0, std_f = 0;
};

struct Scenario {
  std::string name;
  Setting setting;
};

struct ScenarioResult {
  std::string name;
  Setting setting;
  double mean_s = 0, mean_b = 0, mean_f = 0;
  // mean replicate series per tick, states S/B/F
  std::vector<std::array<double, 3>> series;
};

// Cartesian product in documented parameter order; deterministic.
std::vector<Setting> expand_grid(const SweepSpec& spec);

// SplitMix-style avalanche over (base_seed, setting_id, replicate).
// Collision-free in practice across the full grid x replicate range.
std::uint64_t derive_seed(std::uint64_t base_seed, long long setting_id,
                          int replicate);

// Executes every (setting, replicate) run on a bounded worker pool. The
// partition is fixed for the whole sweep; class assignment and initial
// states are re-drawn per run from the derived seed. Output order is
// (setting_id, replicate) regardless of `jobs`.
std::vector<RunResult> run_sweep(const SweepSpec& spec, const Network& net,
                                 const Partition& part, int jobs = 1,
                                 bool keep_series = false);

// Per-setting per-state mean and sample (n-1) standard deviation of final
// counts. Order-insensitive; throws when a setting misses a replicate.
std::vector<SettingSummary> aggregate(const std::vector<RunResult>& results);

// Runs each fully specified scenario with `replicates` seeded runs and
// returns mean final counts plus the mean per-tick series.
std::vector<ScenarioResult> scenario_compare(const std::vector<Scenario>& scenarios,
                                             const Network& net,
                                             const Partition& part,
                                             int replicates, int ticks,
                                             std::uint64_t base_seed,
                                             int jobs = 1);

// Line-oriented spec files: `name = v1, v2, v3`, '#' comments,
// `scholar_community` accepts `none` or a community id. The scenario
// variant uses single values with one `[name]` section per scenario;
// lines before the first section set shared defaults.
SweepSpec parse_sweep_spec(std::istream& source);
SweepSpec parse_sweep_spec_file(const std::string& path);
std::vector<Scenario> parse_scenarios(std::istream& source, SweepSpec& shared);
std::vector<Scenario> parse_scenarios_file(const std::string& path,
                                           SweepSpec& shared);

// CSV writers/readers for the documented result schemas.
void write_results_csv(std::ostream& sink, const std::vector<RunResult>& results);
std::vector<RunResult> read_results_csv(std::istream& source);
void write_summary_csv(std::ostream& sink,
                       const std::vector<SettingSummary>& summaries);
void write_comparison_csv(std::ostream& sink,
                          const std::vector<ScenarioResult>& results,
                          int node_count);

// Plot-ready extracts for the batch figures.
void write_sensitivity_table(std::ostream& sink,
                             const std::vector<SettingSummary>& summaries);
void write_scholar_size_table(std::ostream& sink,
                              const std::vector<SettingSummary>& summaries);
void write_bot_grid_table(std::ostream& sink,
                          const std::vector<SettingSummary>& summaries);
void write_scenario_series_table(std::ostream& sink,
                                 const std::vector<ScenarioResult>& results);

std::string format_scholar_community(const std::optional<int>& community);

}  // namespace hoaxnet
