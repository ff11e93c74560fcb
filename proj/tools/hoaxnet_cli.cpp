// hoaxnet: seeded simulator and sweep harness for the four-class
// susceptible/believer/fact-checker diffusion model on a fixed social graph.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hoaxnet/assignment.hpp"
#include "hoaxnet/communities.hpp"
#include "hoaxnet/experiment.hpp"
#include "hoaxnet/graph.hpp"
#include "hoaxnet/model.hpp"

namespace {

using namespace hoaxnet;

int default_jobs() {
  if (const char* env = std::getenv("HOAXNET_JOBS")) {
    const int jobs = std::atoi(env);
    if (jobs >= 1) return jobs;
  }
  return 1;
}

// Writes through a callback; a failed write never leaves a partial file.
void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    try {
      body(out);
    } catch (...) {
      out.close();
      std::filesystem::remove(path);
      throw;
    }
    if (!out) {
      out.close();
      std::filesystem::remove(path);
      throw std::runtime_error("write failed: " + path);
    }
  }
}

std::optional<int> community_arg(const std::string& text) {
  if (text == "none") return std::nullopt;
  return std::stoi(text);
}

struct SimulateArgs {
  std::string graph, partition, out;
  std::string scholar_community = "none";
  double alpha = 0.8, beta = 0.5, pct_initial_believers = 10.0;
  double pv_scholar = 0.05, pf_scholar = 0.10;
  double pv_influencer = 0.05, pf_influencer = 0.10;
  double pct_b_bot = 0.0, pct_f_bot = 0.0;
  int ticks = 168;
  std::uint64_t seed = 0;
};

void add_model_flags(CLI::App* cmd, SimulateArgs& a) {
  cmd->add_option("--alpha", a.alpha, "hoax credibility in [0,1]");
  cmd->add_option("--beta", a.beta, "spreading rate in [0,1]");
  cmd->add_option("--pct-initial-believers", a.pct_initial_believers,
                  "percent of agents starting as believers");
  cmd->add_option("--scholar-community", a.scholar_community,
                  "community id assigned to scholars, or 'none'");
  cmd->add_option("--pv-scholar", a.pv_scholar, "scholar verify probability");
  cmd->add_option("--pf-scholar", a.pf_scholar, "scholar forget probability");
  cmd->add_option("--pv-influencer", a.pv_influencer, "influencer verify probability");
  cmd->add_option("--pf-influencer", a.pf_influencer, "influencer forget probability");
  cmd->add_option("--pct-b-bot", a.pct_b_bot, "percent of agents that are believer bots");
  cmd->add_option("--pct-f-bot", a.pct_f_bot, "percent of agents that are fact-checker bots");
}

int run_cli(int argc, char** argv) {
  CLI::App app{"four-class hoax diffusion simulator and sweep harness"};
  app.require_subcommand(1);

  // validate
  std::string graph_path;
  auto* validate = app.add_subcommand("validate", "check an edge-list file and print its stats");
  validate->add_option("--graph", graph_path, "edge list file")->required();
  validate->callback([&] {
    const Network net = load_edge_list_file(graph_path);
    std::printf("nodes=%d edges=%zu mean_degree=%.4f connected=%s\n",
                net.node_count(), net.edge_count(), net.mean_degree(),
                net.is_connected() ? "true" : "false");
  });

  // cluster
  struct {
    std::string graph, out;
    int k = 8;
    std::uint64_t seed = 0;
    int max_sweeps = 100;
  } cluster_args;
  auto* cluster = app.add_subcommand("cluster", "partition the graph with fluid communities");
  cluster->add_option("--graph", cluster_args.graph, "edge list file")->required();
  cluster->add_option("--k", cluster_args.k, "number of communities")->required();
  cluster->add_option("--seed", cluster_args.seed, "clustering seed");
  cluster->add_option("--max-sweeps", cluster_args.max_sweeps, "sweep bound");
  cluster->add_option("--out", cluster_args.out, "partition file to write")->required();
  cluster->callback([&] {
    const Network net = load_edge_list_file(cluster_args.graph);
    const Partition p = fluid_communities(net, cluster_args.k, cluster_args.seed,
                                          cluster_args.max_sweeps);
    write_file(cluster_args.out, [&](std::ostream& out) {
      save_partition(p, out);
      out << "# seed=" << cluster_args.seed << '\n';
    });
    std::printf("k=%d converged=%s seed=%llu\n", p.k, p.converged ? "true" : "false",
                static_cast<unsigned long long>(cluster_args.seed));
    for (int c = 0; c < p.k; ++c)
      std::printf("community %d: %d nodes (%.2f%%)\n", c, p.sizes[c],
                  100.0 * p.sizes[c] / net.node_count());
  });

  // simulate
  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "one seeded run, full time series");
  simulate->add_option("--graph", sim.graph, "edge list file")->required();
  simulate->add_option("--partition", sim.partition, "partition file")->required();
  add_model_flags(simulate, sim);
  simulate->add_option("--ticks", sim.ticks, "number of update steps");
  simulate->add_option("--seed", sim.seed, "run seed");
  simulate->add_option("--out", sim.out, "time-series file to write")->required();
  simulate->callback([&] {
    const Network net = load_edge_list_file(sim.graph);
    const Partition part = load_partition_file(sim.partition, net.node_count());
    ModelParams params;
    params.alpha = sim.alpha;
    params.beta = sim.beta;
    params.scholar = {sim.pv_scholar, sim.pf_scholar};
    params.influencer = {sim.pv_influencer, sim.pf_influencer};
    params.ticks = sim.ticks;
    params.validate();
    const Trajectory traj = run_seeded(
        net, part, community_arg(sim.scholar_community), sim.pct_b_bot,
        sim.pct_f_bot, params, sim.pct_initial_believers, sim.seed);
    write_file(sim.out, [&](std::ostream& out) {
      write_trajectory(out, traj, 0, 0);
      out << "# seed=" << sim.seed << '\n';
    });
    const TickCounts& final = traj.final_counts();
    std::printf("ticks=%d final S=%d B=%d F=%d seed=%llu\n", sim.ticks, final.s,
                final.b, final.f, static_cast<unsigned long long>(sim.seed));
  });

  // sweep
  struct {
    std::string graph, partition, spec, out_dir;
    int jobs = default_jobs();
    std::optional<int> replicates, ticks;
    std::optional<std::uint64_t> seed;
  } sweep_args;
  auto* sweep = app.add_subcommand("sweep", "run a parameter grid with replicates");
  sweep->add_option("--graph", sweep_args.graph, "edge list file")->required();
  sweep->add_option("--partition", sweep_args.partition, "partition file")->required();
  sweep->add_option("--spec", sweep_args.spec, "sweep spec file")->required();
  sweep->add_option("--out", sweep_args.out_dir, "output directory")->required();
  sweep->add_option("--jobs", sweep_args.jobs, "worker pool size (env HOAXNET_JOBS)");
  sweep->add_option("--replicates", sweep_args.replicates, "override spec replicates");
  sweep->add_option("--ticks", sweep_args.ticks, "override spec ticks");
  sweep->add_option("--seed", sweep_args.seed, "override spec base seed");
  sweep->callback([&] {
    const Network net = load_edge_list_file(sweep_args.graph);
    const Partition part = load_partition_file(sweep_args.partition, net.node_count());
    SweepSpec spec = parse_sweep_spec_file(sweep_args.spec);
    if (sweep_args.replicates) spec.replicates = *sweep_args.replicates;
    if (sweep_args.ticks) spec.ticks = *sweep_args.ticks;
    if (sweep_args.seed) spec.base_seed = *sweep_args.seed;
    std::filesystem::create_directories(sweep_args.out_dir);
    const auto results = run_sweep(spec, net, part, sweep_args.jobs);
    const std::string out_path =
        (std::filesystem::path(sweep_args.out_dir) / "results.csv").string();
    write_file(out_path, [&](std::ostream& out) { write_results_csv(out, results); });
    std::printf("settings=%zu replicates=%d runs=%zu base_seed=%llu -> %s\n",
                spec.setting_count(), spec.replicates, results.size(),
                static_cast<unsigned long long>(spec.base_seed), out_path.c_str());
  });

  // aggregate
  struct {
    std::string in, out;
    bool plot_data = false;
  } agg_args;
  auto* agg = app.add_subcommand("aggregate", "replicate means and deviations per setting");
  agg->add_option("--in", agg_args.in, "results.csv from a sweep")->required();
  agg->add_option("--out", agg_args.out, "summary file to write")->required();
  agg->add_flag("--emit-plot-data", agg_args.plot_data,
                "also write per-figure extracts next to the summary");
  agg->callback([&] {
    std::ifstream in(agg_args.in);
    if (!in) throw std::runtime_error("cannot open results file: " + agg_args.in);
    const auto summaries = aggregate(read_results_csv(in));
    write_file(agg_args.out, [&](std::ostream& out) { write_summary_csv(out, summaries); });
    std::printf("settings summarized: %zu -> %s\n", summaries.size(), agg_args.out.c_str());
    if (agg_args.plot_data) {
      const auto dir = std::filesystem::path(agg_args.out).parent_path();
      auto emit = [&](const char* name, auto writer) {
        const std::string path = (dir / name).string();
        write_file(path, [&](std::ostream& out) { writer(out, summaries); });
        std::printf("wrote %s\n", path.c_str());
      };
      emit("fig4_sensitivity.csv", write_sensitivity_table);
      emit("fig5_scholar_size.csv", write_scholar_size_table);
      emit("fig6_bot_grid.csv", write_bot_grid_table);
    }
  });

  // scenarios
  struct {
    std::string graph, partition, spec, out;
    int jobs = default_jobs();
    std::optional<int> replicates, ticks;
    std::optional<std::uint64_t> seed;
    bool plot_data = false;
  } scen_args;
  auto* scen = app.add_subcommand("scenarios", "compare named parameter settings");
  scen->add_option("--graph", scen_args.graph, "edge list file")->required();
  scen->add_option("--partition", scen_args.partition, "partition file")->required();
  scen->add_option("--spec", scen_args.spec, "scenario file")->required();
  scen->add_option("--out", scen_args.out, "comparison file to write")->required();
  scen->add_option("--jobs", scen_args.jobs, "worker pool size (env HOAXNET_JOBS)");
  scen->add_option("--replicates", scen_args.replicates, "override replicates");
  scen->add_option("--ticks", scen_args.ticks, "override ticks");
  scen->add_option("--seed", scen_args.seed, "override base seed");
  scen->add_flag("--emit-plot-data", scen_args.plot_data,
                 "also write the mean per-tick series of every scenario");
  scen->callback([&] {
    const Network net = load_edge_list_file(scen_args.graph);
    const Partition part = load_partition_file(scen_args.partition, net.node_count());
    SweepSpec shared;
    const auto scenarios = parse_scenarios_file(scen_args.spec, shared);
    if (scen_args.replicates) shared.replicates = *scen_args.replicates;
    if (scen_args.ticks) shared.ticks = *scen_args.ticks;
    if (scen_args.seed) shared.base_seed = *scen_args.seed;
    const auto results = scenario_compare(scenarios, net, part, shared.replicates,
                                          shared.ticks, shared.base_seed,
                                          scen_args.jobs);
    write_file(scen_args.out, [&](std::ostream& out) {
      write_comparison_csv(out, results, net.node_count());
      out << "# base_seed=" << shared.base_seed << '\n';
    });
    for (const ScenarioResult& r : results)
      std::printf("%s: S=%.1f B=%.1f F=%.1f\n", r.name.c_str(), r.mean_s, r.mean_b,
                  r.mean_f);
    if (scen_args.plot_data) {
      const auto dir = std::filesystem::path(scen_args.out).parent_path();
      const std::string path = (dir / "fig7_scenario_series.csv").string();
      write_file(path, [&](std::ostream& out) { write_scenario_series_table(out, results); });
      std::printf("wrote %s\n", path.c_str());
    }
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
