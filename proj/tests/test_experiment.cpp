#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "hoaxnet/experiment.hpp"
#include "support/util.hpp"

using namespace hoaxnet;

namespace {

// The published experiment grid: 2*2*2*4*4*3*3*3*2*2 settings.
SweepSpec full_grid() {
  SweepSpec spec;
  spec.alpha = {0.3, 0.8};
  spec.beta = {0.5, 0.75};
  spec.pct_initial_believers = {10, 40};
  spec.scholar_community = {std::nullopt, 0, 1, 2};
  spec.pv_scholar = {0.05, 0.1, 0.2, 0.3};
  spec.pf_scholar = {0.02, 0.05, 0.1};
  spec.pv_influencer = {0.05, 0.1, 0.2};
  spec.pf_influencer = {0.02, 0.05, 0.1};
  spec.pct_b_bot = {0, 1};
  spec.pct_f_bot = {0, 1};
  spec.replicates = 4;
  return spec;
}

}  // namespace

TEST_CASE("expand_grid: degenerate and product cardinalities") {
  SweepSpec spec;
  CHECK(expand_grid(spec).size() == 1);

  spec.alpha = {0.3, 0.8};
  spec.beta = {0.5, 0.6, 0.75};
  const auto settings = expand_grid(spec);
  CHECK(settings.size() == 6);
  for (std::size_t i = 0; i < settings.size(); ++i)
    CHECK(settings[i].setting_id == static_cast<long long>(i));
  // beta is the faster-moving axis relative to alpha
  CHECK(settings[0].alpha == 0.3);
  CHECK(settings[0].beta == 0.5);
  CHECK(settings[1].beta == 0.6);
  CHECK(settings[3].alpha == 0.8);
}

TEST_CASE("expand_grid: the full grid has 13824 settings and 55296 runs") {
  const SweepSpec spec = full_grid();
  CHECK(spec.setting_count() == 13824);
  CHECK(spec.run_count() == 55296);
  CHECK(expand_grid(spec).size() == 13824);
}

TEST_CASE("empty value list is rejected naming the parameter") {
  SweepSpec spec;
  spec.pf_scholar.clear();
  CHECK_THROWS_WITH_AS(spec.validate(), doctest::Contains("pf_scholar"),
                       std::runtime_error);
}

TEST_CASE("derive_seed: deterministic, coordinate-sensitive, collision-free") {
  CHECK(derive_seed(42, 7, 3) == derive_seed(42, 7, 3));
  CHECK(derive_seed(42, 7, 3) != derive_seed(42, 7, 2));
  CHECK(derive_seed(42, 7, 3) != derive_seed(42, 8, 3));
  CHECK(derive_seed(42, 7, 3) != derive_seed(43, 7, 3));

  // all 55296 seeds of the full grid are pairwise distinct
  std::vector<std::uint64_t> seeds;
  seeds.reserve(55296);
  for (long long setting = 0; setting < 13824; ++setting)
    for (int replicate = 0; replicate < 4; ++replicate)
      seeds.push_back(derive_seed(20230815, setting, replicate));
  std::sort(seeds.begin(), seeds.end());
  CHECK(std::adjacent_find(seeds.begin(), seeds.end()) == seeds.end());
}

TEST_CASE("run_sweep: ordering, conservation, byte-identical reruns") {
  Rng gen(77);
  const Network net = testutil::random_connected_net(100, 400, gen);
  const Partition part = fluid_communities(net, 3, 5);

  SweepSpec spec;
  spec.alpha = {0.3, 0.8};
  spec.pct_b_bot = {0, 2};
  spec.replicates = 3;
  spec.ticks = 25;
  spec.base_seed = 99;

  const auto results = run_sweep(spec, net, part, 1);
  REQUIRE(results.size() == 12);
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].setting.setting_id == static_cast<long long>(i / 3));
    CHECK(results[i].replicate == static_cast<int>(i % 3));
    CHECK(results[i].final_s + results[i].final_b + results[i].final_f == 100);
  }

  std::ostringstream first, second, parallel;
  write_results_csv(first, results);
  write_results_csv(second, run_sweep(spec, net, part, 1));
  write_results_csv(parallel, run_sweep(spec, net, part, 4));
  CHECK(first.str() == second.str());
  CHECK(first.str() == parallel.str());
}

TEST_CASE("results csv round-trips") {
  Rng gen(78);
  const Network net = testutil::random_connected_net(60, 200, gen);
  const Partition part = fluid_communities(net, 2, 5);
  SweepSpec spec;
  spec.scholar_community = {std::nullopt, 1};
  spec.replicates = 2;
  spec.ticks = 10;

  const auto results = run_sweep(spec, net, part);
  std::ostringstream out;
  write_results_csv(out, results);
  std::istringstream in(out.str());
  const auto reread = read_results_csv(in);
  REQUIRE(reread.size() == results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(reread[i].setting.setting_id == results[i].setting.setting_id);
    CHECK(reread[i].seed == results[i].seed);
    CHECK(reread[i].setting.scholar_community == results[i].setting.scholar_community);
    CHECK(reread[i].final_b == results[i].final_b);
  }
}

TEST_CASE("aggregate: dispersion math") {
  auto make = [](long long setting, int replicate, int b) {
    RunResult r;
    r.setting.setting_id = setting;
    r.replicate = replicate;
    r.final_s = 100 - b;
    r.final_b = b;
    r.final_f = 0;
    return r;
  };

  SUBCASE("identical replicates have zero std") {
    const auto s = aggregate({make(0, 0, 30), make(0, 1, 30)});
    REQUIRE(s.size() == 1);
    CHECK(s[0].mean_b == 30.0);
    CHECK(s[0].std_b == 0.0);
  }

  SUBCASE("sample standard deviation with n=2") {
    const auto s = aggregate({make(0, 0, 10), make(0, 1, 20)});
    CHECK(s[0].mean_b == 15.0);
    CHECK(s[0].std_b == doctest::Approx(7.0710678).epsilon(1e-6));
  }

  SUBCASE("permutation invariance") {
    const std::vector<RunResult> ordered{make(0, 0, 10), make(0, 1, 20),
                                         make(1, 0, 5), make(1, 1, 7)};
    std::vector<RunResult> shuffled{ordered[3], ordered[0], ordered[2], ordered[1]};
    const auto a = aggregate(ordered);
    const auto b = aggregate(shuffled);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].setting.setting_id == b[i].setting.setting_id);
      CHECK(a[i].mean_b == b[i].mean_b);
      CHECK(a[i].std_b == b[i].std_b);
    }
  }

  SUBCASE("missing replicate names the setting") {
    CHECK_THROWS_WITH_AS(aggregate({make(0, 0, 10), make(0, 1, 20), make(1, 1, 5)}),
                         doctest::Contains("setting 1"), std::runtime_error);
  }
}

TEST_CASE("sweep spec parsing") {
  std::istringstream in(
      "# full grid, compressed\n"
      "alpha = 0.3, 0.8\n"
      "beta = 0.5\n"
      "scholar_community = none, 2\n"
      "pv_scholar = 0.05, 0.3\n"
      "replicates = 2\n"
      "ticks = 16\n"
      "base_seed = 1234\n");
  const SweepSpec spec = parse_sweep_spec(in);
  CHECK(spec.alpha == std::vector<double>{0.3, 0.8});
  REQUIRE(spec.scholar_community.size() == 2);
  CHECK_FALSE(spec.scholar_community[0].has_value());
  CHECK(spec.scholar_community[1] == 2);
  CHECK(spec.replicates == 2);
  CHECK(spec.ticks == 16);
  CHECK(spec.base_seed == 1234);
  CHECK(spec.setting_count() == 8);

  std::istringstream bad("alphaa = 0.3\n");
  CHECK_THROWS_WITH_AS(parse_sweep_spec(bad), doctest::Contains("alphaa"),
                       std::runtime_error);
  std::istringstream out_of_range("alpha = 1.5\n");
  CHECK_THROWS_AS(parse_sweep_spec(out_of_range), std::runtime_error);
}

TEST_CASE("scenario parsing and identical-parameter determinism") {
  std::istringstream in(
      "replicates = 2\n"
      "ticks = 12\n"
      "alpha = 0.8\n"
      "[first]\n"
      "pct_b_bot = 2\n"
      "[twin]\n"
      "pct_b_bot = 2\n"
      "[other]\n"
      "alpha = 0.3\n");
  SweepSpec shared;
  const auto scenarios = parse_scenarios(in, shared);
  REQUIRE(scenarios.size() == 3);
  CHECK(shared.replicates == 2);
  CHECK(scenarios[0].name == "first");
  CHECK(scenarios[0].setting.alpha == 0.8);
  CHECK(scenarios[0].setting.pct_b_bot == 2);
  CHECK(scenarios[2].setting.alpha == 0.3);

  Rng gen(79);
  const Network net = testutil::random_connected_net(80, 320, gen);
  const Partition part = fluid_communities(net, 2, 5);
  const auto results =
      scenario_compare(scenarios, net, part, shared.replicates, shared.ticks,
                       shared.base_seed);
  REQUIRE(results.size() == 3);
  CHECK(results[0].mean_b == results[1].mean_b);  // identical parameters
  CHECK(results[0].mean_s == results[1].mean_s);
  CHECK(results[0].series == results[1].series);
}

TEST_CASE("scenario lists are rejected") {
  std::istringstream in("[bad]\nalpha = 0.3, 0.8\n");
  SweepSpec shared;
  CHECK_THROWS_WITH_AS(parse_scenarios(in, shared),
                       doctest::Contains("single values"), std::runtime_error);
}
