#include "hoaxnet/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hoaxnet {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream stream(s);
  std::string item;
  while (std::getline(stream, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

double parse_double(const std::string& text, const std::string& where) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(where + ": not a number: '" + text + "'");
  }
}

long long parse_int(const std::string& text, const std::string& where) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(where + ": not an integer: '" + text + "'");
  }
}

std::optional<int> parse_community(const std::string& text, const std::string& where) {
  if (text == "none" || text == "None" || text == "NONE") return std::nullopt;
  return static_cast<int>(parse_int(text, where));
}

}  // namespace

std::string format_scholar_community(const std::optional<int>& community) {
  return community ? std::to_string(*community) : std::string("none");
}

ModelParams Setting::model_params(int ticks) const {
  ModelParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.scholar = {pv_scholar, pf_scholar};
  p.influencer = {pv_influencer, pf_influencer};
  p.ticks = ticks;
  return p;
}

std::size_t SweepSpec::setting_count() const {
  return alpha.size() * beta.size() * pct_initial_believers.size() *
         scholar_community.size() * pv_scholar.size() * pf_scholar.size() *
         pv_influencer.size() * pf_influencer.size() * pct_b_bot.size() *
         pct_f_bot.size();
}

void SweepSpec::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error("sweep spec: " + what);
  };
  auto nonempty = [&](const auto& list, const char* name) {
    require(!list.empty(), std::string("empty value list for ") + name);
  };
  auto probs = [&](const std::vector<double>& list, const char* name) {
    nonempty(list, name);
    for (double v : list)
      require(v >= 0.0 && v <= 1.0, std::string(name) + " value outside [0,1]");
  };
  probs(alpha, "alpha");
  probs(beta, "beta");
  nonempty(pct_initial_believers, "pct_initial_believers");
  for (double v : pct_initial_believers)
    require(v >= 0.0 && v <= 100.0, "pct_initial_believers value outside [0,100]");
  nonempty(scholar_community, "scholar_community");
  probs(pv_scholar, "pv_scholar");
  probs(pf_scholar, "pf_scholar");
  probs(pv_influencer, "pv_influencer");
  probs(pf_influencer, "pf_influencer");
  nonempty(pct_b_bot, "pct_b_bot");
  nonempty(pct_f_bot, "pct_f_bot");
  for (double v : pct_b_bot)
    require(v >= 0.0 && v <= 100.0, "pct_b_bot value outside [0,100]");
  for (double v : pct_f_bot)
    require(v >= 0.0 && v <= 100.0, "pct_f_bot value outside [0,100]");
  require(replicates >= 1, "replicates must be >= 1");
  require(ticks >= 0, "ticks must be >= 0");
}

std::vector<Setting> expand_grid(const SweepSpec& spec) {
  spec.validate();
  std::vector<Setting> settings;
  settings.reserve(spec.setting_count());
  long long id = 0;
  for (double alpha : spec.alpha)
    for (double beta : spec.beta)
      for (double init : spec.pct_initial_believers)
        for (const auto& community : spec.scholar_community)
          for (double pvs : spec.pv_scholar)
            for (double pfs : spec.pf_scholar)
              for (double pvi : spec.pv_influencer)
                for (double pfi : spec.pf_influencer)
                  for (double pbb : spec.pct_b_bot)
                    for (double pfb : spec.pct_f_bot) {
                      Setting s;
                      s.setting_id = id++;
                      s.alpha = alpha;
                      s.beta = beta;
                      s.pct_initial_believers = init;
                      s.scholar_community = community;
                      s.pv_scholar = pvs;
                      s.pf_scholar = pfs;
                      s.pv_influencer = pvi;
                      s.pf_influencer = pfi;
                      s.pct_b_bot = pbb;
                      s.pct_f_bot = pfb;
                      settings.push_back(s);
                    }
  return settings;
}

std::uint64_t derive_seed(std::uint64_t base_seed, long long setting_id,
                          int replicate) {
  std::uint64_t x = mix64(base_seed ^ 0x243f6a8885a308d3ULL);
  x = mix64(x + static_cast<std::uint64_t>(setting_id));
  x = mix64(x + static_cast<std::uint64_t>(replicate));
  return x;
}

std::vector<RunResult> run_sweep(const SweepSpec& spec, const Network& net,
                                 const Partition& part, int jobs,
                                 bool keep_series) {
  spec.validate();
  if (part.node_count() != net.node_count())
    throw std::invalid_argument("run_sweep: partition/network size mismatch");
  const std::vector<Setting> settings = expand_grid(spec);
  const std::size_t total = settings.size() * spec.replicates;
  std::vector<RunResult> results(total);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::string error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total || failed.load()) return;
      const Setting& setting = settings[i / spec.replicates];
      const int replicate = static_cast<int>(i % spec.replicates);
      try {
        RunResult& r = results[i];
        r.setting = setting;
        r.replicate = replicate;
        r.seed = derive_seed(spec.base_seed, setting.setting_id, replicate);
        Trajectory traj = run_seeded(
            net, part, setting.scholar_community, setting.pct_b_bot,
            setting.pct_f_bot, setting.model_params(spec.ticks),
            setting.pct_initial_believers, r.seed);
        const TickCounts& final = traj.final_counts();
        r.final_s = final.s;
        r.final_b = final.b;
        r.final_f = final.f;
        if (keep_series) r.trajectory = std::move(traj);
      } catch (const std::exception& e) {
        std::scoped_lock lock(error_mutex);
        if (!failed.exchange(true))
          error = "setting " + std::to_string(setting.setting_id) + " replicate " +
                  std::to_string(replicate) + ": " + e.what();
        return;
      }
    }
  };

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(total)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw std::runtime_error("run_sweep: " + error);
  return results;
}

std::vector<SettingSummary> aggregate(const std::vector<RunResult>& results) {
  if (results.empty()) return {};
  std::map<long long, std::vector<const RunResult*>> by_setting;
  int replicates = 0;
  for (const RunResult& r : results) {
    by_setting[r.setting.setting_id].push_back(&r);
    replicates = std::max(replicates, r.replicate + 1);
  }

  std::vector<SettingSummary> summaries;
  summaries.reserve(by_setting.size());
  for (auto& [setting_id, runs] : by_setting) {
    std::vector<char> present(replicates, 0);
    for (const RunResult* r : runs) {
      if (r->replicate < replicates && !present[r->replicate])
        present[r->replicate] = 1;
      else
        throw std::runtime_error("aggregate: duplicate replicate " +
                                 std::to_string(r->replicate) + " for setting " +
                                 std::to_string(setting_id));
    }
    for (int rep = 0; rep < replicates; ++rep)
      if (!present[rep])
        throw std::runtime_error("aggregate: setting " + std::to_string(setting_id) +
                                 " is missing replicate " + std::to_string(rep));

    auto stats = [&](auto field) {
      const double n = static_cast<double>(runs.size());
      double mean = 0;
      for (const RunResult* r : runs) mean += field(*r);
      mean /= n;
      double ss = 0;
      for (const RunResult* r : runs) {
        const double d = field(*r) - mean;
        ss += d * d;
      }
      const double var = runs.size() > 1 ? ss / (n - 1.0) : 0.0;
      return std::pair{mean, std::sqrt(var)};
    };

    SettingSummary s;
    s.setting = runs.front()->setting;
    std::tie(s.mean_s, s.std_s) = stats([](const RunResult& r) { return r.final_s; });
    std::tie(s.mean_b, s.std_b) = stats([](const RunResult& r) { return r.final_b; });
    std::tie(s.mean_f, s.std_f) = stats([](const RunResult& r) { return r.final_f; });
    summaries.push_back(std::move(s));
  }
  return summaries;
}

std::vector<ScenarioResult> scenario_compare(const std::vector<Scenario>& scenarios,
                                             const Network& net,
                                             const Partition& part,
                                             int replicates, int ticks,
                                             std::uint64_t base_seed, int jobs) {
  std::vector<ScenarioResult> out;
  out.reserve(scenarios.size());
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    SweepSpec one;
    const Setting& s = scenarios[i].setting;
    one.alpha = {s.alpha};
    one.beta = {s.beta};
    one.pct_initial_believers = {s.pct_initial_believers};
    one.scholar_community = {s.scholar_community};
    one.pv_scholar = {s.pv_scholar};
    one.pf_scholar = {s.pf_scholar};
    one.pv_influencer = {s.pv_influencer};
    one.pf_influencer = {s.pf_influencer};
    one.pct_b_bot = {s.pct_b_bot};
    one.pct_f_bot = {s.pct_f_bot};
    one.replicates = replicates;
    one.ticks = ticks;
    // shared seed stream: scenarios with identical parameters produce
    // identical outputs, and comparisons use common random numbers
    one.base_seed = base_seed;

    const std::vector<RunResult> runs = run_sweep(one, net, part, jobs, true);
    ScenarioResult r;
    r.name = scenarios[i].name;
    r.setting = s;
    r.series.assign(ticks + 1, {0.0, 0.0, 0.0});
    for (const RunResult& run : runs) {
      r.mean_s += run.final_s;
      r.mean_b += run.final_b;
      r.mean_f += run.final_f;
      for (int t = 0; t <= ticks; ++t) {
        const TickCounts& c = run.trajectory->series[t];
        r.series[t][0] += c.s;
        r.series[t][1] += c.b;
        r.series[t][2] += c.f;
      }
    }
    const double n = static_cast<double>(runs.size());
    r.mean_s /= n;
    r.mean_b /= n;
    r.mean_f /= n;
    for (auto& tick : r.series)
      for (double& v : tick) v /= n;
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

// Applies one `name = values` line to a spec; unknown names throw.
// Returns false when the name is a protocol field rather than a grid
// parameter (useful for scenario files, where grids are not allowed).
void apply_spec_line(SweepSpec& spec, const std::string& name,
                     const std::string& value_text, const std::string& where) {
  const std::vector<std::string> parts = split(value_text, ',');
  if (parts.empty() || (parts.size() == 1 && parts[0].empty()))
    throw std::runtime_error(where + ": empty value list for " + name);

  auto doubles = [&] {
    std::vector<double> v;
    v.reserve(parts.size());
    for (const auto& p : parts) v.push_back(parse_double(p, where));
    return v;
  };

  if (name == "alpha") spec.alpha = doubles();
  else if (name == "beta") spec.beta = doubles();
  else if (name == "pct_initial_believers") spec.pct_initial_believers = doubles();
  else if (name == "scholar_community") {
    spec.scholar_community.clear();
    for (const auto& p : parts)
      spec.scholar_community.push_back(parse_community(p, where));
  } else if (name == "pv_scholar") spec.pv_scholar = doubles();
  else if (name == "pf_scholar") spec.pf_scholar = doubles();
  else if (name == "pv_influencer") spec.pv_influencer = doubles();
  else if (name == "pf_influencer") spec.pf_influencer = doubles();
  else if (name == "pct_b_bot") spec.pct_b_bot = doubles();
  else if (name == "pct_f_bot") spec.pct_f_bot = doubles();
  else if (name == "replicates")
    spec.replicates = static_cast<int>(parse_int(parts.at(0), where));
  else if (name == "ticks")
    spec.ticks = static_cast<int>(parse_int(parts.at(0), where));
  else if (name == "base_seed")
    spec.base_seed = static_cast<std::uint64_t>(parse_int(parts.at(0), where));
  else
    throw std::runtime_error(where + ": unknown parameter '" + name + "'");
}

}  // namespace

SweepSpec parse_sweep_spec(std::istream& source) {
  SweepSpec spec;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const std::string where = "sweep spec line " + std::to_string(line_no);
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(where + ": expected 'name = values': '" + text + "'");
    apply_spec_line(spec, trim(text.substr(0, eq)), trim(text.substr(eq + 1)), where);
  }
  spec.validate();
  return spec;
}

SweepSpec parse_sweep_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sweep spec: " + path);
  return parse_sweep_spec(in);
}

std::vector<Scenario> parse_scenarios(std::istream& source, SweepSpec& shared) {
  std::vector<Scenario> scenarios;
  SweepSpec current;
  bool in_section = false;
  std::string section_name;
  std::string line;
  std::size_t line_no = 0;

  auto flush = [&] {
    if (!in_section) return;
    current.validate();
    if (current.setting_count() != 1)
      throw std::runtime_error("scenario '" + section_name +
                               "': scenarios take single values, not lists");
    Scenario s;
    s.name = section_name;
    s.setting = expand_grid(current).front();
    s.setting.setting_id = static_cast<long long>(scenarios.size());
    scenarios.push_back(std::move(s));
  };

  while (std::getline(source, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    if (text.front() == '[') {
      if (text.back() != ']' || text.size() < 3)
        throw std::runtime_error("scenario file line " + std::to_string(line_no) +
                                 ": malformed section header '" + text + "'");
      flush();
      section_name = trim(text.substr(1, text.size() - 2));
      current = shared;  // sections start from the shared defaults
      in_section = true;
      continue;
    }
    const std::string where = "scenario file line " + std::to_string(line_no);
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(where + ": expected 'name = value': '" + text + "'");
    apply_spec_line(in_section ? current : shared, trim(text.substr(0, eq)),
                    trim(text.substr(eq + 1)), where);
  }
  flush();
  if (scenarios.empty())
    throw std::runtime_error("scenario file: no [name] sections found");
  return scenarios;
}

std::vector<Scenario> parse_scenarios_file(const std::string& path,
                                           SweepSpec& shared) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  return parse_scenarios(in, shared);
}

namespace {

constexpr const char* kResultsHeader =
    "setting_id,replicate,seed,alpha,beta,pct_initial_believers,"
    "scholar_community,pv_scholar,pf_scholar,pv_influencer,pf_influencer,"
    "pct_b_bot,pct_f_bot,final_S,final_B,final_F";

void write_setting_fields(std::ostream& sink, const Setting& s) {
  sink << fmt(s.alpha) << ',' << fmt(s.beta) << ','
       << fmt(s.pct_initial_believers) << ','
       << format_scholar_community(s.scholar_community) << ','
       << fmt(s.pv_scholar) << ',' << fmt(s.pf_scholar) << ','
       << fmt(s.pv_influencer) << ',' << fmt(s.pf_influencer) << ','
       << fmt(s.pct_b_bot) << ',' << fmt(s.pct_f_bot);
}

}  // namespace

void write_results_csv(std::ostream& sink, const std::vector<RunResult>& results) {
  sink << kResultsHeader << '\n';
  for (const RunResult& r : results) {
    sink << r.setting.setting_id << ',' << r.replicate << ',' << r.seed << ',';
    write_setting_fields(sink, r.setting);
    sink << ',' << r.final_s << ',' << r.final_b << ',' << r.final_f << '\n';
  }
}

std::vector<RunResult> read_results_csv(std::istream& source) {
  std::string line;
  if (!std::getline(source, line) || trim(line) != kResultsHeader)
    throw std::runtime_error("results file: unexpected header");
  std::vector<RunResult> results;
  std::size_t line_no = 1;
  while (std::getline(source, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::string where = "results file line " + std::to_string(line_no);
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 16)
      throw std::runtime_error(where + ": expected 16 fields, got " +
                               std::to_string(f.size()));
    RunResult r;
    r.setting.setting_id = parse_int(f[0], where);
    r.replicate = static_cast<int>(parse_int(f[1], where));
    r.seed = static_cast<std::uint64_t>(std::stoull(f[2]));
    r.setting.alpha = parse_double(f[3], where);
    r.setting.beta = parse_double(f[4], where);
    r.setting.pct_initial_believers = parse_double(f[5], where);
    r.setting.scholar_community = parse_community(f[6], where);
    r.setting.pv_scholar = parse_double(f[7], where);
    r.setting.pf_scholar = parse_double(f[8], where);
    r.setting.pv_influencer = parse_double(f[9], where);
    r.setting.pf_influencer = parse_double(f[10], where);
    r.setting.pct_b_bot = parse_double(f[11], where);
    r.setting.pct_f_bot = parse_double(f[12], where);
    r.final_s = static_cast<int>(parse_int(f[13], where));
    r.final_b = static_cast<int>(parse_int(f[14], where));
    r.final_f = static_cast<int>(parse_int(f[15], where));
    results.push_back(std::move(r));
  }
  return results;
}

void write_summary_csv(std::ostream& sink,
                       const std::vector<SettingSummary>& summaries) {
  sink << "setting_id,alpha,beta,pct_initial_believers,scholar_community,"
          "pv_scholar,pf_scholar,pv_influencer,pf_influencer,pct_b_bot,"
          "pct_f_bot,mean_S,std_S,mean_B,std_B,mean_F,std_F\n";
  for (const SettingSummary& s : summaries) {
    sink << s.setting.setting_id << ',';
    write_setting_fields(sink, s.setting);
    sink << ',' << fmt(s.mean_s) << ',' << fmt(s.std_s) << ',' << fmt(s.mean_b)
         << ',' << fmt(s.std_b) << ',' << fmt(s.mean_f) << ',' << fmt(s.std_f)
         << '\n';
  }
}

void write_comparison_csv(std::ostream& sink,
                          const std::vector<ScenarioResult>& results,
                          int node_count) {
  sink << "scenario,alpha,beta,pct_initial_believers,scholar_community,"
          "pv_scholar,pf_scholar,pv_influencer,pf_influencer,pct_b_bot,"
          "pct_f_bot,mean_S,mean_B,mean_F,share_S,share_B,share_F\n";
  for (const ScenarioResult& r : results) {
    sink << r.name << ',';
    write_setting_fields(sink, r.setting);
    sink << ',' << fmt(r.mean_s) << ',' << fmt(r.mean_b) << ',' << fmt(r.mean_f)
         << ',' << fmt(r.mean_s / node_count) << ',' << fmt(r.mean_b / node_count)
         << ',' << fmt(r.mean_f / node_count) << '\n';
  }
}

void write_sensitivity_table(std::ostream& sink,
                             const std::vector<SettingSummary>& summaries) {
  sink << "parameter,value,mean_S,mean_B,mean_F,settings\n";
  auto emit = [&](const char* name, auto value_of) {
    std::map<double, std::array<double, 4>> acc;
    for (const SettingSummary& s : summaries) {
      auto& row = acc[value_of(s)];
      row[0] += s.mean_s;
      row[1] += s.mean_b;
      row[2] += s.mean_f;
      row[3] += 1;
    }
    for (const auto& [value, row] : acc)
      sink << name << ',' << fmt(value) << ',' << fmt(row[0] / row[3]) << ','
           << fmt(row[1] / row[3]) << ',' << fmt(row[2] / row[3]) << ','
           << static_cast<long long>(row[3]) << '\n';
  };
  emit("alpha", [](const SettingSummary& s) { return s.setting.alpha; });
  emit("beta", [](const SettingSummary& s) { return s.setting.beta; });
  emit("pct_initial_believers",
       [](const SettingSummary& s) { return s.setting.pct_initial_believers; });
}

void write_scholar_size_table(std::ostream& sink,
                              const std::vector<SettingSummary>& summaries) {
  sink << "scholar_community,setting_id,mean_S,mean_B,mean_F\n";
  std::vector<const SettingSummary*> sorted;
  for (const SettingSummary& s : summaries) sorted.push_back(&s);
  std::stable_sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) {
    return a->setting.scholar_community.value_or(-1) <
           b->setting.scholar_community.value_or(-1);
  });
  for (const SettingSummary* s : sorted)
    sink << format_scholar_community(s->setting.scholar_community) << ','
         << s->setting.setting_id << ',' << fmt(s->mean_s) << ','
         << fmt(s->mean_b) << ',' << fmt(s->mean_f) << '\n';
}

void write_bot_grid_table(std::ostream& sink,
                          const std::vector<SettingSummary>& summaries) {
  sink << "pct_b_bot,pct_f_bot,mean_S,mean_B,mean_F,settings\n";
  std::map<std::pair<double, double>, std::array<double, 4>> acc;
  for (const SettingSummary& s : summaries) {
    auto& row = acc[{s.setting.pct_b_bot, s.setting.pct_f_bot}];
    row[0] += s.mean_s;
    row[1] += s.mean_b;
    row[2] += s.mean_f;
    row[3] += 1;
  }
  for (const auto& [key, row] : acc)
    sink << fmt(key.first) << ',' << fmt(key.second) << ','
         << fmt(row[0] / row[3]) << ',' << fmt(row[1] / row[3]) << ','
         << fmt(row[2] / row[3]) << ',' << static_cast<long long>(row[3]) << '\n';
}

void write_scenario_series_table(std::ostream& sink,
                                 const std::vector<ScenarioResult>& results) {
  sink << "scenario,tick,mean_S,mean_B,mean_F\n";
  for (const ScenarioResult& r : results)
    for (std::size_t t = 0; t < r.series.size(); ++t)
      sink << r.name << ',' << t << ',' << fmt(r.series[t][0]) << ','
           << fmt(r.series[t][1]) << ',' << fmt(r.series[t][2]) << '\n';
}

}  // namespace hoaxnet
