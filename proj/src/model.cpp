#include "hoaxnet/model.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace hoaxnet {

void ModelParams::validate() const {
  auto check = [](double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0))
      throw std::invalid_argument(std::string("model params: ") + name +
                                  " outside [0,1]");
  };
  check(alpha, "alpha");
  check(beta, "beta");
  check(normal.p_verify, "normal p_verify");
  check(normal.p_forget, "normal p_forget");
  check(scholar.p_verify, "scholar p_verify");
  check(scholar.p_forget, "scholar p_forget");
  check(influencer.p_verify, "influencer p_verify");
  check(influencer.p_forget, "influencer p_forget");
  if (ticks < 0) throw std::invalid_argument("model params: negative tick count");
}

std::pair<double, double> spreading_rates(double alpha, double beta, int n_b,
                                          int n_f) {
  const double weight_b = n_b * (1.0 + alpha);
  const double weight_f = n_f * (1.0 - alpha);
  const double total = weight_b + weight_f;
  // no active neighbors, or alpha=1 with fact-checkers only (limit is 0)
  if (total <= 0.0) return {0.0, 0.0};
  return {beta * weight_b / total, beta * weight_f / total};
}

namespace {

// Counts per (class, state), updated incrementally alongside the states.
struct CountTable {
  int at[kAgentClassCount][3] = {};

  void add(AgentClass c, State s, int delta) {
    at[static_cast<int>(c)][static_cast<int>(s)] += delta;
  }

  TickCounts snapshot() const {
    TickCounts t;
    auto row = [&](AgentClass c, State s) {
      return at[static_cast<int>(c)][static_cast<int>(s)];
    };
    t.s_normal = row(AgentClass::Normal, State::S);
    t.b_normal = row(AgentClass::Normal, State::B);
    t.f_normal = row(AgentClass::Normal, State::F);
    t.s_scholar = row(AgentClass::Scholar, State::S);
    t.b_scholar = row(AgentClass::Scholar, State::B);
    t.f_scholar = row(AgentClass::Scholar, State::F);
    t.s_influencer = row(AgentClass::Influencer, State::S);
    t.b_influencer = row(AgentClass::Influencer, State::B);
    t.f_influencer = row(AgentClass::Influencer, State::F);
    t.b_bot = row(AgentClass::BotB, State::B);
    t.f_bot = row(AgentClass::BotF, State::F);
    t.s = t.s_normal + t.s_scholar + t.s_influencer;
    t.b = t.b_normal + t.b_scholar + t.b_influencer + t.b_bot;
    t.f = t.f_normal + t.f_scholar + t.f_influencer + t.f_bot;
    return t;
  }
};

struct PendingChange {
  int node;
  State next;
};

// One synchronous tick over `states`, consuming one uniform draw per
// non-bot node in ascending id order. neighbor_b/neighbor_f must hold the
// believer/fact-checker neighbor counts of the incoming states and are
// updated in place together with `counts`.
void tick_once(std::vector<State>& states, const Network& net,
               const ClassAssignment& assign, const ModelParams& params,
               std::vector<int>& neighbor_b, std::vector<int>& neighbor_f,
               CountTable& counts, Rng& rng,
               std::vector<PendingChange>& scratch) {
  const int n = net.node_count();
  scratch.clear();
  for (int v = 0; v < n; ++v) {
    const AgentClass cls = assign.class_of[v];
    if (is_bot(cls)) continue;
    const double u = rng.next_double();
    const State current = states[v];
    State next = current;
    switch (current) {
      case State::S: {
        const auto [f_b, f_f] =
            spreading_rates(params.alpha, params.beta, neighbor_b[v], neighbor_f[v]);
        if (u < f_b) next = State::B;
        else if (u < f_b + f_f) next = State::F;
        break;
      }
      case State::B: {
        const ClassProbs& p = params.probs_for(cls);
        // forget first, then verify: net verify probability p_v(1-p_f)
        if (u < p.p_forget) next = State::S;
        else if (u < p.p_forget + (1.0 - p.p_forget) * p.p_verify) next = State::F;
        break;
      }
      case State::F: {
        if (u < params.probs_for(cls).p_forget) next = State::S;
        break;
      }
    }
    if (next != current) scratch.push_back({v, next});
  }

  for (const auto& [v, next] : scratch) {
    const State old = states[v];
    for (const int u : net.neighbors(v)) {
      if (old == State::B) --neighbor_b[u];
      else if (old == State::F) --neighbor_f[u];
      if (next == State::B) ++neighbor_b[u];
      else if (next == State::F) ++neighbor_f[u];
    }
    counts.add(assign.class_of[v], old, -1);
    counts.add(assign.class_of[v], next, +1);
    states[v] = next;
  }
}

void rebuild(const std::vector<State>& states, const Network& net,
             const ClassAssignment& assign, std::vector<int>& neighbor_b,
             std::vector<int>& neighbor_f, CountTable& counts) {
  const int n = net.node_count();
  neighbor_b.assign(n, 0);
  neighbor_f.assign(n, 0);
  counts = CountTable{};
  for (int v = 0; v < n; ++v) {
    counts.add(assign.class_of[v], states[v], +1);
    if (states[v] == State::S) continue;
    for (const int u : net.neighbors(v)) {
      if (states[v] == State::B) ++neighbor_b[u];
      else ++neighbor_f[u];
    }
  }
}

}  // namespace

std::vector<State> step(const std::vector<State>& states, const Network& net,
                        const ClassAssignment& assign, const ModelParams& params,
                        Rng& rng) {
  std::vector<State> next = states;
  std::vector<int> neighbor_b, neighbor_f;
  CountTable counts;
  rebuild(next, net, assign, neighbor_b, neighbor_f, counts);
  std::vector<PendingChange> scratch;
  tick_once(next, net, assign, params, neighbor_b, neighbor_f, counts, rng, scratch);
  return next;
}

Trajectory run(const Network& net, const ClassAssignment& assign,
               const ModelParams& params, double pct_initial_believers,
               Rng& rng) {
  params.validate();
  std::vector<State> states = initialize_states(assign, pct_initial_believers, rng);

  std::vector<int> neighbor_b, neighbor_f;
  CountTable counts;
  rebuild(states, net, assign, neighbor_b, neighbor_f, counts);

  Trajectory trajectory;
  trajectory.series.reserve(params.ticks + 1);
  trajectory.series.push_back(counts.snapshot());

  std::vector<PendingChange> scratch;
  scratch.reserve(net.node_count());
  for (int t = 0; t < params.ticks; ++t) {
    tick_once(states, net, assign, params, neighbor_b, neighbor_f, counts, rng,
              scratch);
    trajectory.series.push_back(counts.snapshot());
  }
  return trajectory;
}

Trajectory run_seeded(const Network& net, const Partition& part,
                      std::optional<int> scholar_community, double pct_b_bot,
                      double pct_f_bot, const ModelParams& params,
                      double pct_initial_believers, std::uint64_t seed) {
  Rng rng(seed);
  const ClassAssignment assign =
      assign_classes(net, part, scholar_community, pct_b_bot, pct_f_bot, rng);
  Trajectory trajectory = run(net, assign, params, pct_initial_believers, rng);
  trajectory.seed = seed;
  return trajectory;
}

const char* const kTrajectoryHeader =
    "setting_id,replicate,tick,S,B,F,"
    "S_normal,B_normal,F_normal,"
    "S_scholar,B_scholar,F_scholar,"
    "S_influencer,B_influencer,F_influencer,"
    "B_bot,F_bot";

void write_trajectory(std::ostream& sink, const Trajectory& trajectory,
                      long long setting_id, int replicate) {
  sink << kTrajectoryHeader << '\n';
  for (std::size_t tick = 0; tick < trajectory.series.size(); ++tick) {
    const TickCounts& c = trajectory.series[tick];
    sink << setting_id << ',' << replicate << ',' << tick << ',' << c.s << ','
         << c.b << ',' << c.f << ',' << c.s_normal << ',' << c.b_normal << ','
         << c.f_normal << ',' << c.s_scholar << ',' << c.b_scholar << ','
         << c.f_scholar << ',' << c.s_influencer << ',' << c.b_influencer << ','
         << c.f_influencer << ',' << c.b_bot << ',' << c.f_bot << '\n';
  }
}

}  // namespace hoaxnet
