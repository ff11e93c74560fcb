#pragma once

// Brute-force one-step oracle: enumerates the exact joint distribution of
// next states on tiny graphs directly from the transition definitions,
// independent of the incremental update path in the library.

#include <array>
#include <map>
#include <vector>

#include "hoaxnet/assignment.hpp"
#include "hoaxnet/graph.hpp"
#include "hoaxnet/model.hpp"

namespace testoracle {

using hoaxnet::AgentClass;
using hoaxnet::ClassAssignment;
using hoaxnet::ModelParams;
using hoaxnet::Network;
using hoaxnet::State;

// Per-node next-state probabilities given the full current state.
inline std::array<double, 3> node_transition(int v, const std::vector<State>& states,
                                             const Network& net,
                                             const ClassAssignment& assign,
                                             const ModelParams& params) {
  const AgentClass cls = assign.class_of[v];
  if (cls == AgentClass::BotB) return {0, 1, 0};
  if (cls == AgentClass::BotF) return {0, 0, 1};
  const auto& probs = params.probs_for(cls);
  switch (states[v]) {
    case State::S: {
      int n_b = 0, n_f = 0;
      for (int u : net.neighbors(v)) {
        if (states[u] == State::B) ++n_b;
        if (states[u] == State::F) ++n_f;
      }
      const auto [f_b, f_f] =
          hoaxnet::spreading_rates(params.alpha, params.beta, n_b, n_f);
      return {1.0 - f_b - f_f, f_b, f_f};
    }
    case State::B: {
      const double to_f = (1.0 - probs.p_forget) * probs.p_verify;
      return {probs.p_forget, 1.0 - probs.p_forget - to_f, to_f};
    }
    case State::F:
      return {probs.p_forget, 0.0, 1.0 - probs.p_forget};
  }
  return {1, 0, 0};
}

// Exact joint one-step distribution over all 3^N next-state tuples;
// zero-probability outcomes are dropped. The synchronous update makes the
// nodes conditionally independent given the current state.
inline std::map<std::vector<State>, double> one_step_distribution(
    const std::vector<State>& states, const Network& net,
    const ClassAssignment& assign, const ModelParams& params) {
  const int n = net.node_count();
  std::vector<std::array<double, 3>> per_node(n);
  for (int v = 0; v < n; ++v)
    per_node[v] = node_transition(v, states, net, assign, params);

  std::map<std::vector<State>, double> joint;
  std::vector<State> outcome(n, State::S);
  const auto recurse = [&](auto&& self, int v, double p) -> void {
    if (p == 0.0) return;
    if (v == n) {
      joint[outcome] += p;
      return;
    }
    for (int s = 0; s < 3; ++s) {
      outcome[v] = static_cast<State>(s);
      self(self, v + 1, p * per_node[v][s]);
    }
  };
  recurse(recurse, 0, 1.0);
  return joint;
}

}  // namespace testoracle
