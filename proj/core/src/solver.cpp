#include "rsg/solver.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "rsg/error.hpp"
#include "rsg/moves.hpp"

namespace rsg {
namespace {

void require_nash(const GameInstance& instance, const State& state,
                  const char* what) {
  if (auto dev = find_unilateral_improvement(instance, state)) {
    throw ContractError(std::string(what) +
                        " requires a Nash equilibrium; player " +
                        std::to_string(dev->coalition[0]) +
                        " improves by moving to resource " +
                        std::to_string(dev->targets[0]));
  }
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ContractError("potential does not fit in 64 bits");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ContractError("potential does not fit in 64 bits");
  }
  return out;
}

}  // namespace

SolverConfig SolverConfig::for_instance(const GameInstance& instance,
                                        const SocialGraph& graph) {
  SolverConfig config;
  config.big_weight = instance.max_delay_sum() + 1;
  // phi <= M * 2|E| + sum_r d_r(n) < M * (2|E| + 1), and every step lowers
  // phi by at least one.
  std::int64_t bound;
  if (__builtin_mul_overflow(config.big_weight,
                             static_cast<std::int64_t>(2 * graph.edge_count() + 1),
                             &bound)) {
    bound = std::numeric_limits<std::int64_t>::max();
  }
  config.max_iterations = bound;
  return config;
}

State greedy_nash(const GameInstance& instance) {
  std::vector<int> loads(instance.resources(), 0);
  State state(std::vector<ResourceId>(instance.players(), 0));
  for (PlayerId i = 0; i < instance.players(); ++i) {
    ResourceId best = 0;
    for (ResourceId r = 1; r < instance.resources(); ++r) {
      if (instance.delay(r, loads[r] + 1) <
          instance.delay(best, loads[best] + 1)) {
        best = r;
      }
    }
    state[i] = best;
    ++loads[best];
  }
  return state;
}

ResourceClassification classify_resources(const GameInstance& instance,
                                          const State& state) {
  require_nash(instance, state, "resource classification");
  const LoadProfile loads = load_profile(instance, state);
  ResourceClassification c;
  for (ResourceId r = 0; r < instance.resources(); ++r) {
    if (loads[r] > 0) c.d_max = std::max(c.d_max, instance.delay(r, loads[r]));
  }
  c.kind.resize(instance.resources(), ResourceKind::kOther);
  for (ResourceId r = 0; r < instance.resources(); ++r) {
    const int l = loads[r];
    if (l > 0 && instance.delay(r, l) == c.d_max) {
      c.kind[r] = ResourceKind::kHigh;
      c.high.push_back(r);
    } else if (l < instance.players() && instance.delay(r, l + 1) == c.d_max) {
      // Here either l == 0 or d_r(l) < d_max.
      c.kind[r] = ResourceKind::kLow;
      c.low.push_back(r);
    } else {
      c.other.push_back(r);
    }
  }
  return c;
}

std::optional<WitnessMove> find_witness_move(const GameInstance& instance,
                                             const SocialGraph& graph,
                                             const State& state) {
  const ResourceClassification c = classify_resources(instance, state);
  if (c.high.empty() || c.low.empty()) return std::nullopt;
  const LoadProfile loads = load_profile(instance, state);

  for (PlayerId i = 0; i < instance.players(); ++i) {
    const ResourceId r = state[i];
    if (!c.is_high(r)) continue;
    const int here = same_resource_neighbors(graph, state, i, r);
    if (here == 0) continue;
    for (ResourceId target : c.low) {
      if (here > same_resource_neighbors(graph, state, i, target)) {
        return WitnessMove{i, r, target, WitnessKind::kStep2};
      }
    }
  }
  for (PlayerId i = 0; i < instance.players(); ++i) {
    const ResourceId r = state[i];
    if (!c.is_high(r)) continue;
    const int here = same_resource_neighbors(graph, state, i, r);
    const Cost relieved = instance.delay_or_zero(r, loads[r] - 1);
    for (ResourceId target : c.low) {
      if (here == same_resource_neighbors(graph, state, i, target) &&
          relieved < instance.delay_or_zero(target, loads[target])) {
        return WitnessMove{i, r, target, WitnessKind::kStep3};
      }
    }
  }
  return std::nullopt;
}

std::int64_t potential_phi(const GameInstance& instance,
                           const SocialGraph& graph, const State& state,
                           const SolverConfig& config) {
  if (config.big_weight <= instance.max_delay_sum()) {
    throw ContractError("big weight M=" + std::to_string(config.big_weight) +
                        " must exceed sum_r d_r(n)=" +
                        std::to_string(instance.max_delay_sum()));
  }
  const LoadProfile loads = load_profile(instance, state);
  std::int64_t same = 0;
  for (PlayerId i = 0; i < instance.players(); ++i) {
    same += same_resource_neighbors(graph, state, i);
  }
  std::int64_t phi = checked_mul(config.big_weight, same);
  for (ResourceId r = 0; r < instance.resources(); ++r) {
    phi = checked_add(phi, instance.delay_or_zero(r, loads[r]));
  }
  return phi;
}

SolveResult solve_ce_from(const GameInstance& instance,
                          const SocialGraph& graph, State start,
                          const SolverConfig& config) {
  if (graph.players() != instance.players()) {
    throw ContractError("graph and game disagree on the player count");
  }
  SolveResult result;
  result.initial = start;
  result.phi_start = potential_phi(instance, graph, start, config);
  State current = std::move(start);
  std::int64_t phi = result.phi_start;
  while (auto move = find_witness_move(instance, graph, current)) {
    if (result.iterations() >= config.max_iterations) {
      throw ContractError("internal error: solver exceeded " +
                          std::to_string(config.max_iterations) +
                          " iterations although phi bounds the run");
    }
    current[move->player] = move->to;
    phi = potential_phi(instance, graph, current, config);
    result.trace.push_back(SolveStep{*move, current, phi});
  }
  result.final_state = std::move(current);
  result.phi_end = phi;
  return result;
}

SolveResult solve_ce(const GameInstance& instance, const SocialGraph& graph,
                     const SolverConfig& config) {
  return solve_ce_from(instance, graph, greedy_nash(instance), config);
}

SolveResult solve_ce(const GameInstance& instance, const SocialGraph& graph) {
  return solve_ce(instance, graph, SolverConfig::for_instance(instance, graph));
}

}  // namespace rsg
