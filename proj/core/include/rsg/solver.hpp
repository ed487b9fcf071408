#ifndef RSG_SOLVER_HPP_
#define RSG_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rsg/game.hpp"
#include "rsg/social.hpp"

namespace rsg {

// Computes a state that is both a Nash equilibrium and a considerate
// equilibrium. Starting from a greedy Nash equilibrium, single players are
// moved from high to low resources while such a witness move exists; every
// move strictly decreases the potential
//
//   phi(s) = sum_i M * |N_i(s)| + sum_{used r} d_r(l_r(s)),
//
// so the loop terminates, and at a Nash equilibrium without witness moves
// no clique has a weak considerate improving move.

enum class ResourceKind { kHigh, kLow, kOther };

// Classification of resources at a Nash equilibrium, relative to the
// maximum player cost d_max. An unused resource with d_r(1) == d_max counts
// as low.
struct ResourceClassification {
  Cost d_max = 0;
  std::vector<ResourceId> high;
  std::vector<ResourceId> low;
  std::vector<ResourceId> other;
  std::vector<ResourceKind> kind;  // indexed by resource

  bool is_high(ResourceId r) const { return kind[r] == ResourceKind::kHigh; }
  bool is_low(ResourceId r) const { return kind[r] == ResourceKind::kLow; }
};

struct SolverConfig {
  Cost big_weight = 0;  // M; must exceed sum_r d_r(n)
  std::int64_t max_iterations = 0;

  // M = 1 + sum_r d_r(n); iteration budget derived from phi's range.
  static SolverConfig for_instance(const GameInstance& instance,
                                   const SocialGraph& graph);
};

enum class WitnessKind { kStep2, kStep3 };

// Player `player` moves from high resource `from` to low resource `to`.
//   step 2: |N_{i,from}| >  |N_{i,to}|
//   step 3: |N_{i,from}| == |N_{i,to}| and d_from(l_from - 1) < d_to(l_to)
// where an empty resource contributes delay 0.
struct WitnessMove {
  PlayerId player = 0;
  ResourceId from = 0;
  ResourceId to = 0;
  WitnessKind kind = WitnessKind::kStep2;

  friend bool operator==(const WitnessMove&, const WitnessMove&) = default;
};

// Players are placed one at a time on a resource minimizing d_r(l_r + 1),
// ties to the lowest index.
State greedy_nash(const GameInstance& instance);

// Throws ContractError if `state` is not a Nash equilibrium.
ResourceClassification classify_resources(const GameInstance& instance,
                                          const State& state);

// Step-2 moves take priority over step-3 moves; within a step the lowest
// player and then the lowest target resource wins. Throws ContractError on a
// non-equilibrium input.
std::optional<WitnessMove> find_witness_move(const GameInstance& instance,
                                             const SocialGraph& graph,
                                             const State& state);

// Throws ContractError if config.big_weight is too small or the value does
// not fit in 64 bits.
std::int64_t potential_phi(const GameInstance& instance,
                           const SocialGraph& graph, const State& state,
                           const SolverConfig& config);

struct SolveStep {
  WitnessMove move;
  State state;  // after the move
  std::int64_t phi = 0;
};

struct SolveResult {
  State initial;
  State final_state;
  std::vector<SolveStep> trace;
  std::int64_t phi_start = 0;
  std::int64_t phi_end = 0;

  std::int64_t iterations() const {
    return static_cast<std::int64_t>(trace.size());
  }
};

// Throws ContractError if the iteration budget runs out, which would mean
// phi failed to decrease.
SolveResult solve_ce(const GameInstance& instance, const SocialGraph& graph,
                     const SolverConfig& config);
SolveResult solve_ce(const GameInstance& instance, const SocialGraph& graph);

// Runs the witness loop from a given Nash equilibrium instead of the greedy
// one.
SolveResult solve_ce_from(const GameInstance& instance,
                          const SocialGraph& graph, State start,
                          const SolverConfig& config);

}  // namespace rsg

#endif  // RSG_SOLVER_HPP_
