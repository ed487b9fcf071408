#ifndef RSG_DYNAMICS_HPP_
#define RSG_DYNAMICS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rsg/game.hpp"
#include "rsg/moves.hpp"
#include "rsg/oracle.hpp"
#include "rsg/social.hpp"

namespace rsg {

// Moves are taken from the list in order; a move that is not a weak
// considerate improving clique move aborts the run.
struct ScriptedScheduler {
  std::vector<Deviation> schedule;
};

// Draws a uniformly random enumerated clique and a uniformly random
// non-identity replacement vector from std::mt19937_64(seed), up to
// `retry_limit` times per step. When no draw is improving the oracle decides
// between convergence and its first move.
struct RandomCliqueScheduler {
  std::uint64_t seed = 0;
  int retry_limit = 64;
};

// Always takes the oracle's first move.
struct ExhaustiveFirstScheduler {};

using Scheduler =
    std::variant<ScriptedScheduler, RandomCliqueScheduler,
                 ExhaustiveFirstScheduler>;

enum class OutcomeKind { kConvergedCE, kCycle, kBudgetExhausted, kInvalidMove };

struct Outcome {
  OutcomeKind kind = OutcomeKind::kBudgetExhausted;
  // kCycle: state index first_repeat_index equals first_repeat_index + period
  // (index 0 is the initial state).
  std::size_t first_repeat_index = 0;
  std::size_t period = 0;
  // kInvalidMove: 0-based index of the rejected move.
  std::size_t invalid_index = 0;
  std::string diagnostic;
};

struct TraceStep {
  Deviation move;
  State state;  // after the move
};

struct Trace {
  State initial;
  std::vector<TraceStep> steps;
  Outcome outcome;

  const State& state_at(std::size_t index) const {
    return index == 0 ? initial : steps[index - 1].state;
  }
};

struct DynamicsOptions {
  std::size_t max_steps = 10'000;
  SearchBudget budget;  // for convergence checks
};

Trace run_dynamics(const GameInstance& instance, const SocialGraph& graph,
                   const State& initial, const Scheduler& scheduler,
                   const DynamicsOptions& options = {});

// Explains why `dev` is not a weak considerate improving clique move, e.g.
// "player 12 cost 2 -> 3 (neighbor of coalition)".
std::string explain_rejection(const GameInstance& instance,
                              const SocialGraph& graph, const State& state,
                              const Deviation& dev);

// Cost change of the whole partition class containing `dev`'s coalition.
// Requires a disjoint-clique graph, a coalition inside one class, and a weak
// considerate improving move; ContractError otherwise.
Cost partition_move_check(const GameInstance& instance,
                          const SocialGraph& graph, const State& state,
                          const Deviation& dev);

std::string format_outcome(const Outcome& outcome);

}  // namespace rsg

#endif  // RSG_DYNAMICS_HPP_
