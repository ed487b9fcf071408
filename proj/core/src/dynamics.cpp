#include "rsg/dynamics.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>

#include "rsg/error.hpp"

namespace rsg {
namespace {

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (ResourceId r : s.assignment) {
      h ^= static_cast<std::size_t>(r) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

bool is_valid_move(const GameInstance& instance, const SocialGraph& graph,
                   const State& state, const Deviation& dev) {
  return graph.is_clique(dev.coalition) &&
         classify_move(instance, graph, state, dev).weak_considerate_improving;
}

class RandomProposer {
 public:
  RandomProposer(const RandomCliqueScheduler& config, const SocialGraph& graph,
                 int players, std::size_t clique_cap)
      : rng_(config.seed),
        retry_limit_(config.retry_limit),
        cliques_(enumerate_cliques(graph, players, clique_cap)) {}

  std::optional<Deviation> propose(const GameInstance& instance,
                                   const SocialGraph& graph,
                                   const State& state) {
    if (instance.resources() < 2) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick_clique(
        0, cliques_.size() - 1);
    std::uniform_int_distribution<ResourceId> pick_resource(
        0, instance.resources() - 1);
    for (int attempt = 0; attempt < retry_limit_; ++attempt) {
      const PlayerSet& clique = cliques_.cliques[pick_clique(rng_)];
      Deviation dev;
      dev.coalition = clique;
      dev.targets.resize(clique.size());
      bool identity = true;
      while (identity) {
        for (std::size_t a = 0; a < clique.size(); ++a) {
          dev.targets[a] = pick_resource(rng_);
          if (dev.targets[a] != state[clique[a]]) identity = false;
        }
      }
      if (classify_move(instance, graph, state, dev)
              .weak_considerate_improving) {
        return dev;
      }
    }
    return std::nullopt;
  }

 private:
  std::mt19937_64 rng_;
  int retry_limit_;
  CliqueSet cliques_;
};

}  // namespace

std::string explain_rejection(const GameInstance& instance,
                              const SocialGraph& graph, const State& state,
                              const Deviation& dev) {
  for (std::size_t a = 0; a < dev.coalition.size(); ++a) {
    for (std::size_t b = a + 1; b < dev.coalition.size(); ++b) {
      if (!graph.adjacent(dev.coalition[a], dev.coalition[b])) {
        return "coalition is not a clique: players " +
               std::to_string(dev.coalition[a]) + " and " +
               std::to_string(dev.coalition[b]) + " are not adjacent";
      }
    }
  }
  const State next = apply_deviation(instance, state, dev);
  if (next == state) return "no coalition member changes resource";
  const LoadProfile before = load_profile(instance, state);
  const LoadProfile after = load_profile(instance, next);
  auto change = [&](PlayerId i) {
    return std::to_string(player_cost(instance, state, before, i)) + " -> " +
           std::to_string(player_cost(instance, next, after, i));
  };
  bool any_strict = false;
  for (PlayerId i : dev.coalition) {
    const Cost b = player_cost(instance, state, before, i);
    const Cost a = player_cost(instance, next, after, i);
    if (a > b) {
      return "player " + std::to_string(i) + " cost " + change(i) +
             " (coalition member)";
    }
    if (a < b) any_strict = true;
  }
  for (PlayerId j : neighborhood(graph, dev.coalition)) {
    if (player_cost(instance, next, after, j) >
        player_cost(instance, state, before, j)) {
      return "player " + std::to_string(j) + " cost " + change(j) +
             " (neighbor of coalition)";
    }
  }
  if (!any_strict) return "no coalition member strictly improves";
  return "move is weak considerate improving";
}

Trace run_dynamics(const GameInstance& instance, const SocialGraph& graph,
                   const State& initial, const Scheduler& scheduler,
                   const DynamicsOptions& options) {
  validate_state(instance, initial);
  if (options.max_steps < 1) throw ContractError("max_steps must be >= 1");

  Trace trace;
  trace.initial = initial;
  std::unordered_map<State, std::size_t, StateHash> seen;
  seen.emplace(initial, 0);
  State current = initial;

  std::size_t script_pos = 0;
  std::optional<RandomProposer> random;
  if (const auto* r = std::get_if<RandomCliqueScheduler>(&scheduler)) {
    random.emplace(*r, graph, instance.players(), options.budget.max_cliques);
  }
  const bool scripted = std::holds_alternative<ScriptedScheduler>(scheduler);

  auto finish = [&](OutcomeKind kind, std::string diagnostic) {
    trace.outcome.kind = kind;
    trace.outcome.diagnostic = std::move(diagnostic);
    return trace;
  };

  for (std::size_t step = 0; step < options.max_steps; ++step) {
    std::optional<Deviation> proposal;
    if (scripted) {
      const auto& schedule = std::get<ScriptedScheduler>(scheduler).schedule;
      if (script_pos < schedule.size()) proposal = schedule[script_pos++];
    } else if (random) {
      proposal = random->propose(instance, graph, current);
    }

    if (!proposal) {
      std::optional<Deviation> found;
      try {
        found = find_weak_considerate_clique_move(instance, graph, current,
                                                  options.budget);
      } catch (const BudgetExceeded& e) {
        return finish(OutcomeKind::kBudgetExhausted,
                      std::string("convergence check: ") + e.what());
      }
      if (!found) return finish(OutcomeKind::kConvergedCE, "");
      if (scripted) {
        return finish(OutcomeKind::kBudgetExhausted,
                      "schedule exhausted at a state that is not a CE");
      }
      proposal = std::move(found);
    }

    validate_deviation(instance, *proposal);
    if (!is_valid_move(instance, graph, current, *proposal)) {
      trace.outcome.invalid_index = step;
      return finish(OutcomeKind::kInvalidMove,
                    explain_rejection(instance, graph, current, *proposal));
    }
    current = apply_deviation(instance, current, *proposal);
    trace.steps.push_back(TraceStep{std::move(*proposal), current});

    const auto [it, inserted] = seen.emplace(current, step + 1);
    if (!inserted) {
      trace.outcome.first_repeat_index = it->second;
      trace.outcome.period = step + 1 - it->second;
      return finish(OutcomeKind::kCycle, "");
    }
  }
  return finish(OutcomeKind::kBudgetExhausted,
                "reached " + std::to_string(options.max_steps) + " steps");
}

Cost partition_move_check(const GameInstance& instance,
                          const SocialGraph& graph, const State& state,
                          const Deviation& dev) {
  const auto classes = partition_classes(graph);
  if (!classes) {
    throw ContractError("partition check needs a disjoint union of cliques");
  }
  const PlayerSet* owner = nullptr;
  for (const PlayerSet& c : *classes) {
    if (std::binary_search(c.begin(), c.end(), dev.coalition.front())) {
      owner = &c;
    }
  }
  for (PlayerId i : dev.coalition) {
    if (!std::binary_search(owner->begin(), owner->end(), i)) {
      throw ContractError("coalition spans several partition classes");
    }
  }
  if (!classify_move(instance, graph, state, dev).weak_considerate_improving) {
    throw ContractError("partition check needs a weak improving move");
  }
  const State next = apply_deviation(instance, state, dev);
  const LoadProfile before = load_profile(instance, state);
  const LoadProfile after = load_profile(instance, next);
  Cost delta = 0;
  for (PlayerId i : *owner) {
    delta += player_cost(instance, next, after, i) -
             player_cost(instance, state, before, i);
  }
  return delta;
}

std::string format_outcome(const Outcome& outcome) {
  switch (outcome.kind) {
    case OutcomeKind::kConvergedCE:
      return "outcome converged_ce";
    case OutcomeKind::kCycle:
      return "outcome cycle first_repeat=" +
             std::to_string(outcome.first_repeat_index) +
             " period=" + std::to_string(outcome.period);
    case OutcomeKind::kBudgetExhausted:
      return "outcome budget_exhausted";
    case OutcomeKind::kInvalidMove:
      return "outcome invalid_move index=" +
             std::to_string(outcome.invalid_index);
  }
  return "outcome ?";
}

}  // namespace rsg
