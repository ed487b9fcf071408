#ifndef RSG_MOVES_HPP_
#define RSG_MOVES_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "rsg/game.hpp"
#include "rsg/social.hpp"

namespace rsg {

// A coalition together with the resource each member switches to. Members
// are kept sorted; targets[k] belongs to coalition[k]. Members that keep
// their strategy are listed with their current resource.
struct Deviation {
  PlayerSet coalition;
  std::vector<ResourceId> targets;

  Deviation() = default;
  // Sorts by player; throws ContractError on an empty or duplicated
  // coalition.
  explicit Deviation(std::vector<std::pair<PlayerId, ResourceId>> moves);

  static Deviation single(PlayerId player, ResourceId target) {
    return Deviation({{player, target}});
  }

  int size() const { return static_cast<int>(coalition.size()); }

  friend bool operator==(const Deviation&, const Deviation&) = default;
};

struct MoveClass {
  bool improving = false;
  bool weak_improving = false;
  bool considerate_improving = false;
  bool weak_considerate_improving = false;

  friend bool operator==(const MoveClass&, const MoveClass&) = default;
};

// Range-checks the coalition and targets against the instance.
void validate_deviation(const GameInstance& instance, const Deviation& dev);

// (s'_C, s_{-C}).
State apply_deviation(const GameInstance& instance, const State& state,
                      const Deviation& dev);

// Evaluates all four improving-move notions on cost semantics. A deviation
// in which nobody changes resource gets all flags false.
MoveClass classify_move(const GameInstance& instance, const SocialGraph& graph,
                        const State& state, const Deviation& dev);

// First unilateral strict improvement (lowest player, then lowest target),
// if any.
std::optional<Deviation> find_unilateral_improvement(
    const GameInstance& instance, const State& state);

inline bool is_nash_equilibrium(const GameInstance& instance,
                                const State& state) {
  return !find_unilateral_improvement(instance, state).has_value();
}

}  // namespace rsg

#endif  // RSG_MOVES_HPP_
