#include "rsg/game.hpp"

#include <string>

#include "rsg/error.hpp"

namespace rsg {

GameInstance::GameInstance(int players, std::vector<std::vector<Cost>> delays)
    : players_(players), delays_(std::move(delays)) {
  if (players_ < 1) throw ContractError("game needs at least one player");
  if (delays_.empty()) throw ContractError("game needs at least one resource");
  for (std::size_t r = 0; r < delays_.size(); ++r) {
    const auto& t = delays_[r];
    if (static_cast<int>(t.size()) != players_) {
      throw ContractError("delay table of resource " + std::to_string(r) +
                          " has " + std::to_string(t.size()) +
                          " entries, expected " + std::to_string(players_));
    }
    for (std::size_t x = 0; x < t.size(); ++x) {
      if (t[x] < 0) {
        throw ContractError("delay table of resource " + std::to_string(r) +
                            " has a negative entry");
      }
      if (x > 0 && t[x] <= t[x - 1]) {
        throw ContractError("delay table of resource " + std::to_string(r) +
                            " is not strictly increasing at load " +
                            std::to_string(x + 1));
      }
    }
  }
}

GameInstance GameInstance::identical(int players, int resources,
                                     std::span<const Cost> table) {
  if (resources < 1) throw ContractError("game needs at least one resource");
  std::vector<std::vector<Cost>> delays(
      resources, std::vector<Cost>(table.begin(), table.end()));
  return GameInstance(players, std::move(delays));
}

GameInstance GameInstance::linear(int players, int resources) {
  std::vector<Cost> table(players);
  for (int x = 1; x <= players; ++x) table[x - 1] = x;
  return identical(players, resources, table);
}

Cost GameInstance::delay(ResourceId r, int load) const {
  if (r < 0 || r >= resources() || load < 1 || load > players_) {
    throw ContractError("delay of resource " + std::to_string(r) +
                        " at load " + std::to_string(load) + " is undefined");
  }
  return delays_[r][load - 1];
}

std::span<const Cost> GameInstance::table(ResourceId r) const {
  return delays_[r];
}

Cost GameInstance::max_delay_sum() const {
  Cost sum = 0;
  for (const auto& t : delays_) {
    if (__builtin_add_overflow(sum, t.back(), &sum)) {
      throw ContractError("sum of maximal delays overflows");
    }
  }
  return sum;
}

void validate_state(const GameInstance& instance, const State& state) {
  if (state.size() != instance.players()) {
    throw ContractError("state has " + std::to_string(state.size()) +
                        " entries, game has " +
                        std::to_string(instance.players()) + " players");
  }
  for (PlayerId i = 0; i < state.size(); ++i) {
    if (state[i] < 0 || state[i] >= instance.resources()) {
      throw ContractError("player " + std::to_string(i) +
                          " is on invalid resource " +
                          std::to_string(state[i]));
    }
  }
}

LoadProfile load_profile(const GameInstance& instance, const State& state) {
  validate_state(instance, state);
  LoadProfile profile{std::vector<int>(instance.resources(), 0)};
  for (ResourceId r : state.assignment) ++profile.loads[r];
  return profile;
}

Cost player_cost(const GameInstance& instance, const State& state,
                 const LoadProfile& loads, PlayerId player) {
  const ResourceId r = state[player];
  return instance.delay(r, loads[r]);
}

Cost player_cost(const GameInstance& instance, const State& state,
                 PlayerId player) {
  if (player < 0 || player >= instance.players()) {
    throw ContractError("invalid player " + std::to_string(player));
  }
  return player_cost(instance, state, load_profile(instance, state), player);
}

Cost total_cost(const GameInstance& instance, const State& state) {
  const LoadProfile loads = load_profile(instance, state);
  Cost total = 0;
  for (ResourceId r = 0; r < instance.resources(); ++r) {
    if (loads[r] > 0) total += loads[r] * instance.delay(r, loads[r]);
  }
  return total;
}

}  // namespace rsg
