#include "rsg/moves.hpp"

#include <algorithm>
#include <string>

#include "rsg/error.hpp"

namespace rsg {

Deviation::Deviation(std::vector<std::pair<PlayerId, ResourceId>> moves) {
  if (moves.empty()) throw ContractError("deviation with empty coalition");
  std::sort(moves.begin(), moves.end());
  for (std::size_t k = 0; k < moves.size(); ++k) {
    if (k > 0 && moves[k].first == moves[k - 1].first) {
      throw ContractError("player " + std::to_string(moves[k].first) +
                          " listed twice in a deviation");
    }
    coalition.push_back(moves[k].first);
    targets.push_back(moves[k].second);
  }
}

void validate_deviation(const GameInstance& instance, const Deviation& dev) {
  if (dev.coalition.empty() || dev.coalition.size() != dev.targets.size()) {
    throw ContractError("malformed deviation");
  }
  for (std::size_t k = 0; k < dev.coalition.size(); ++k) {
    const PlayerId i = dev.coalition[k];
    if (i < 0 || i >= instance.players()) {
      throw ContractError("deviation names invalid player " +
                          std::to_string(i));
    }
    if (k > 0 && dev.coalition[k - 1] >= i) {
      throw ContractError("deviation coalition is not sorted and unique");
    }
    if (dev.targets[k] < 0 || dev.targets[k] >= instance.resources()) {
      throw ContractError("deviation sends player " + std::to_string(i) +
                          " to invalid resource " +
                          std::to_string(dev.targets[k]));
    }
  }
}

State apply_deviation(const GameInstance& instance, const State& state,
                      const Deviation& dev) {
  validate_deviation(instance, dev);
  State next = state;
  for (std::size_t k = 0; k < dev.coalition.size(); ++k) {
    next[dev.coalition[k]] = dev.targets[k];
  }
  return next;
}

MoveClass classify_move(const GameInstance& instance, const SocialGraph& graph,
                        const State& state, const Deviation& dev) {
  const State next = apply_deviation(instance, state, dev);
  MoveClass result;
  if (next == state) return result;

  const LoadProfile before = load_profile(instance, state);
  const LoadProfile after = load_profile(instance, next);
  auto cost_before = [&](PlayerId i) {
    return player_cost(instance, state, before, i);
  };
  auto cost_after = [&](PlayerId i) {
    return player_cost(instance, next, after, i);
  };

  bool all_strict = true;
  bool any_strict = false;
  bool none_worse = true;
  for (PlayerId i : dev.coalition) {
    const Cost b = cost_before(i);
    const Cost a = cost_after(i);
    if (a < b) any_strict = true;
    if (a >= b) all_strict = false;
    if (a > b) none_worse = false;
  }
  bool neighbors_ok = true;
  for (PlayerId j : neighborhood(graph, dev.coalition)) {
    if (cost_after(j) > cost_before(j)) {
      neighbors_ok = false;
      break;
    }
  }

  result.improving = all_strict;
  result.weak_improving = none_worse && any_strict;
  result.considerate_improving = result.improving && neighbors_ok;
  result.weak_considerate_improving = result.weak_improving && neighbors_ok;
  return result;
}

std::optional<Deviation> find_unilateral_improvement(
    const GameInstance& instance, const State& state) {
  const LoadProfile loads = load_profile(instance, state);
  for (PlayerId i = 0; i < instance.players(); ++i) {
    const Cost current = player_cost(instance, state, loads, i);
    for (ResourceId r = 0; r < instance.resources(); ++r) {
      if (r == state[i]) continue;
      if (instance.delay(r, loads[r] + 1) < current) {
        return Deviation::single(i, r);
      }
    }
  }
  return std::nullopt;
}

}  // namespace rsg
