#ifndef RSG_GAME_HPP_
#define RSG_GAME_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace rsg {

using PlayerId = int;
using ResourceId = int;
using Cost = std::int64_t;

// A symmetric resource selection game: every player may pick any resource,
// and a player on resource r pays d_r(load of r). Each delay table holds
// d_r(1) .. d_r(n) and must be strictly increasing and non-negative.
class GameInstance {
 public:
  GameInstance(int players, std::vector<std::vector<Cost>> delays);

  // Same table for every resource.
  static GameInstance identical(int players, int resources,
                                std::span<const Cost> table);
  // d_r(x) = x on every resource.
  static GameInstance linear(int players, int resources);

  int players() const { return players_; }
  int resources() const { return static_cast<int>(delays_.size()); }

  // d_r(load); load must be in [1, players()].
  Cost delay(ResourceId r, int load) const;

  // d_r(load) with the convention that an empty resource contributes 0.
  Cost delay_or_zero(ResourceId r, int load) const {
    return load == 0 ? 0 : delay(r, load);
  }

  std::span<const Cost> table(ResourceId r) const;

  // Sum over resources of d_r(n); the potential's big weight must exceed it.
  Cost max_delay_sum() const;

  friend bool operator==(const GameInstance&, const GameInstance&) = default;

 private:
  int players_;
  std::vector<std::vector<Cost>> delays_;
};

// Assignment of every player to one resource.
struct State {
  std::vector<ResourceId> assignment;

  State() = default;
  explicit State(std::vector<ResourceId> a) : assignment(std::move(a)) {}

  int size() const { return static_cast<int>(assignment.size()); }
  ResourceId operator[](PlayerId i) const { return assignment[i]; }
  ResourceId& operator[](PlayerId i) { return assignment[i]; }

  friend auto operator<=>(const State&, const State&) = default;
};

struct LoadProfile {
  std::vector<int> loads;

  int operator[](ResourceId r) const { return loads[r]; }
  friend bool operator==(const LoadProfile&, const LoadProfile&) = default;
};

// Throws ContractError unless `state` has one valid resource per player.
void validate_state(const GameInstance& instance, const State& state);

LoadProfile load_profile(const GameInstance& instance, const State& state);

// d_{s_i}(load of s_i).
Cost player_cost(const GameInstance& instance, const State& state,
                 PlayerId player);
Cost player_cost(const GameInstance& instance, const State& state,
                 const LoadProfile& loads, PlayerId player);

// Sum of all player costs, computed as sum over used r of l_r * d_r(l_r).
Cost total_cost(const GameInstance& instance, const State& state);

}  // namespace rsg

#endif  // RSG_GAME_HPP_
