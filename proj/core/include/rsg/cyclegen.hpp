#ifndef RSG_CYCLEGEN_HPP_
#define RSG_CYCLEGEN_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rsg/dynamics.hpp"
#include "rsg/game.hpp"
#include "rsg/moves.hpp"
#include "rsg/social.hpp"

namespace rsg::cycle {

// A ring of 19 blocks with 14 players and 5 resources each, wired so that
// weak considerate improving clique moves can run forever. Blocks are
// labelled 1..19 and any integer label wraps as ((j - 1) mod 19) + 1.
//
// Inside a block the named players B..Q walk through the phases
//   alpha -> beta -> gamma -> gamma1 -> gamma2 -> delta -> epsilon -> zeta
//         -> zeta1 -> zeta2 -> alpha
// where gamma -> delta swaps D and B through P and zeta -> alpha swaps D
// and C through Q. Six dummies never move.

inline constexpr int kBlocks = 19;
inline constexpr int kPlayersPerBlock = 14;
inline constexpr int kResourcesPerBlock = 5;
inline constexpr int kDummiesPerBlock = 6;
inline constexpr int kPlayers = kBlocks * kPlayersPerBlock;
inline constexpr int kResources = kBlocks * kResourcesPerBlock;

enum class Role { kB, kC, kD, kE, kF, kG, kP, kQ, kDummy };

enum class Phase {
  kAlpha,
  kBeta,
  kGamma,
  kGamma1,
  kGamma2,
  kDelta,
  kEpsilon,
  kZeta,
  kZeta1,
  kZeta2
};

int wrap_block(int block);

// Player id of a named role in `block`; dummies are addressed by index 0..5.
PlayerId player(Role role, int block);
PlayerId dummy(int index, int block);
// Resource r^block_slot, slot in 1..5.
ResourceId resource(int block, int slot);

int block_of(PlayerId p);
Role role_of(PlayerId p);
// "D^3", "x4^12", ...
std::string player_name(PlayerId p);

// Slot (1..5) of each of the 14 block players, in id order, in `phase`.
std::array<int, kPlayersPerBlock> placement(Phase phase);
std::string_view phase_name(Phase phase);

// {D^j, P^j, P^{j+1}, B^{j+1}, D^{j+2}, P^{j+2}, C^{j+6}, E^{j+6}}
PlayerSet p_clique(int j);
// {D^j, Q^j, Q^{j+1}, C^{j+1}, D^{j+2}, Q^{j+2}, B^{j+9}, F^{j+9}}
PlayerSet q_clique(int j);

// Block phases 1..19 of the starting state.
std::array<Phase, kBlocks> starting_phases();

struct CycleConstruction {
  GameInstance instance;
  SocialGraph graph;
  State start;
  std::vector<Deviation> schedule;  // one full period
  std::size_t moves_per_rotation = 4;
};

State state_from_phases(std::span<const Phase> phases);

// Moves that shift the phase pattern by one block, for rotation t (0-based):
//   1. Q-clique 1+t advances the zeta reset in blocks 1+t..3+t while B^{10+t}
//      moves (epsilon -> zeta),
//   2. P-clique 12+t advances the gamma reset in blocks 12+t..14+t while
//      C^{18+t} moves (beta -> gamma),
//   3. {D, G} in block 11+t: delta -> epsilon,
//   4. {D, G} in block 19+t: alpha -> beta.
std::vector<Deviation> rotation_moves(int t);

// d(x) = x on every resource.
CycleConstruction build_cycle_instance();
// Same construction with an arbitrary strictly increasing delay table
// shared by all resources (length kPlayers).
CycleConstruction build_cycle_instance(std::span<const Cost> table);

// "player <id> = <name>" lines.
std::string manifest(const CycleConstruction& construction);

struct CycleCertificate {
  bool certified = false;
  std::size_t moves_checked = 0;
  std::size_t first_repeat_index = 0;
  std::size_t period = 0;       // in moves
  std::size_t rotations = 0;    // period / moves_per_rotation
  std::string diagnostic;
  Trace trace;
};

// Two full periods.
std::size_t default_replay_steps();

// Replays the schedule (repeated as often as needed) through run_dynamics
// and certifies that every move is weak considerate improving and that a
// player-labelled state recurs.
CycleCertificate replay_and_certify(const CycleConstruction& construction,
                                    std::size_t max_steps);
CycleCertificate replay_and_certify(std::size_t max_steps);

}  // namespace rsg::cycle

#endif  // RSG_CYCLEGEN_HPP_
