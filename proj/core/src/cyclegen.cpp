#include "rsg/cyclegen.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "rsg/error.hpp"
#include "rsg/io.hpp"

namespace rsg::cycle {
namespace {

constexpr int kNamedRoles = 8;

// Slots (1..5) of B C D E F G P Q, then the six dummies.
constexpr std::array<std::array<int, kPlayersPerBlock>, 10> kPlacement = {{
    /* alpha  */ {2, 1, 2, 1, 3, 2, 4, 5, 1, 3, 4, 4, 5, 5},
    /* beta   */ {2, 1, 3, 1, 3, 2, 4, 5, 1, 3, 4, 4, 5, 5},
    /* gamma  */ {2, 2, 3, 1, 3, 2, 4, 5, 1, 3, 4, 4, 5, 5},
    /* gamma1 */ {2, 2, 4, 1, 3, 2, 3, 5, 1, 3, 4, 4, 5, 5},
    /* gamma2 */ {3, 2, 4, 1, 3, 2, 2, 5, 1, 3, 4, 4, 5, 5},
    /* delta  */ {3, 2, 2, 1, 3, 2, 4, 5, 1, 3, 4, 4, 5, 5},
    /* eps    */ {3, 2, 1, 1, 3, 2, 4, 5, 1, 3, 4, 4, 5, 5},
    /* zeta   */ {2, 2, 1, 1, 3, 2, 4, 5, 1, 3, 4, 4, 5, 5},
    /* zeta1  */ {2, 2, 5, 1, 3, 2, 4, 1, 1, 3, 4, 4, 5, 5},
    /* zeta2  */ {2, 1, 5, 1, 3, 2, 4, 2, 1, 3, 4, 4, 5, 5},
}};

// Members of `block` in `roles`, each sent to its slot in `to`.
void transition(std::vector<std::pair<PlayerId, ResourceId>>& moves,
                int block, Phase to, std::initializer_list<Role> roles) {
  const auto& slots = kPlacement[static_cast<int>(to)];
  for (Role role : roles) {
    moves.emplace_back(player(role, block),
                       resource(block, slots[static_cast<int>(role)]));
  }
}

void add_clique(SocialGraph& graph, const PlayerSet& members) {
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      graph.add_edge(members[a], members[b]);
    }
  }
}

PlayerSet sorted(std::initializer_list<PlayerId> ids) {
  PlayerSet out(ids);
  std::sort(out.begin(), out.end());
  return out;
}

// Appends the block name after every "player <id>" in `text`.
std::string annotate(const std::string& text) {
  std::string out;
  const std::string key = "player ";
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = text.find(key, pos);
    if (hit == std::string::npos) break;
    std::size_t end = hit + key.size();
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    out.append(text, pos, end - pos);
    if (end > hit + key.size()) {
      const int id = std::stoi(text.substr(hit + key.size(), end - hit - key.size()));
      if (id >= 0 && id < kPlayers) out += " (" + player_name(id) + ")";
    }
    pos = end;
  }
  out.append(text, pos, std::string::npos);
  return out;
}

}  // namespace

int wrap_block(int block) {
  return ((block - 1) % kBlocks + kBlocks) % kBlocks + 1;
}

PlayerId player(Role role, int block) {
  if (role == Role::kDummy) throw ContractError("address dummies by index");
  return (wrap_block(block) - 1) * kPlayersPerBlock + static_cast<int>(role);
}

PlayerId dummy(int index, int block) {
  if (index < 0 || index >= kDummiesPerBlock) {
    throw ContractError("dummy index out of range");
  }
  return (wrap_block(block) - 1) * kPlayersPerBlock + kNamedRoles + index;
}

ResourceId resource(int block, int slot) {
  if (slot < 1 || slot > kResourcesPerBlock) {
    throw ContractError("resource slot out of range");
  }
  return (wrap_block(block) - 1) * kResourcesPerBlock + slot - 1;
}

int block_of(PlayerId p) { return p / kPlayersPerBlock + 1; }

Role role_of(PlayerId p) {
  const int offset = p % kPlayersPerBlock;
  return offset < kNamedRoles ? static_cast<Role>(offset) : Role::kDummy;
}

std::string player_name(PlayerId p) {
  static constexpr const char* kNames[] = {"B", "C", "D", "E",
                                           "F", "G", "P", "Q"};
  const int offset = p % kPlayersPerBlock;
  const std::string block = std::to_string(block_of(p));
  if (offset < kNamedRoles) return std::string(kNames[offset]) + "^" + block;
  return "x" + std::to_string(offset - kNamedRoles) + "^" + block;
}

std::array<int, kPlayersPerBlock> placement(Phase phase) {
  return kPlacement[static_cast<int>(phase)];
}

std::string_view phase_name(Phase phase) {
  static constexpr std::string_view kNames[] = {
      "alpha", "beta", "gamma", "gamma1", "gamma2",
      "delta", "epsilon", "zeta", "zeta1", "zeta2"};
  return kNames[static_cast<int>(phase)];
}

PlayerSet p_clique(int j) {
  return sorted({player(Role::kD, j), player(Role::kP, j),
                 player(Role::kP, j + 1), player(Role::kB, j + 1),
                 player(Role::kD, j + 2), player(Role::kP, j + 2),
                 player(Role::kC, j + 6), player(Role::kE, j + 6)});
}

PlayerSet q_clique(int j) {
  return sorted({player(Role::kD, j), player(Role::kQ, j),
                 player(Role::kQ, j + 1), player(Role::kC, j + 1),
                 player(Role::kD, j + 2), player(Role::kQ, j + 2),
                 player(Role::kB, j + 9), player(Role::kF, j + 9)});
}

std::array<Phase, kBlocks> starting_phases() {
  using enum Phase;
  return {kZeta2, kZeta1, kZeta,  kZeta,    kZeta,   kZeta,   kZeta,
          kZeta,  kZeta,  kEpsilon, kDelta, kGamma2, kGamma1, kGamma,
          kGamma, kGamma, kGamma, kBeta,    kAlpha};
}

State state_from_phases(std::span<const Phase> phases) {
  if (phases.size() != kBlocks) throw ContractError("need one phase per block");
  State state{std::vector<ResourceId>(kPlayers)};
  for (int b = 1; b <= kBlocks; ++b) {
    const auto& slots = kPlacement[static_cast<int>(phases[b - 1])];
    for (int k = 0; k < kPlayersPerBlock; ++k) {
      state[(b - 1) * kPlayersPerBlock + k] = resource(b, slots[k]);
    }
  }
  return state;
}

std::vector<Deviation> rotation_moves(int t) {
  using enum Role;
  std::vector<Deviation> out;
  {
    // Zeta reset through Q, paid for by B^{j+9} (epsilon -> zeta).
    const int j = 1 + t;
    std::vector<std::pair<PlayerId, ResourceId>> m;
    transition(m, j, Phase::kAlpha, {kD, kQ});
    transition(m, j + 1, Phase::kZeta2, {kQ, kC});
    transition(m, j + 2, Phase::kZeta1, {kD, kQ});
    transition(m, j + 9, Phase::kZeta, {kB, kF});
    out.emplace_back(std::move(m));
  }
  {
    // Gamma reset through P, paid for by C^{j+6} (beta -> gamma).
    const int j = 12 + t;
    std::vector<std::pair<PlayerId, ResourceId>> m;
    transition(m, j, Phase::kDelta, {kD, kP});
    transition(m, j + 1, Phase::kGamma2, {kP, kB});
    transition(m, j + 2, Phase::kGamma1, {kD, kP});
    transition(m, j + 6, Phase::kGamma, {kC, kE});
    out.emplace_back(std::move(m));
  }
  {
    std::vector<std::pair<PlayerId, ResourceId>> m;
    transition(m, 11 + t, Phase::kEpsilon, {kD, kG});
    out.emplace_back(std::move(m));
  }
  {
    std::vector<std::pair<PlayerId, ResourceId>> m;
    transition(m, 19 + t, Phase::kBeta, {kD, kG});
    out.emplace_back(std::move(m));
  }
  return out;
}

CycleConstruction build_cycle_instance(std::span<const Cost> table) {
  if (static_cast<int>(table.size()) != kPlayers) {
    throw ContractError("cycle delay table needs one entry per player count");
  }
  SocialGraph graph(kPlayers);
  for (int b = 1; b <= kBlocks; ++b) {
    graph.add_edge(player(Role::kB, b), player(Role::kF, b));
    graph.add_edge(player(Role::kC, b), player(Role::kE, b));
    graph.add_edge(player(Role::kD, b), player(Role::kG, b));
  }
  for (int j = 1; j <= kBlocks; ++j) {
    add_clique(graph, p_clique(j));
    add_clique(graph, q_clique(j));
  }
  std::vector<Deviation> schedule;
  for (int t = 0; t < kBlocks; ++t) {
    for (Deviation& d : rotation_moves(t)) schedule.push_back(std::move(d));
  }
  const auto phases = starting_phases();
  return CycleConstruction{
      GameInstance::identical(kPlayers, kResources, table), std::move(graph),
      state_from_phases(phases), std::move(schedule), 4};
}

CycleConstruction build_cycle_instance() {
  std::vector<Cost> table(kPlayers);
  for (int x = 1; x <= kPlayers; ++x) table[x - 1] = x;
  return build_cycle_instance(table);
}

std::string manifest(const CycleConstruction& construction) {
  std::string out;
  for (PlayerId p = 0; p < construction.instance.players(); ++p) {
    out += "player " + std::to_string(p) + " = " + player_name(p) + "\n";
  }
  for (ResourceId r = 0; r < construction.instance.resources(); ++r) {
    out += "resource " + std::to_string(r) + " = r^" +
           std::to_string(r / kResourcesPerBlock + 1) + "_" +
           std::to_string(r % kResourcesPerBlock + 1) + "\n";
  }
  return out;
}

std::size_t default_replay_steps() {
  return 2 * static_cast<std::size_t>(kBlocks) * 4;
}

CycleCertificate replay_and_certify(const CycleConstruction& construction,
                                    std::size_t max_steps) {
  const std::size_t period = construction.schedule.size();
  ScriptedScheduler scheduler;
  const std::size_t copies = std::max<std::size_t>(1, (max_steps + period - 1) / period);
  for (std::size_t c = 0; c < copies; ++c) {
    scheduler.schedule.insert(scheduler.schedule.end(),
                              construction.schedule.begin(),
                              construction.schedule.end());
  }
  DynamicsOptions options;
  options.max_steps = max_steps;

  CycleCertificate cert;
  cert.trace = run_dynamics(construction.instance, construction.graph,
                            construction.start, scheduler, options);
  const Outcome& outcome = cert.trace.outcome;
  cert.moves_checked = cert.trace.steps.size();
  switch (outcome.kind) {
    case OutcomeKind::kCycle:
      cert.certified = true;
      cert.first_repeat_index = outcome.first_repeat_index;
      cert.period = outcome.period;
      cert.rotations = outcome.period / construction.moves_per_rotation;
      break;
    case OutcomeKind::kInvalidMove: {
      const Deviation& bad = scheduler.schedule[outcome.invalid_index];
      cert.diagnostic = "move " + std::to_string(outcome.invalid_index) +
                        " [" + io::format_move(bad) +
                        "] rejected: " + annotate(outcome.diagnostic);
      break;
    }
    default:
      cert.diagnostic = format_outcome(outcome) +
                        (outcome.diagnostic.empty() ? "" : ": " + outcome.diagnostic);
      break;
  }
  return cert;
}

CycleCertificate replay_and_certify(std::size_t max_steps) {
  return replay_and_certify(build_cycle_instance(), max_steps);
}

}  // namespace rsg::cycle
