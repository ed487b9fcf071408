#ifndef RSG_ORACLE_HPP_
#define RSG_ORACLE_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsg/game.hpp"
#include "rsg/moves.hpp"
#include "rsg/social.hpp"

namespace rsg {

// Exhaustive ground truth for small instances. Every search visits
// coalitions ordered by size and then lexicographically, and replacement
// vectors lexicographically, so reported witnesses are deterministic.
//
// A member can only take part in a weak improving move by switching to a
// resource whose delay, even with every other member of the coalition gone
// from it, does not exceed the member's current cost. Targets failing this
// test are skipped; the deviation budget counts the vectors that remain.

struct SearchBudget {
  std::size_t max_cliques = kDefaultCliqueCap;
  std::uint64_t max_deviations = 10'000'000;
};

// Returns the first weak considerate improving move of a clique coalition,
// or nullopt if none exists. Throws BudgetExceeded instead of truncating.
std::optional<Deviation> find_weak_considerate_clique_move(
    const GameInstance& instance, const SocialGraph& graph, const State& state,
    const SearchBudget& budget = {});

// Calls `visit` for every weak considerate improving clique move in search
// order until it returns false. Returns the number of moves visited.
std::size_t for_each_weak_considerate_clique_move(
    const GameInstance& instance, const SocialGraph& graph, const State& state,
    const SearchBudget& budget,
    const std::function<bool(const Deviation&)>& visit);

enum class Verdict { kYes, kNo, kUnknown };

enum class Notion {
  kNash,                   // NE: no unilateral improving move
  kConsiderateNash,        // CNE: no unilateral considerate improving move
  kStrong,                 // SE: no improving move of any coalition
  kSuperStrong,            // SSE: no weak improving move of any coalition
  kStrongConsiderate,      // SCE: no considerate improving move of a clique
  kConsiderate,            // CE: no weak considerate improving clique move
  kPartition,              // no weak improving move of a partition class
};

inline constexpr std::array<Notion, 7> kAllNotions = {
    Notion::kNash,    Notion::kConsiderateNash,   Notion::kStrong,
    Notion::kSuperStrong, Notion::kStrongConsiderate, Notion::kConsiderate,
    Notion::kPartition};

std::string_view notion_name(Notion notion);
std::string_view verdict_name(Verdict verdict);

struct NotionResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<Deviation> witness;  // set when verdict == kNo
};

struct EquilibriumReport {
  std::array<NotionResult, kAllNotions.size()> results;
  // False when the graph is not a disjoint union of cliques; the partition
  // notion is then kUnknown.
  bool partition_applicable = false;

  const NotionResult& at(Notion n) const {
    return results[static_cast<std::size_t>(n)];
  }
  NotionResult& at(Notion n) { return results[static_cast<std::size_t>(n)]; }
  Verdict verdict(Notion n) const { return at(n).verdict; }

  // Implications that must hold between decided verdicts; returns the
  // violated ones, e.g. "SSE=>SE".
  std::vector<std::string> lattice_violations() const;
};

struct ClassifyOptions {
  // SE and SSE quantify over all 2^n - 1 coalitions; without this they are
  // reported as kUnknown.
  bool all_subsets = true;
  SearchBudget budget;
};

// Exact within the budget; notions the budget did not allow deciding are
// kUnknown.
EquilibriumReport classify_state(const GameInstance& instance,
                                 const SocialGraph& graph, const State& state,
                                 const ClassifyOptions& options = {});

// Quantities of the existence argument for one weak considerate improving
// clique move `dev` at a Nash equilibrium `state`.
struct DeviationAnalysis {
  Cost d_max = 0;
  std::vector<ResourceId> high;       // H
  std::vector<ResourceId> low;        // L
  std::vector<ResourceId> high_lost;  // R_h: high in s, not high afterwards
  std::vector<ResourceId> low_gained; // R_l: low in s, high afterwards
  PlayerSet members_on_high_lost;     // N_h
  PlayerSet members_on_low_gained;    // N_l
  std::optional<int> max_h;           // max_{i in N_h} |N_i(s)|
  std::optional<int> min_l;           // min_{i in N_h, r in R_l} |N_{i,r}(s)|
  int members_leaving_high_lost = 0;  // members moving from R_h out of R_h
  // Case 2 (max_h <= min_l) only.
  bool case_two = false;
  int q = 0;
  int k = 0;
};

// Computes every field and checks the structural relations of the existence
// argument (|N_h| >= |N_l| + |R_l|, |N_h| <= (max_h + 1)|R_h|,
// |N_l| >= min_l |R_l|, |R_h| <= |R_l|, the load accounting of H \ R_h, and
// the Case 2 equalities). Throws ContractError naming the first failed
// precondition or relation.
DeviationAnalysis analyze_deviation(const GameInstance& instance,
                                    const SocialGraph& graph,
                                    const State& state, const Deviation& dev);

}  // namespace rsg

#endif  // RSG_ORACLE_HPP_
