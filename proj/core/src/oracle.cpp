#include "rsg/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rsg/error.hpp"
#include "rsg/solver.hpp"

namespace rsg {
namespace {

// Enumerates the replacement vectors of one coalition in lexicographic
// order and classifies each one incrementally. Only loads change, so a
// non-member neighbor is unharmed iff the load of its resource does not
// grow.
class DeviationEngine {
 public:
  DeviationEngine(const GameInstance& instance, const SocialGraph& graph,
                  const State& state, const SearchBudget& budget)
      : instance_(instance),
        graph_(graph),
        state_(state),
        loads_(load_profile(instance, state)),
        budget_(budget) {
    if (graph.players() != instance.players()) {
      throw ContractError("graph and game disagree on the player count");
    }
    costs_.resize(instance.players());
    for (PlayerId i = 0; i < instance.players(); ++i) {
      costs_[i] = player_cost(instance, state, loads_, i);
    }
  }

  std::uint64_t used() const { return used_; }

  // Calls visit(targets, move_class) for every non-identity vector that
  // survives the target filter; stops early when visit returns false.
  // Returns false if stopped early.
  template <typename Visit>
  bool run(const PlayerSet& coalition, Visit&& visit) {
    const int k = static_cast<int>(coalition.size());
    const int m = instance_.resources();

    std::vector<int> members_on(m, 0);
    std::vector<char> is_member(instance_.players(), 0);
    for (PlayerId i : coalition) {
      ++members_on[state_[i]];
      is_member[i] = 1;
    }
    std::vector<char> guarded(m, 0);
    for (PlayerId i : coalition) {
      for (PlayerId j : graph_.neighbors(i)) {
        if (!is_member[j]) guarded[state_[j]] = 1;
      }
    }
    std::vector<ResourceId> guarded_list;
    for (ResourceId r = 0; r < m; ++r) {
      if (guarded[r]) guarded_list.push_back(r);
    }

    std::vector<std::vector<ResourceId>> options(k);
    for (int a = 0; a < k; ++a) {
      const PlayerId i = coalition[a];
      for (ResourceId r = 0; r < m; ++r) {
        if (r == state_[i] ||
            instance_.delay(r, loads_[r] - members_on[r] + 1) <= costs_[i]) {
          options[a].push_back(r);
        }
      }
    }

    std::vector<int> load = loads_.loads;
    std::vector<int> pos(k, 0);
    std::vector<ResourceId> targets(k);
    int moved = 0;
    for (int a = 0; a < k; ++a) {
      targets[a] = options[a][0];
      const ResourceId cur = state_[coalition[a]];
      if (targets[a] != cur) {
        --load[cur];
        ++load[targets[a]];
        ++moved;
      }
    }

    while (true) {
      if (moved > 0) {
        if (++used_ > budget_.max_deviations) {
          throw BudgetExceeded("deviation search exceeded the budget of " +
                                   std::to_string(budget_.max_deviations),
                               used_);
        }
        MoveClass mc;
        bool all_strict = true, any_strict = false, none_worse = true;
        for (int a = 0; a < k; ++a) {
          const Cost after = instance_.delay(targets[a], load[targets[a]]);
          const Cost before = costs_[coalition[a]];
          if (after < before) any_strict = true;
          if (after >= before) all_strict = false;
          if (after > before) none_worse = false;
        }
        bool neighbors_ok = true;
        for (ResourceId r : guarded_list) {
          if (load[r] > loads_[r]) {
            neighbors_ok = false;
            break;
          }
        }
        mc.improving = all_strict;
        mc.weak_improving = none_worse && any_strict;
        mc.considerate_improving = mc.improving && neighbors_ok;
        mc.weak_considerate_improving = mc.weak_improving && neighbors_ok;
        if (!visit(targets, mc)) return false;
      }
      // Advance the odometer; the last member varies fastest.
      int a = k - 1;
      for (; a >= 0; --a) {
        const PlayerId i = coalition[a];
        const ResourceId cur = state_[i];
        const ResourceId old = targets[a];
        const bool wrap = pos[a] + 1 == static_cast<int>(options[a].size());
        pos[a] = wrap ? 0 : pos[a] + 1;
        const ResourceId next = options[a][pos[a]];
        --load[old];
        ++load[next];
        moved += (next != cur) - (old != cur);
        targets[a] = next;
        if (!wrap) break;
      }
      if (a < 0) return true;
    }
  }

 private:
  const GameInstance& instance_;
  const SocialGraph& graph_;
  const State& state_;
  LoadProfile loads_;
  std::vector<Cost> costs_;
  SearchBudget budget_;
  std::uint64_t used_ = 0;
};

Deviation make_deviation(const PlayerSet& coalition,
                         const std::vector<ResourceId>& targets) {
  Deviation dev;
  dev.coalition = coalition;
  dev.targets = targets;
  return dev;
}

// Non-empty subsets of {0..n-1} by size, then lexicographically.
template <typename Visit>
bool for_each_subset(int n, Visit&& visit) {
  PlayerSet current;
  for (int size = 1; size <= n; ++size) {
    current.resize(size);
    for (int a = 0; a < size; ++a) current[a] = a;
    while (true) {
      if (!visit(current)) return false;
      int a = size - 1;
      while (a >= 0 && current[a] == n - size + a) --a;
      if (a < 0) break;
      ++current[a];
      for (int b = a + 1; b < size; ++b) current[b] = current[b - 1] + 1;
    }
  }
  return true;
}

void require(bool ok, const std::string& check) {
  if (!ok) throw ContractError("deviation analysis: " + check + " violated");
}

}  // namespace

std::size_t for_each_weak_considerate_clique_move(
    const GameInstance& instance, const SocialGraph& graph, const State& state,
    const SearchBudget& budget,
    const std::function<bool(const Deviation&)>& visit) {
  DeviationEngine engine(instance, graph, state, budget);
  const CliqueSet cliques =
      enumerate_cliques(graph, instance.players(), budget.max_cliques);
  std::size_t count = 0;
  for (const PlayerSet& clique : cliques.cliques) {
    const bool go_on = engine.run(
        clique, [&](const std::vector<ResourceId>& targets, MoveClass mc) {
          if (!mc.weak_considerate_improving) return true;
          ++count;
          return visit(make_deviation(clique, targets));
        });
    if (!go_on) break;
  }
  return count;
}

std::optional<Deviation> find_weak_considerate_clique_move(
    const GameInstance& instance, const SocialGraph& graph, const State& state,
    const SearchBudget& budget) {
  std::optional<Deviation> found;
  for_each_weak_considerate_clique_move(instance, graph, state, budget,
                                        [&](const Deviation& dev) {
                                          found = dev;
                                          return false;
                                        });
  return found;
}

std::string_view notion_name(Notion notion) {
  switch (notion) {
    case Notion::kNash: return "NE";
    case Notion::kConsiderateNash: return "CNE";
    case Notion::kStrong: return "SE";
    case Notion::kSuperStrong: return "SSE";
    case Notion::kStrongConsiderate: return "SCE";
    case Notion::kConsiderate: return "CE";
    case Notion::kPartition: return "PE";
  }
  return "?";
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kUnknown: return "unknown";
  }
  return "?";
}

std::vector<std::string> EquilibriumReport::lattice_violations() const {
  struct Rule {
    Notion from, to;
  };
  static constexpr Rule kRules[] = {
      {Notion::kSuperStrong, Notion::kStrong},
      {Notion::kStrong, Notion::kNash},
      {Notion::kSuperStrong, Notion::kConsiderate},
      {Notion::kStrong, Notion::kStrongConsiderate},
      {Notion::kConsiderate, Notion::kStrongConsiderate},
      {Notion::kStrongConsiderate, Notion::kConsiderateNash},
      {Notion::kConsiderate, Notion::kConsiderateNash},
      {Notion::kNash, Notion::kConsiderateNash},
  };
  std::vector<std::string> out;
  for (const Rule& rule : kRules) {
    if (verdict(rule.from) == Verdict::kYes &&
        verdict(rule.to) == Verdict::kNo) {
      out.push_back(std::string(notion_name(rule.from)) + "=>" +
                    std::string(notion_name(rule.to)));
    }
  }
  if (partition_applicable) {
    const Verdict pe = verdict(Notion::kPartition);
    const Verdict ce = verdict(Notion::kConsiderate);
    if (pe != Verdict::kUnknown && ce != Verdict::kUnknown && pe != ce) {
      out.push_back("PE<=>CE");
    }
  }
  return out;
}

EquilibriumReport classify_state(const GameInstance& instance,
                                 const SocialGraph& graph, const State& state,
                                 const ClassifyOptions& options) {
  validate_state(instance, state);
  EquilibriumReport report;

  // Searches `coalitions` for the notions in `notions`; `accepts` picks the
  // move classes that refute each notion.
  struct Target {
    Notion notion;
    bool (*refutes)(const MoveClass&);
  };
  auto search = [&](auto&& enumerate, std::initializer_list<Target> targets) {
    try {
      DeviationEngine engine(instance, graph, state, options.budget);
      std::size_t open = targets.size();
      enumerate([&](const PlayerSet& coalition) {
        engine.run(coalition,
                   [&](const std::vector<ResourceId>& t, MoveClass mc) {
                     for (const Target& target : targets) {
                       auto& slot = report.at(target.notion);
                       if (!slot.witness && target.refutes(mc)) {
                         slot.witness = make_deviation(coalition, t);
                         slot.verdict = Verdict::kNo;
                         --open;
                       }
                     }
                     return open > 0;
                   });
        return open > 0;
      });
      for (const Target& target : targets) {
        if (!report.at(target.notion).witness) {
          report.at(target.notion).verdict = Verdict::kYes;
        }
      }
    } catch (const BudgetExceeded&) {
      for (const Target& target : targets) {
        if (!report.at(target.notion).witness) {
          report.at(target.notion).verdict = Verdict::kUnknown;
        }
      }
    }
  };
  auto improving = [](const MoveClass& mc) { return mc.improving; };
  auto weak = [](const MoveClass& mc) { return mc.weak_improving; };
  auto considerate = [](const MoveClass& mc) {
    return mc.considerate_improving;
  };
  auto weak_considerate = [](const MoveClass& mc) {
    return mc.weak_considerate_improving;
  };

  search(
      [&](auto&& visit) {
        for (PlayerId i = 0; i < instance.players(); ++i) {
          if (!visit(PlayerSet{i})) return;
        }
      },
      {{Notion::kNash, improving}, {Notion::kConsiderateNash, considerate}});

  search(
      [&](auto&& visit) {
        const CliqueSet cliques = enumerate_cliques(
            graph, instance.players(), options.budget.max_cliques);
        for (const PlayerSet& c : cliques.cliques) {
          if (!visit(c)) return;
        }
      },
      {{Notion::kStrongConsiderate, considerate},
       {Notion::kConsiderate, weak_considerate}});

  if (auto classes = partition_classes(graph)) {
    report.partition_applicable = true;
    std::stable_sort(classes->begin(), classes->end(),
                     [](const PlayerSet& a, const PlayerSet& b) {
                       if (a.size() != b.size()) return a.size() < b.size();
                       return a < b;
                     });
    search(
        [&](auto&& visit) {
          for (const PlayerSet& c : *classes) {
            if (!visit(c)) return;
          }
        },
        {{Notion::kPartition, weak}});
  }

  if (options.all_subsets) {
    search([&](auto&& visit) { for_each_subset(instance.players(), visit); },
           {{Notion::kStrong, improving}, {Notion::kSuperStrong, weak}});
  }
  return report;
}

DeviationAnalysis analyze_deviation(const GameInstance& instance,
                                    const SocialGraph& graph,
                                    const State& state, const Deviation& dev) {
  const ResourceClassification c = classify_resources(instance, state);
  if (!graph.is_clique(dev.coalition)) {
    throw ContractError("deviation analysis: coalition is not a clique");
  }
  if (!classify_move(instance, graph, state, dev).weak_considerate_improving) {
    throw ContractError(
        "deviation analysis: move is not weak considerate improving");
  }
  const State next = apply_deviation(instance, state, dev);
  const LoadProfile before = load_profile(instance, state);
  const LoadProfile after = load_profile(instance, next);
  const int m = instance.resources();

  DeviationAnalysis a;
  a.d_max = c.d_max;
  a.high = c.high;
  a.low = c.low;

  std::vector<char> high_after(m, 0), in_rh(m, 0), in_rl(m, 0);
  for (ResourceId r = 0; r < m; ++r) {
    high_after[r] =
        after[r] > 0 && instance.delay(r, after[r]) == c.d_max ? 1 : 0;
    require(after[r] == 0 || instance.delay(r, after[r]) <= c.d_max,
            "maximum delay does not grow");
  }
  for (ResourceId r : c.high) {
    if (!high_after[r]) {
      a.high_lost.push_back(r);
      in_rh[r] = 1;
    }
  }
  for (ResourceId r : c.low) {
    if (high_after[r]) {
      a.low_gained.push_back(r);
      in_rl[r] = 1;
    }
  }

  std::vector<int> members_on(m, 0);
  for (std::size_t idx = 0; idx < dev.coalition.size(); ++idx) {
    const PlayerId i = dev.coalition[idx];
    ++members_on[state[i]];
    if (in_rh[state[i]]) a.members_on_high_lost.push_back(i);
    if (in_rl[state[i]]) a.members_on_low_gained.push_back(i);
    if (in_rh[state[i]] && !in_rh[dev.targets[idx]]) {
      ++a.members_leaving_high_lost;
    }
  }
  for (PlayerId i : a.members_on_high_lost) {
    const int own = same_resource_neighbors(graph, state, i);
    a.max_h = a.max_h ? std::max(*a.max_h, own) : own;
    for (ResourceId r : a.low_gained) {
      const int there = same_resource_neighbors(graph, state, i, r);
      a.min_l = a.min_l ? std::min(*a.min_l, there) : there;
      require(there == members_on[r],
              "neighbors on R_l are coalition members");
    }
  }

  const int nh = static_cast<int>(a.members_on_high_lost.size());
  const int nl = static_cast<int>(a.members_on_low_gained.size());
  const int rh = static_cast<int>(a.high_lost.size());
  const int rl = static_cast<int>(a.low_gained.size());

  // Accounting: N_l empties R_l, |N_l| + |R_l| players arrive there from H, loads
  // on H \ R_h are unchanged, and at least |N_l| + |R_l| players leave R_h.
  int arrivals = 0;
  for (std::size_t idx = 0; idx < dev.coalition.size(); ++idx) {
    const PlayerId i = dev.coalition[idx];
    if (in_rl[state[i]]) {
      require(!in_rl[dev.targets[idx]], "N_l moves out of R_l");
    }
    if (in_rl[dev.targets[idx]] && !in_rl[state[i]]) {
      require(c.is_high(state[i]), "arrivals on R_l come from H");
      ++arrivals;
    }
  }
  require(arrivals == nl + rl, "|N_l| + |R_l| players arrive on R_l");
  for (ResourceId r : c.high) {
    if (!in_rh[r]) require(after[r] == before[r], "loads on H \\ R_h unchanged");
  }
  require(a.members_leaving_high_lost >= nl + rl,
          "at least |N_l| + |R_l| players leave R_h");

  require(nh >= nl + rl, "|N_h| >= |N_l| + |R_l|");
  require(nh <= (a.max_h.value_or(0) + 1) * rh, "|N_h| <= (max_h + 1)|R_h|");
  if (a.min_l) require(nl >= *a.min_l * rl, "|N_l| >= min_l |R_l|");
  require(rh <= rl, "|R_h| <= |R_l|");
  if (a.max_h && a.min_l) {
    require((*a.max_h + 1) * rh >= (*a.min_l + 1) * rl,
            "(max_h + 1)|R_h| >= (min_l + 1)|R_l|");
  }

  if (a.max_h && a.min_l && *a.max_h <= *a.min_l) {
    a.case_two = true;
    a.q = rh;
    a.k = *a.max_h;
    require(rh == rl, "case 2: |R_h| = |R_l|");
    require(*a.max_h == *a.min_l, "case 2: max_h = min_l");
    require(nh == nl + a.q, "case 2: |N_h| = |N_l| + q");
    require(nl % a.q == 0 && nh % a.q == 0, "case 2: occupancy divisible by q");
    for (ResourceId r : a.low_gained) {
      require(members_on[r] == nl / a.q,
              "case 2: each R_l resource holds |N_l|/q members");
    }
    for (ResourceId r : a.high_lost) {
      require(members_on[r] == nh / a.q,
              "case 2: each R_h resource holds |N_h|/q members");
    }
    for (PlayerId i : a.members_on_high_lost) {
      require(same_resource_neighbors(graph, state, i) == a.k,
              "case 2: |N_i(s)| = k on R_h");
      for (ResourceId r : a.low_gained) {
        require(same_resource_neighbors(graph, state, i, r) == a.k,
                "case 2: |N_{i,r'}(s)| = k on R_l");
      }
    }
  }
  return a;
}

}  // namespace rsg
