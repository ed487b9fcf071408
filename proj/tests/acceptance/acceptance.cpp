// Acceptance gate. One PASS/FAIL line per criterion; nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "rsg/cyclegen.hpp"
#include "rsg/dynamics.hpp"
#include "rsg/error.hpp"
#include "rsg/generate.hpp"
#include "rsg/io.hpp"
#include "rsg/oracle.hpp"
#include "rsg/solver.hpp"

using namespace rsg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool contains(const std::vector<ResourceId>& v, ResourceId r) {
  return std::find(v.begin(), v.end(), r) != v.end();
}

// Solver runs shared by criteria 1-3.
struct SolverRun {
  GameInstance instance;
  SocialGraph graph;
  SolveResult result;
};

const char* kSolverGraphs[] = {"empty", "gnp:0.2", "gnp:0.5", "gnp:0.8",
                               "cliques:2", "cliques:3"};

std::vector<SolverRun> solver_runs;
double solver_seconds = 0;

void criterion_solver() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  int ne_fail = 0, ce_fail = 0, budget = 0;
  std::string first;
  for (int k = 0; k < 500; ++k) {
    const int n = 1 + rng() % 10, m = 1 + rng() % 5;
    const auto spec = GraphSpec::parse(kSolverGraphs[k % 6]);
    auto game = gen_random(n, m, 100, spec, rng());
    auto result = solve_ce(game.instance, game.graph);
    const State& s = result.final_state;
    if (brute::has_unilateral_improvement(game.instance, s.assignment)) {
      ++ne_fail;
      if (first.empty()) first = io::format_instance(game.instance, game.graph);
    }
    try {
      if (find_weak_considerate_clique_move(game.instance, game.graph, s)) {
        ++ce_fail;
        if (first.empty()) first = io::format_instance(game.instance, game.graph);
      }
    } catch (const BudgetExceeded&) {
      ++budget;
    }
    solver_runs.push_back({game.instance, game.graph, std::move(result)});
  }
  solver_seconds = seconds_since(t0);
  const bool ok = ne_fail == 0 && ce_fail == 0 && budget == 0 && solver_seconds < 300;
  report(1, "solver output is NE and CE", ok,
         fmt("500 instances, NE failures %d, CE failures %d, oracle budget hits %d, %.1fs",
             ne_fail, ce_fail, budget, solver_seconds));
  if (!first.empty()) std::printf("  first failing instance:\n%s", first.c_str());
}

void criterion_potential() {
  int violations = 0;
  std::int64_t iterations = 0;
  for (const auto& run : solver_runs) {
    const auto cfg = SolverConfig::for_instance(run.instance, run.graph);
    std::int64_t prev = potential_phi(run.instance, run.graph, run.result.initial, cfg);
    if (prev != run.result.phi_start) ++violations;
    for (const auto& step : run.result.trace) {
      const std::int64_t phi = potential_phi(run.instance, run.graph, step.state, cfg);
      if (phi != step.phi || phi >= prev) ++violations;
      prev = phi;
    }
    if (run.result.iterations() > run.result.phi_start - run.result.phi_end) ++violations;
    iterations += run.result.iterations();
  }
  report(2, "potential strictly decreases", violations == 0,
         fmt("%lld witness iterations re-evaluated, violations %d",
             static_cast<long long>(iterations), violations));
}

void criterion_nash_preserved() {
  int violations = 0;
  std::size_t states = 0;
  for (const auto& run : solver_runs) {
    ++states;
    if (brute::has_unilateral_improvement(run.instance, run.result.initial.assignment))
      ++violations;
    for (const auto& step : run.result.trace) {
      ++states;
      if (brute::has_unilateral_improvement(run.instance, step.state.assignment))
        ++violations;
    }
  }
  report(3, "every solver state is NE", violations == 0,
         fmt("%zu states checked, violations %d", states, violations));
}

// Random NE-preserving perturbation: swaps keep loads; single moves are kept
// only when the result is still an NE.
State perturb(const GameInstance& g, State s, std::mt19937_64& rng) {
  const int n = g.players(), m = g.resources();
  const int steps = rng() % 6;
  for (int k = 0; k < steps; ++k) {
    if (rng() % 2 == 0) {
      std::swap(s.assignment[rng() % n], s.assignment[rng() % n]);
    } else {
      const auto c = classify_resources(g, s);
      if (c.low.empty()) continue;
      std::vector<PlayerId> on_high;
      for (PlayerId i = 0; i < n; ++i)
        if (c.is_high(s[i])) on_high.push_back(i);
      State t = s;
      t[on_high[rng() % on_high.size()]] = c.low[rng() % c.low.size()];
      if (is_nash_equilibrium(g, t)) s = t;
    }
  }
  (void)m;
  return s;
}

struct NashSample {
  GameInstance instance;
  SocialGraph graph;
  State state;
};

std::vector<NashSample> nash_samples;

// Large cliques at n = 10 can exceed the default search; such draws are not
// states where the oracle finds a move, so they are skipped and counted.
const SearchBudget kSampleBudget{kDefaultCliqueCap, 2'000'000};
const SearchBudget kEnumerationBudget{kDefaultCliqueCap, 100'000'000};

void criterion_witness() {
  std::mt19937_64 rng(2002);
  int misses = 0, attempts = 0, step2 = 0, step3 = 0, undecided = 0;
  std::string first;
  while (nash_samples.size() < 200 && attempts < 200000) {
    ++attempts;
    const int n = 2 + rng() % 9, m = 2 + rng() % 4;
    const double p = 0.3 + 0.7 * (rng() % 8) / 7.0;
    auto g = brute::random_game(rng, n, m, 2 * n);
    auto graph = brute::random_graph(rng, n, p);
    const State s = perturb(g, greedy_nash(g), rng);
    if (!is_nash_equilibrium(g, s)) continue;
    try {
      if (!find_weak_considerate_clique_move(g, graph, s, kSampleBudget)) continue;
    } catch (const BudgetExceeded&) {
      ++undecided;
      continue;
    }
    const auto w = find_witness_move(g, graph, s);
    if (!w) {
      ++misses;
      if (first.empty()) {
        first = io::format_instance(g, graph) + io::format_state(s) + "\n";
      }
    } else {
      (w->kind == WitnessKind::kStep2 ? step2 : step3)++;
    }
    nash_samples.push_back({std::move(g), std::move(graph), s});
  }
  const bool ok = misses == 0 && nash_samples.size() == 200;
  report(4, "witness exists whenever the oracle finds a move", ok,
         fmt("%zu NE states with oracle moves (%d draws, %d skipped on oracle budget), "
             "step-2 %d, step-3 %d, misses %d",
             nash_samples.size(), attempts, undecided, step2, step3, misses));
  if (!first.empty()) std::printf("  first miss:\n%s", first.c_str());
}

// Re-derives the proof quantities from the analysis fields and checks them
// without relying on the analysis' own assertions.
std::string check_analysis(const NashSample& x, const Deviation& d,
                           const DeviationAnalysis& a) {
  for (ResourceId r : a.high_lost)
    if (!contains(a.high, r)) return "R_h not within H";
  for (ResourceId r : a.low_gained)
    if (!contains(a.low, r)) return "R_l not within L";
  const int nh = a.members_on_high_lost.size(), nl = a.members_on_low_gained.size();
  const int rh = a.high_lost.size(), rl = a.low_gained.size();
  if (nh < nl + rl) return "|N_h| >= |N_l| + |R_l|";
  if (nh > (a.max_h.value_or(0) + 1) * rh) return "|N_h| <= (max_h+1)|R_h|";
  if (a.min_l && nl < *a.min_l * rl) return "|N_l| >= min_l |R_l|";
  if (rh > rl) return "|R_h| <= |R_l|";
  if (a.members_leaving_high_lost < nl + rl) return "departures from R_h";
  const State next = apply_deviation(x.instance, x.state, d);
  const Cost dmax_after = [&] {
    Cost v = 0;
    for (PlayerId i = 0; i < x.instance.players(); ++i)
      v = std::max(v, player_cost(x.instance, next, i));
    return v;
  }();
  if (dmax_after > a.d_max) return "max delay grew";
  if (a.case_two) {
    if (rh != rl) return "case 2 |R_h| = |R_l|";
    if (a.max_h != a.min_l) return "case 2 max_h = min_l";
    if (nh != nl + a.q) return "case 2 |N_h| = |N_l| + q";
  }
  return {};
}

void criterion_structure() {
  std::size_t moves = 0, case_two = 0;
  int violations = 0;
  std::string first;
  int truncated = 0;
  for (const auto& x : nash_samples) {
    try {
    for_each_weak_considerate_clique_move(
        x.instance, x.graph, x.state, kEnumerationBudget, [&](const Deviation& d) {
          ++moves;
          std::string why;
          try {
            const auto a = analyze_deviation(x.instance, x.graph, x.state, d);
            why = check_analysis(x, d, a);
            case_two += a.case_two;
          } catch (const ContractError& e) {
            why = e.what();
          }
          if (!why.empty()) {
            ++violations;
            if (first.empty()) first = why + " at " + io::format_move(d);
          }
          return true;
        });
    } catch (const BudgetExceeded&) {
      ++truncated;
    }
  }
  report(5, "structural equations hold on discovered moves",
         violations == 0 && moves > 0,
         fmt("%zu moves from %zu NE states (case 2: %zu, enumeration truncated in %d), "
             "violations %d%s%s", moves, nash_samples.size(), case_two, truncated, violations, first.empty() ? "" : "; first: ",
             first.c_str()));
}

void criterion_no_super_strong() {
  const auto g = GameInstance::linear(3, 2);
  const SocialGraph empty(3);
  int sse_yes = 0, se_yes = 0, ce_mismatch = 0, brute_mismatch = 0;
  for (int mask = 0; mask < 8; ++mask) {
    const State s{{mask & 1, mask >> 1 & 1, mask >> 2 & 1}};
    const auto rep = classify_state(g, empty, s);
    const auto want = brute::classify(g, empty, s.assignment);
    sse_yes += rep.verdict(Notion::kSuperStrong) == Verdict::kYes;
    se_yes += rep.verdict(Notion::kStrong) == Verdict::kYes;
    const bool ne = rep.verdict(Notion::kNash) == Verdict::kYes;
    const bool ce = rep.verdict(Notion::kConsiderate) == Verdict::kYes;
    ce_mismatch += ne != ce;
    brute_mismatch += (rep.verdict(Notion::kSuperStrong) == Verdict::kYes) != want.sse ||
                      (rep.verdict(Notion::kStrong) == Verdict::kYes) != want.se ||
                      ce != want.ce || ne != want.ne;
  }
  const bool ok = sse_yes == 0 && se_yes > 0 && ce_mismatch == 0 && brute_mismatch == 0;
  report(6, "three-player linear game has no SSE", ok,
         fmt("8 states: SSE=yes %d, SE=yes %d, CE/NE mismatches %d, brute disagreements %d",
             sse_yes, se_yes, ce_mismatch, brute_mismatch));
}

void criterion_cycle() {
  const auto t0 = Clock::now();
  const auto built = cycle::build_cycle_instance();
  // Round-trip through the on-disk formats before replaying.
  const auto file = io::parse_instance(io::format_instance(built.instance, built.graph));
  cycle::CycleConstruction c{
      file.instance, file.graph,
      io::parse_state(io::format_state(built.start), file.instance),
      io::parse_schedule(io::format_schedule(built.schedule)), built.moves_per_rotation};
  const auto cert = cycle::replay_and_certify(c, cycle::default_replay_steps());
  int bad = 0;
  for (std::size_t k = 0; k < cert.trace.steps.size(); ++k) {
    const auto mc = classify_move(c.instance, c.graph, cert.trace.state_at(k),
                                  cert.trace.steps[k].move);
    bad += !mc.weak_considerate_improving || !c.graph.is_clique(cert.trace.steps[k].move.coalition);
  }
  const bool repeat = cert.certified &&
                      cert.trace.state_at(cert.first_repeat_index) ==
                          cert.trace.state_at(cert.first_repeat_index + cert.period);
  const double secs = seconds_since(t0);
  const bool ok = cert.certified && repeat && bad == 0 && cert.rotations == 19 && secs < 60;
  report(7, "cycle construction certified", ok,
         fmt("%zu moves checked, invalid %d, first_repeat %zu, period %zu (%zu rotations), %.2fs%s%s",
             cert.moves_checked, bad, cert.first_repeat_index, cert.period, cert.rotations,
             secs, cert.diagnostic.empty() ? "" : "; ", cert.diagnostic.c_str()));
}

void criterion_partition() {
  std::mt19937_64 rng(3003);
  int not_converged = 0, non_decreasing = 0, not_pe = 0;
  std::size_t moves = 0, longest = 0;
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + rng() % 11, m = 2 + rng() % 4, size = 1 + rng() % 4;
    const auto g = GameInstance::linear(n, m);
    const auto graph = make_disjoint_cliques(n, size);
    const State start{brute::random_state(rng, n, m)};
    DynamicsOptions opts;
    opts.max_steps = 10'000;
    const auto t = run_dynamics(g, graph, start, RandomCliqueScheduler{rng()}, opts);
    if (t.outcome.kind != OutcomeKind::kConvergedCE) ++not_converged;
    longest = std::max(longest, t.steps.size());
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      ++moves;
      try {
        if (partition_move_check(g, graph, t.state_at(i), t.steps[i].move) >= 0)
          ++non_decreasing;
      } catch (const ContractError&) {
        ++non_decreasing;
      }
    }
    ClassifyOptions co;
    co.all_subsets = false;
    const State& last = t.steps.empty() ? t.initial : t.steps.back().state;
    if (classify_state(g, graph, last, co).verdict(Notion::kPartition) != Verdict::kYes)
      ++not_pe;
  }
  const bool ok = not_converged == 0 && non_decreasing == 0 && not_pe == 0;
  report(8, "partition dynamics terminate in partition equilibrium", ok,
         fmt("100 runs, %zu moves (longest run %zu), non-converged %d, "
             "non-decreasing class cost %d, final not PE %d",
             moves, longest, not_converged, non_decreasing, not_pe));
}

void criterion_lattice() {
  std::mt19937_64 rng(4004);
  const char* graphs[] = {"empty", "gnp:0.3", "gnp:0.6", "gnp:1", "cliques:2", "cliques:3"};
  int violations = 0, unknown = 0;
  std::string first;
  for (int k = 0; k < 1000; ++k) {
    const int n = 1 + rng() % 6, m = 1 + rng() % 4;
    const auto game = gen_random(n, m, 3 * n, GraphSpec::parse(graphs[k % 6]), rng());
    const State s{brute::random_state(rng, n, m)};
    const auto rep = classify_state(game.instance, game.graph, s);
    auto yes = [&](Notion x) { return rep.verdict(x) == Verdict::kYes; };
    for (Notion x : kAllNotions) {
      if (x == Notion::kPartition && !rep.partition_applicable) continue;
      unknown += rep.verdict(x) == Verdict::kUnknown;
    }
    bool bad = !rep.lattice_violations().empty();
    auto implies = [&](Notion a, Notion b) { bad |= yes(a) && !yes(b); };
    implies(Notion::kSuperStrong, Notion::kStrong);
    implies(Notion::kStrong, Notion::kNash);
    implies(Notion::kSuperStrong, Notion::kConsiderate);
    implies(Notion::kConsiderate, Notion::kConsiderateNash);
    implies(Notion::kNash, Notion::kConsiderateNash);
    implies(Notion::kStrong, Notion::kStrongConsiderate);
    implies(Notion::kConsiderate, Notion::kStrongConsiderate);
    implies(Notion::kStrongConsiderate, Notion::kConsiderateNash);
    if (rep.partition_applicable) bad |= yes(Notion::kPartition) != yes(Notion::kConsiderate);
    if (bad) {
      ++violations;
      if (first.empty()) first = io::format_instance(game.instance, game.graph) + io::format_state(s);
    }
  }
  report(9, "equilibrium lattice is consistent", violations == 0 && unknown == 0,
         fmt("1000 triples, violations %d, unknown verdicts %d", violations, unknown));
  if (!first.empty()) std::printf("  first violation:\n%s\n", first.c_str());
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {
      criterion_solver,    criterion_potential, criterion_nash_preserved,
      criterion_witness,   criterion_structure, criterion_no_super_strong,
      criterion_cycle,     criterion_partition, criterion_lattice};
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    try {
      criteria[k]();
    } catch (const std::exception& e) {
      report(static_cast<int>(k + 1), "criterion aborted", false, e.what());
    }
  }
  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
