// rsg: command-line front end for the resource selection game toolkit.
//
//   rsg solve <instance> [--trace <file>] [--seed <u64>]
//   rsg verify <instance> <state> [--full] [--budget-cliques N] [--budget-devs N]
//   rsg dynamics <instance> <state> --scheduler scripted:<file>|random:<seed>|exhaustive
//                --max-steps N [--trace-out <file>]
//   rsg gen-cycle --out <dir> [--certify]
//   rsg gen-random --players N --resources M --delay-max D --graph <spec> [--seed S]
//
// Exit codes: 0 success, 2 usage/parse, 3 contract violation, 4 budget.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rsg/cyclegen.hpp"
#include "rsg/dynamics.hpp"
#include "rsg/error.hpp"
#include "rsg/generate.hpp"
#include "rsg/io.hpp"
#include "rsg/oracle.hpp"
#include "rsg/solver.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitContract = 3;
constexpr int kExitBudget = 4;

struct BudgetFlags {
  std::size_t cliques = rsg::SearchBudget{}.max_cliques;
  std::uint64_t deviations = rsg::SearchBudget{}.max_deviations;

  void attach(CLI::App* app) {
    app->add_option("--budget-cliques", cliques, "Clique enumeration cap");
    app->add_option("--budget-devs", deviations, "Deviation search cap");
  }
  rsg::SearchBudget get() const { return {cliques, deviations}; }
};

int run_solve(const std::string& instance_path, const std::string& trace_path,
              const BudgetFlags& budget) {
  const auto file = rsg::io::parse_instance(rsg::io::read_file(instance_path));
  const auto config = rsg::SolverConfig::for_instance(file.instance, file.graph);
  const rsg::SolveResult result = rsg::solve_ce(file.instance, file.graph, config);

  if (!trace_path.empty()) {
    std::string out = "start " + rsg::io::format_state(result.initial) +
                      " phi " + std::to_string(result.phi_start) + "\n";
    for (std::size_t k = 0; k < result.trace.size(); ++k) {
      const auto& s = result.trace[k];
      out += "iter " + std::to_string(k + 1) + " " +
             (s.move.kind == rsg::WitnessKind::kStep2 ? "step2" : "step3") +
             " player " + std::to_string(s.move.player) + " " +
             std::to_string(s.move.from) + " -> " + std::to_string(s.move.to) +
             " phi " + std::to_string(s.phi) + "\n";
    }
    rsg::io::write_file(trace_path, out);
  }

  const bool ne = rsg::is_nash_equilibrium(file.instance, result.final_state);
  std::string ce = "unknown";
  try {
    ce = rsg::find_weak_considerate_clique_move(file.instance, file.graph,
                                                result.final_state, budget.get())
             ? "no"
             : "yes";
  } catch (const rsg::BudgetExceeded&) {
    std::cerr << "note: CE check skipped, oracle budget exceeded\n";
  }
  std::cout << rsg::io::format_state(result.final_state) << "\n";
  std::cout << "result NE=" << (ne ? "yes" : "no") << " CE=" << ce
            << " iterations=" << result.iterations()
            << " phi_start=" << result.phi_start
            << " phi_end=" << result.phi_end << "\n";
  return 0;
}

int run_verify(const std::string& instance_path, const std::string& state_path,
               bool full, const BudgetFlags& budget) {
  const auto file = rsg::io::parse_instance(rsg::io::read_file(instance_path));
  const rsg::State state =
      rsg::io::parse_state(rsg::io::read_file(state_path), file.instance);
  rsg::ClassifyOptions options;
  options.all_subsets = full;
  options.budget = budget.get();
  const auto report = rsg::classify_state(file.instance, file.graph, state, options);
  for (rsg::Notion notion : rsg::kAllNotions) {
    const auto& r = report.at(notion);
    std::cout << rsg::notion_name(notion) << ' ' << rsg::verdict_name(r.verdict);
    if (r.witness) std::cout << " witness: " << rsg::io::format_move(*r.witness);
    std::cout << "\n";
  }
  return 0;
}

rsg::Scheduler parse_scheduler(const std::string& spec) {
  if (spec == "exhaustive") return rsg::ExhaustiveFirstScheduler{};
  if (spec.rfind("scripted:", 0) == 0) {
    return rsg::ScriptedScheduler{
        rsg::io::parse_schedule(rsg::io::read_file(spec.substr(9)))};
  }
  if (spec.rfind("random:", 0) == 0) {
    try {
      std::size_t used = 0;
      const std::string arg = spec.substr(7);
      const std::uint64_t seed = std::stoull(arg, &used);
      if (used == arg.size()) return rsg::RandomCliqueScheduler{seed};
    } catch (const std::exception&) {
    }
  }
  throw rsg::ParseError("scheduler '" + spec +
                        "' is not scripted:<file>, random:<seed> or exhaustive");
}

int run_dynamics(const std::string& instance_path, const std::string& state_path,
                 const std::string& scheduler_spec, std::size_t max_steps,
                 const std::string& trace_out, const BudgetFlags& budget) {
  const auto file = rsg::io::parse_instance(rsg::io::read_file(instance_path));
  const rsg::State state =
      rsg::io::parse_state(rsg::io::read_file(state_path), file.instance);
  rsg::DynamicsOptions options;
  options.max_steps = max_steps;
  options.budget = budget.get();
  const rsg::Trace trace = rsg::run_dynamics(
      file.instance, file.graph, state, parse_scheduler(scheduler_spec), options);

  std::string lines;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    lines += "step " + std::to_string(k + 1) + " " +
             rsg::io::format_move(trace.steps[k].move) + " -> " +
             rsg::io::format_state(trace.steps[k].state) + "\n";
  }
  lines += rsg::format_outcome(trace.outcome) + "\n";
  if (trace_out.empty()) {
    std::cout << lines;
  } else {
    rsg::io::write_file(trace_out, lines);
    std::cout << rsg::format_outcome(trace.outcome) << "\n";
  }
  // The outcome line is always written; the exit code tells scripts whether
  // the run ended on a budget or a rejected scripted move.
  switch (trace.outcome.kind) {
    case rsg::OutcomeKind::kBudgetExhausted:
      std::cerr << "error budget: "
                << (trace.outcome.diagnostic.empty() ? "step limit reached"
                                                     : trace.outcome.diagnostic)
                << "\n";
      return kExitBudget;
    case rsg::OutcomeKind::kInvalidMove:
      std::cerr << "error contract: " << trace.outcome.diagnostic << "\n";
      return kExitContract;
    default:
      return 0;
  }
}

int run_gen_cycle(const std::string& out_dir, bool certify) {
  namespace fs = std::filesystem;
  const auto construction = rsg::cycle::build_cycle_instance();
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  rsg::io::write_file((dir / "instance.txt").string(),
                      rsg::io::format_instance(construction.instance,
                                               construction.graph));
  rsg::io::write_file((dir / "state.txt").string(),
                      rsg::io::format_state(construction.start) + "\n");
  rsg::io::write_file((dir / "schedule.txt").string(),
                      rsg::io::format_schedule(construction.schedule));
  rsg::io::write_file((dir / "manifest.txt").string(),
                      rsg::cycle::manifest(construction));
  std::cout << "wrote " << construction.instance.players() << " players, "
            << construction.instance.resources() << " resources, "
            << construction.graph.edge_count() << " edges, "
            << construction.schedule.size() << " scheduled moves to "
            << out_dir << "\n";
  if (certify) {
    const auto cert = rsg::cycle::replay_and_certify(
        construction, rsg::cycle::default_replay_steps());
    std::cout << "certificate certified=" << (cert.certified ? "yes" : "no")
              << " moves=" << cert.moves_checked
              << " first_repeat=" << cert.first_repeat_index
              << " period=" << cert.period << " rotations=" << cert.rotations
              << "\n";
    if (!cert.certified) {
      throw rsg::ContractError("cycle not certified: " + cert.diagnostic);
    }
  }
  return 0;
}

int run_gen_random(int players, int resources, rsg::Cost delay_max,
                   const std::string& graph, std::uint64_t seed,
                   const std::string& out) {
  const auto game = rsg::gen_random(players, resources, delay_max,
                                    rsg::GraphSpec::parse(graph), seed);
  const std::string text = rsg::io::format_instance(game.instance, game.graph);
  if (out.empty()) {
    std::cout << text;
  } else {
    rsg::io::write_file(out, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Considerate equilibria in resource selection games"};
  app.set_version_flag("--version", std::string("rsg ") + RSG_VERSION);
  app.require_subcommand(1);

  std::string instance_path, state_path, trace_path, scheduler_spec, out;
  std::uint64_t seed = rsg::kDefaultSeed;
  bool full = false, certify = false;
  std::size_t max_steps = 10'000;
  int players = 0, resources = 0;
  rsg::Cost delay_max = 0;
  std::string graph = "empty";
  BudgetFlags budget;

  auto* solve = app.add_subcommand("solve", "Compute an NE that is also a CE");
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--trace", trace_path, "Write the solver iterations here");
  solve->add_option("--seed", seed, "Accepted for uniformity; the solver is deterministic");
  budget.attach(solve);

  auto* verify = app.add_subcommand("verify", "Classify a state by brute force");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("state", state_path)->required();
  verify->add_flag("--full", full, "Also decide SE/SSE over all coalitions");
  budget.attach(verify);

  auto* dynamics = app.add_subcommand("dynamics", "Run improving-move dynamics");
  dynamics->add_option("instance", instance_path)->required();
  dynamics->add_option("state", state_path)->required();
  dynamics->add_option("--scheduler", scheduler_spec)->required();
  dynamics->add_option("--max-steps", max_steps)->required();
  dynamics->add_option("--trace-out", trace_path);
  budget.attach(dynamics);

  auto* gen_cycle = app.add_subcommand("gen-cycle", "Write the cycling construction");
  gen_cycle->add_option("--out", out)->required();
  gen_cycle->add_flag("--certify", certify, "Replay and certify the cycle");

  auto* gen_random = app.add_subcommand("gen-random", "Write a random instance");
  gen_random->add_option("--players", players)->required();
  gen_random->add_option("--resources", resources)->required();
  gen_random->add_option("--delay-max", delay_max)->required();
  gen_random->add_option("--graph", graph, "empty | gnp:<p> | cliques:<k>");
  gen_random->add_option("--seed", seed);
  gen_random->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*solve) return run_solve(instance_path, trace_path, budget);
    if (*verify) return run_verify(instance_path, state_path, full, budget);
    if (*dynamics) {
      return run_dynamics(instance_path, state_path, scheduler_spec, max_steps,
                          trace_path, budget);
    }
    if (*gen_cycle) return run_gen_cycle(out, certify);
    if (*gen_random) {
      return run_gen_random(players, resources, delay_max, graph, seed, out);
    }
  } catch (const rsg::ParseError& e) {
    std::cerr << "error parse: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rsg::BudgetExceeded& e) {
    std::cerr << "error budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const rsg::ContractError& e) {
    std::cerr << "error contract: " << e.what() << "\n";
    return kExitContract;
  }
  return kExitUsage;
}
