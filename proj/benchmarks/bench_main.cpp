#include <benchmark/benchmark.h>

#include "rsg/cyclegen.hpp"
#include "rsg/generate.hpp"
#include "rsg/oracle.hpp"
#include "rsg/solver.hpp"

using namespace rsg;

static void BM_SolveCE(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto game = gen_random(n, 5, 10 * n, GraphSpec::parse("gnp:0.5"), 7);
  for (auto _ : st) {
    benchmark::DoNotOptimize(solve_ce(game.instance, game.graph));
  }
}
BENCHMARK(BM_SolveCE)->Arg(10)->Arg(50)->Arg(200);

static void BM_EnumerateCliques(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto game = gen_random(n, 2, n, GraphSpec::parse("gnp:0.5"), 11);
  for (auto _ : st) {
    benchmark::DoNotOptimize(enumerate_cliques(game.graph, n, 1'000'000));
  }
}
BENCHMARK(BM_EnumerateCliques)->Arg(12)->Arg(24)->Arg(40);

static void BM_OracleSearch(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto game = gen_random(n, 4, 3 * n, GraphSpec::parse("gnp:0.6"), 13);
  const State s = greedy_nash(game.instance);
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        find_weak_considerate_clique_move(game.instance, game.graph, s));
  }
}
BENCHMARK(BM_OracleSearch)->Arg(6)->Arg(8)->Arg(10);

static void BM_ClassifyState(benchmark::State& st) {
  const auto game = gen_random(6, 3, 18, GraphSpec::parse("gnp:0.5"), 17);
  const State s = greedy_nash(game.instance);
  for (auto _ : st) {
    benchmark::DoNotOptimize(classify_state(game.instance, game.graph, s));
  }
}
BENCHMARK(BM_ClassifyState);

static void BM_CycleReplay(benchmark::State& st) {
  const auto c = cycle::build_cycle_instance();
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        cycle::replay_and_certify(c, cycle::default_replay_steps()));
  }
}
BENCHMARK(BM_CycleReplay)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
