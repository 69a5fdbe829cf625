#include <benchmark/benchmark.h>

#include "pnmax/families.hpp"
#include "pnmax/formats.hpp"
#include "pnmax/generators.hpp"
#include "pnmax/grid_dp.hpp"
#include "pnmax/solver.hpp"
#include "pnmax/tree_dp.hpp"

using namespace pnmax;

static void bm_enumeration_grid(benchmark::State& state) {
  const Graph g = grid_graph(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_pn(g, ParameterKind::Espn).value);
  }
}
BENCHMARK(bm_enumeration_grid)->DenseRange(3, 5);

static void bm_enumeration_sharded(benchmark::State& state) {
  const Graph g = grid_graph(5, 4);
  SolveOptions opts;
  opts.parallel_shards = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_pn(g, ParameterKind::Espn, opts).value);
  }
}
BENCHMARK(bm_enumeration_sharded)->Arg(1)->Arg(2)->Arg(4);

static void bm_branch_and_bound(benchmark::State& state) {
  const Graph g = grid_graph(5, 4);
  SolveOptions opts;
  opts.use_bounds = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_pn(g, ParameterKind::Espn, opts).value);
  }
}
BENCHMARK(bm_branch_and_bound);

static void bm_grid_dp(benchmark::State& state) {
  const int cols = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_pn_grid(cols, 4, ParameterKind::Eispn).value);
  }
}
BENCHMARK(bm_grid_dp)->Arg(8)->Arg(32)->Arg(128);

static void bm_tree_dp(benchmark::State& state) {
  Rng rng(1);
  const Graph t = random_tree(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_pn_tree(t, ParameterKind::Eispn).value);
  }
}
BENCHMARK(bm_tree_dp)->Arg(16)->Arg(64)->Arg(128);

static void bm_graph6_round_trip(benchmark::State& state) {
  Rng rng(2);
  const Graph g = random_connected_graph(32, 0.3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_graph6(emit_graph6(g)).order());
  }
}
BENCHMARK(bm_graph6_round_trip);

BENCHMARK_MAIN();
