#include <benchmark/benchmark.h>

#include "qr/solver.hpp"
#include "qr/subproblem.hpp"

using namespace qr;

static void BM_SolveExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QrProblem p = random_instance(n, 1, 1.0, 10.0);
  SolverConfig config;
  config.gap_tol = 1e-6;
  config.record_trace = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(p, config));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveExact)->Arg(50)->Arg(100)->Arg(200)->Arg(500)
    ->Unit(benchmark::kMillisecond)->Complexity();

static void BM_SolveDiminishing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QrProblem p = random_instance(n, 1, 1.0, 10.0);
  SolverConfig config;
  config.stepsize = Stepsize::DIMINISHING;
  config.gap_tol = 1e-6;
  config.max_iter = 200;
  config.record_trace = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(p, config));
  }
}
BENCHMARK(BM_SolveDiminishing)->Arg(50)->Arg(100)
    ->Unit(benchmark::kMillisecond);

static void BM_GenEigpair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QrProblem p = random_instance(n, 1, 1.0, 10.0);
  const CholeskyFactor f = cholesky_spd(p.C);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen_eigpair(p.A, f, Which::MIN));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_GenEigpair)->Arg(50)->Arg(100)->Arg(200)->Arg(500)
    ->Unit(benchmark::kMillisecond)->Complexity();

static void BM_Subproblem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QrProblem p = random_instance(n, 1, 1.0, 10.0);
  const CholeskyFactor f = cholesky_spd(p.C);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_gp(p, 1.0, f));
  }
}
BENCHMARK(BM_Subproblem)->Arg(50)->Arg(100)->Arg(200)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
