// Serial reference vs OpenMP kernels. Thread count follows OMFAM_THREADS.

#include <benchmark/benchmark.h>

#include <random>

#include "omfam/expfam.hpp"
#include "omfam/models.hpp"
#include "omfam/oriented_matroid.hpp"
#include "omfam/supports.hpp"

using namespace omfam;

namespace {

Execution exec_of(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

Matrix random_family(std::size_t d, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  Matrix a(d, m);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < m; ++c) a(r, c) = entry(rng);
  return with_constants_row(a);
}

void BM_EnumerateCircuits(benchmark::State& state) {
  const Matrix a = random_family(4, 14, 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_circuits(a, exec_of(state)));
}
BENCHMARK(BM_EnumerateCircuits)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_AxiomsCheck(benchmark::State& state) {
  const auto om = signed_circuits(random_family(3, 10, 2));
  for (auto _ : state) benchmark::DoNotOptimize(axioms_check(om, exec_of(state)));
}
BENCHMARK(BM_AxiomsCheck)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BruteForceSupports(benchmark::State& state) {
  const Matrix a = cyclic_matrix(CyclicPolytopeSpec::standard(4, 16));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_supports(a, exec_of(state)));
}
BENCHMARK(BM_BruteForceSupports)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_InClosure(benchmark::State& state) {
  const auto f = ExponentialFamily::uniform(random_family(3, 12, 3));
  std::vector<double> t(f.matrix().rows(), 0.3);
  const auto p = parametrize_theta(f, t);
  for (auto _ : state) benchmark::DoNotOptimize(in_closure(f, p, kDefaultTolerance, exec_of(state)));
}
BENCHMARK(BM_InClosure)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
