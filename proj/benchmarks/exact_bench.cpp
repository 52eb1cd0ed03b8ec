#include <benchmark/benchmark.h>

#include "localcc/acn.hpp"
#include "localcc/exact.hpp"

using namespace localcc;

static void BM_ExactLinf(benchmark::State& state) {
  const auto g = make_random_complete(static_cast<std::size_t>(state.range(0)), 0.5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(exact_best(g, Objective::linf()));
}
BENCHMARK(BM_ExactLinf)->DenseRange(6, 11, 1)->Unit(benchmark::kMillisecond);

static void BM_AcnMatching(benchmark::State& state) {
  const auto g = make_matching_instance(static_cast<std::size_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(acn_cluster(g, seed++));
}
BENCHMARK(BM_AcnMatching)->Arg(4)->Arg(8)->Arg(16);
