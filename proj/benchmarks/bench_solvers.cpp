#include <benchmark/benchmark.h>

#include "cnfsat/oracle.hpp"
#include "cnfsat/resolution.hpp"
#include "cnfsat/seating.hpp"
#include "cnfsat/walksat.hpp"

namespace {

using namespace cnfsat;

// Satisfiable seating encodings, N = 2, f = 0, e = 0.1.
Formula satisfiable_encoding(std::uint32_t guests) {
  for (std::uint64_t seed = 1;; ++seed) {
    const auto inst = generate_instance(guests, 2, 0.0, 0.1, seed);
    if (is_sat(brute_force_seating(inst))) return encode(inst).formula;
  }
}

void BM_ResolutionSeating(benchmark::State& state) {
  const auto f = satisfiable_encoding(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pl_resolution(f));
}
BENCHMARK(BM_ResolutionSeating)->Arg(6)->Arg(8)->Arg(10)->Arg(12)->Arg(16);

void BM_WalkSatSeating(benchmark::State& state) {
  const auto f = satisfiable_encoding(static_cast<std::uint32_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(walksat(f, {0.5, 100, ++seed}));
}
BENCHMARK(BM_WalkSatSeating)->Arg(10)->Arg(16)->Arg(20);

void BM_OracleSeating(benchmark::State& state) {
  const auto f = satisfiable_encoding(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_models(f));
}
BENCHMARK(BM_OracleSeating)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
