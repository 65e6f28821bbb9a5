#include <benchmark/benchmark.h>

#include <random>

#include "quadriline/census.hpp"

using namespace quadriline;

namespace {

NormalizedConfig config_over(std::uint64_t p) {
  std::mt19937_64 rng(p);
  return random_config(Field::prime(p), rng).config;
}

void BM_EnumerateRectangles(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto cfg = config_over(p);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rectangles(cfg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateRectangles)->Arg(5)->Arg(13)->Arg(31)->Arg(61)->Complexity(benchmark::oNSquared);

void BM_VerifyAgainstPaths(benchmark::State& state) {
  const auto cfg = config_over(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_against_paths(cfg));
}
BENCHMARK(BM_VerifyAgainstPaths)->Arg(7)->Arg(13)->Arg(31);

}  // namespace
