#include <benchmark/benchmark.h>

#include "quadriline/locus.hpp"
#include "quadriline/paths.hpp"

using namespace quadriline;

namespace {

const NormalizedConfig& generic_config() {
  static const NormalizedConfig c = NormalizedConfig::rational(2, 3, 0, 1, 1);
  return c;
}

void BM_SlopePathPolys(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(slope_path_polys(generic_config()));
}
BENCHMARK(BM_SlopePathPolys);

void BM_SlopePathEval(benchmark::State& state) {
  const auto path = slope_path_polys(generic_config());
  const auto ratios = sample_ratios(Field::rational(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const Ratio& r : ratios) benchmark::DoNotOptimize(path.eval(r));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SlopePathEval)->Arg(16)->Arg(256);

void BM_RectangleFromSlope(benchmark::State& state) {
  const auto ratios = sample_ratios(Field::rational(), 64);
  const Scalar one = Field::rational().one();
  for (auto _ : state)
    for (const Ratio& r : ratios) benchmark::DoNotOptimize(rectangle_from_slope(generic_config(), r, one));
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_RectangleFromSlope);

void BM_Homography(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(homography(generic_config()));
}
BENCHMARK(BM_Homography);

void BM_CentersPaths(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(centers_paths(generic_config()));
}
BENCHMARK(BM_CentersPaths);

}  // namespace
