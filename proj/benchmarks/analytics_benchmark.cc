#include <benchmark/benchmark.h>

#include "pflight/analytics.hpp"
#include "pflight/bessel.hpp"

namespace pflight {
namespace {

void BM_BesselSeries(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    x = x > 25.0 ? 0.5 : x + 0.37;
    benchmark::DoNotOptimize(bessel_i_scaled(1.5, x));
  }
}
BENCHMARK(BM_BesselSeries);

void BM_BesselAsymptotic(benchmark::State& state) {
  double x = 40.0;
  for (auto _ : state) {
    x = x > 500.0 ? 40.0 : x + 3.7;
    benchmark::DoNotOptimize(bessel_i_scaled(1.5, x));
  }
}
BENCHMARK(BM_BesselAsymptotic);

void BM_PlanarDensity(benchmark::State& state) {
  const FlightParams params{1.0, 1.0, {}};
  double x = 0.0;
  for (auto _ : state) {
    x = x > 0.9 ? 0.0 : x + 0.013;
    benchmark::DoNotOptimize(planar_density_ac(params, 1.0, {x, 0.05}));
  }
}
BENCHMARK(BM_PlanarDensity);

// Offset start: each evaluation is an adaptive angular quadrature.
void BM_RadialDensityOffset(benchmark::State& state) {
  const FlightParams params{1.0, 1.0, {0.2, 0.1}};
  double r = 0.05;
  for (auto _ : state) {
    r = r > 1.2 ? 0.05 : r + 0.0171;
    benchmark::DoNotOptimize(radial_density_offset(params, 1.0, r).ac);
  }
}
BENCHMARK(BM_RadialDensityOffset);

void BM_MomentQuadrature(benchmark::State& state) {
  const FlightParams params{static_cast<double>(state.range(0)), 1.0, {}};
  for (auto _ : state) benchmark::DoNotOptimize(moment_quadrature(params, 1.0, 2.0));
}
BENCHMARK(BM_MomentQuadrature)->Arg(1)->Arg(50);

void BM_FisherInfoQuadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fisher_info_quadrature(1.0, 0.5));
}
BENCHMARK(BM_FisherInfoQuadrature);

}  // namespace
}  // namespace pflight
