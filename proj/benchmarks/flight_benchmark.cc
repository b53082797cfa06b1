#include <benchmark/benchmark.h>

#include "pflight/flight.hpp"

namespace pflight {
namespace {

void BM_SimulateTrajectory(benchmark::State& state) {
  const FlightParams params{static_cast<double>(state.range(0)), 1.0, {}};
  std::uint64_t stream = 0;
  std::size_t events = 0;
  for (auto _ : state) {
    const Trajectory traj = simulate_trajectory(params, 500.0, SeedSpec{1, stream++});
    events += traj.event_count();
    benchmark::DoNotOptimize(traj.event_times.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(events));
}
BENCHMARK(BM_SimulateTrajectory)->Arg(1)->Arg(2)->Arg(10);

// Grid sampling is a merged sweep, so cost tracks n + N rather than n log N.
void BM_SampleAtGrid(benchmark::State& state) {
  const Trajectory traj = simulate_trajectory({2.0, 1.0, {}}, 500.0, SeedSpec{2, 0});
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const DiscreteSample sample = sample_at_grid(traj, n);
    benchmark::DoNotOptimize(sample.positions.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SampleAtGrid)->RangeMultiplier(10)->Range(100, 100000);

// Re-accumulates segments from the origin on every call (the same summation
// order as the grid sweep), so cost is linear in the number of events passed.
void BM_PositionAt(benchmark::State& state) {
  const Trajectory traj = simulate_trajectory({2.0, 1.0, {}}, 500.0, SeedSpec{3, 0});
  double t = 0.0;
  for (auto _ : state) {
    t = t >= 499.0 ? 0.0 : t + 0.731;
    benchmark::DoNotOptimize(position_at(traj, t));
  }
}
BENCHMARK(BM_PositionAt);

}  // namespace
}  // namespace pflight
