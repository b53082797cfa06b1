#include <benchmark/benchmark.h>

#include "pflight/montecarlo.hpp"

namespace pflight {
namespace {

// One Table-1 style cell at reduced replication count.
void BM_RunExperimentCell(benchmark::State& state) {
  ExperimentConfig config;
  config.lambda_grid = {1.0};
  config.n_grid = {1000};
  config.reps = 200;
  config.master_seed = 5;
  config.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const ExperimentResult result = run_experiment(config);
    benchmark::DoNotOptimize(result.summaries.front().rmse);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 200);
}
BENCHMARK(BM_RunExperimentCell)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pflight
