#include <benchmark/benchmark.h>

#include "pflight/estimators.hpp"
#include "pflight/flight.hpp"

namespace pflight {
namespace {

DiscreteSample make_sample(std::size_t n) {
  return sample_at_grid(simulate_trajectory({1.0, 1.0, {}}, 500.0, SeedSpec{7, 0}), n);
}

void BM_SummarizeIncrements(benchmark::State& state) {
  const DiscreteSample sample = make_sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const IncrementSummary s = summarize_increments(sample);
    benchmark::DoNotOptimize(s.n_plus);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SummarizeIncrements)->RangeMultiplier(10)->Range(200, 200000);

// Once the summary exists every estimator is a handful of flops.
void BM_Estimators(benchmark::State& state) {
  const IncrementSummary s = summarize_increments(make_sample(1000));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_hat(s).value);
    benchmark::DoNotOptimize(lambda_tilde(s).value);
    benchmark::DoNotOptimize(lambda_dot(s).value);
  }
}
BENCHMARK(BM_Estimators);

void BM_PseudoLogLikelihood(benchmark::State& state) {
  const IncrementSummary s = summarize_increments(make_sample(1000));
  double lambda = 0.5;
  for (auto _ : state) {
    lambda = lambda > 2.0 ? 0.5 : lambda + 0.01;
    benchmark::DoNotOptimize(pseudo_log_likelihood(s, lambda));
  }
}
BENCHMARK(BM_PseudoLogLikelihood);

}  // namespace
}  // namespace pflight
