#include "pflight/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "pflight/errors.hpp"
#include "pflight/flight.hpp"

namespace pflight {

std::string_view to_string(EstimatorChoice choice) {
  switch (choice) {
    case EstimatorChoice::hat:
      return "hat";
    case EstimatorChoice::tilde:
      return "tilde";
    case EstimatorChoice::dot:
      return "dot";
  }
  return "unknown";
}

EstimatorChoice parse_estimator_choice(std::string_view name) {
  if (name == "hat") return EstimatorChoice::hat;
  if (name == "tilde") return EstimatorChoice::tilde;
  if (name == "dot") return EstimatorChoice::dot;
  throw ParameterError("unknown estimator '" + std::string(name) + "'");
}

std::string_view to_string(ReplicationStatus status) {
  switch (status) {
    case ReplicationStatus::ok:
      return "ok";
    case ReplicationStatus::saturated:
      return "saturated";
    case ReplicationStatus::failed:
      return "failed";
  }
  return "unknown";
}

void ExperimentConfig::validate() const {
  if (lambda_grid.empty()) throw ParameterError("lambda_grid must not be empty");
  if (n_grid.empty()) throw ParameterError("n_grid must not be empty");
  for (double l : lambda_grid) {
    if (!(l > 0.0) || !std::isfinite(l)) throw ParameterError("lambda_grid values must be positive");
  }
  for (std::size_t n : n_grid) {
    if (n == 0) throw ParameterError("n_grid values must be positive");
  }
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw ParameterError("T must be positive");
  if (!(c > 0.0) || !std::isfinite(c)) throw ParameterError("c must be positive");
  if (reps == 0) throw ParameterError("reps must be at least 1");
  if (estimators.empty()) throw ParameterError("at least one estimator is required");
  if (!(epsilon > 0.0) || epsilon > 1e-3) throw ParameterError("epsilon must lie in (0, 1e-3]");
}

ExperimentConfig ExperimentConfig::table1() {
  ExperimentConfig config;
  config.lambda_grid = {0.10, 0.25, 0.50, 0.75, 1.00, 1.50, 2.00};
  config.n_grid = {200, 300, 500, 1000};
  config.horizon = 500.0;
  config.c = 1.0;
  config.reps = 10000;
  config.master_seed = 20080101;
  config.estimators = {EstimatorChoice::hat};
  return config;
}

std::uint64_t replication_stream(const ExperimentCell& cell, std::size_t rep) {
  return combine64(combine64(cell.lambda_index, cell.n_index), rep);
}

ReplicationRecord run_replication(const ExperimentConfig& config, const ExperimentCell& cell,
                                  std::size_t rep) {
  ReplicationRecord record;
  record.cell = cell;
  record.rep = rep;
  record.outcomes.reserve(config.estimators.size());

  const FlightParams params{cell.lambda, config.c, {0.0, 0.0}};
  const SeedSpec seed{config.master_seed, replication_stream(cell, rep)};
  const Trajectory traj = simulate_trajectory(params, config.horizon, seed);
  record.event_count = traj.event_count();

  auto fail_all = [&] {
    for (EstimatorChoice choice : config.estimators) {
      record.outcomes.push_back({choice, std::numeric_limits<double>::quiet_NaN(),
                                 ReplicationStatus::failed});
    }
  };

  IncrementSummary summary;
  try {
    summary = summarize_increments(sample_at_grid(traj, cell.n), config.epsilon);
  } catch (const std::exception&) {
    fail_all();
    return record;
  }
  record.n_plus = summary.n_plus;

  for (EstimatorChoice choice : config.estimators) {
    EstimatorOutcome outcome{choice, 0.0, ReplicationStatus::ok};
    try {
      Estimate e;
      switch (choice) {
        case EstimatorChoice::hat:
          e = lambda_hat(summary);
          break;
        case EstimatorChoice::tilde:
          e = lambda_tilde(summary);
          break;
        case EstimatorChoice::dot:
          e = lambda_dot(summary);
          break;
      }
      outcome.value = e.value;
      if (e.saturated || !std::isfinite(e.value)) outcome.status = ReplicationStatus::saturated;
    } catch (const std::exception&) {
      outcome.value = std::numeric_limits<double>::quiet_NaN();
      outcome.status = ReplicationStatus::failed;
    }
    record.outcomes.push_back(outcome);
  }
  return record;
}

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kLeaf = 32;
  if (values.size() <= kLeaf) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

ExperimentSummary summarize(std::span<const double> values, double lambda) {
  if (values.empty()) throw EmptyCellError("summarize: no successful replications");
  std::vector<double> errors(values.size());
  std::vector<double> squared(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    errors[i] = values[i] - lambda;
    squared[i] = errors[i] * errors[i];
  }
  const double count = static_cast<double>(values.size());
  ExperimentSummary s;
  s.lambda = lambda;
  s.reps = values.size();
  s.bias = pairwise_sum(errors) / count;
  s.rmse = std::sqrt(pairwise_sum(squared) / count);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  return s;
}

ExperimentResult run_experiment(const ExperimentConfig& config, bool keep_records) {
  config.validate();

  std::vector<ExperimentCell> cells;
  for (std::size_t li = 0; li < config.lambda_grid.size(); ++li) {
    for (std::size_t ni = 0; ni < config.n_grid.size(); ++ni) {
      cells.push_back({li, ni, config.lambda_grid[li], config.n_grid[ni]});
    }
  }

  const std::size_t tasks = cells.size() * config.reps;
  std::vector<ReplicationRecord> records(tasks);

  std::size_t threads = config.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, tasks);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t task = next.fetch_add(1, std::memory_order_relaxed);
      if (task >= tasks) return;
      const ExperimentCell& cell = cells[task / config.reps];
      records[task] = run_replication(config, cell, task % config.reps);
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  ExperimentResult result;
  std::vector<double> values;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    const ExperimentCell& cell = cells[ci];
    const auto begin = records.begin() + static_cast<std::ptrdiff_t>(ci * config.reps);
    for (std::size_t k = 0; k < config.estimators.size(); ++k) {
      values.clear();
      std::size_t excluded = 0;
      for (auto it = begin; it != begin + static_cast<std::ptrdiff_t>(config.reps); ++it) {
        const EstimatorOutcome& o = it->outcomes[k];
        if (o.status == ReplicationStatus::ok) {
          values.push_back(o.value);
        } else {
          ++excluded;
        }
      }
      ExperimentSummary s;
      if (!values.empty()) {
        s = summarize(values, cell.lambda);
      } else {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        s.lambda = cell.lambda;
        s.bias = s.rmse = s.min = s.max = nan;
      }
      s.n = cell.n;
      s.c = config.c;
      s.horizon = config.horizon;
      s.estimator = config.estimators[k];
      s.saturated_count = excluded;
      s.reps = config.reps;
      result.summaries.push_back(s);
    }
  }
  if (keep_records) result.records = std::move(records);
  return result;
}

}  // namespace pflight
