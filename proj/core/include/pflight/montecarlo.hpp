#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "pflight/estimators.hpp"
#include "pflight/rng.hpp"

namespace pflight {

/// Estimators the experiment runner can evaluate on a discrete sample.
enum class EstimatorChoice { hat, tilde, dot };

std::string_view to_string(EstimatorChoice choice);
EstimatorChoice parse_estimator_choice(std::string_view name);

struct ExperimentConfig {
  std::vector<double> lambda_grid;
  std::vector<std::size_t> n_grid;
  double horizon = 500.0;
  double c = 1.0;
  std::size_t reps = 10000;
  std::uint64_t master_seed = 0;
  std::vector<EstimatorChoice> estimators{EstimatorChoice::hat};
  double epsilon = kDefaultTurnEpsilon;
  /// Worker threads; 0 picks hardware concurrency.
  std::size_t threads = 0;

  /// Throws ParameterError on an empty grid, non-positive values or reps == 0.
  void validate() const;

  /// The published study: T = 500, c = 1, 10000 paths, seven rates, four sizes.
  static ExperimentConfig table1();
};

/// One (lambda, n) point of the grid.
struct ExperimentCell {
  std::size_t lambda_index = 0;
  std::size_t n_index = 0;
  double lambda = 0.0;
  std::size_t n = 0;
};

enum class ReplicationStatus { ok, saturated, failed };

std::string_view to_string(ReplicationStatus status);

struct EstimatorOutcome {
  EstimatorChoice estimator = EstimatorChoice::hat;
  double value = 0.0;
  ReplicationStatus status = ReplicationStatus::ok;
};

struct ReplicationRecord {
  ExperimentCell cell;
  std::size_t rep = 0;
  std::size_t event_count = 0;
  std::size_t n_plus = 0;
  std::vector<EstimatorOutcome> outcomes;  // same order as config.estimators
};

struct ExperimentSummary {
  double lambda = 0.0;
  std::size_t n = 0;
  double c = 0.0;
  double horizon = 0.0;
  EstimatorChoice estimator = EstimatorChoice::hat;
  double bias = 0.0;
  double rmse = 0.0;
  double min = 0.0;
  double max = 0.0;
  /// Replications excluded from the moments (saturated or failed).
  std::size_t saturated_count = 0;
  std::size_t reps = 0;

  double delta() const { return horizon / static_cast<double>(n); }
};

struct ExperimentResult {
  std::vector<ExperimentSummary> summaries;
  /// Ordered by (lambda_index, n_index, rep).
  std::vector<ReplicationRecord> records;
};

class EmptyCellError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Stream index of one replication; a pure function of the cell and rep.
std::uint64_t replication_stream(const ExperimentCell& cell, std::size_t rep);

/// Simulates one path for the cell, samples it on n + 1 grid points and runs
/// the configured estimators. Estimator failures are recorded, never thrown.
ReplicationRecord run_replication(const ExperimentConfig& config, const ExperimentCell& cell,
                                  std::size_t rep);

/// Bias, root mean squared error about the true lambda, and extremes of the
/// given estimates. Order-independent up to the fixed pairwise summation
/// order of `values`. Throws EmptyCellError when `values` is empty.
ExperimentSummary summarize(std::span<const double> values, double lambda);

/// Sums in a fixed pairwise tree, so the result depends only on the order of
/// `values`.
double pairwise_sum(std::span<const double> values);

/// Runs every (lambda, n) cell, in parallel, and returns one summary per
/// (lambda, n, estimator) in grid order. Output is identical for any thread
/// count.
ExperimentResult run_experiment(const ExperimentConfig& config, bool keep_records = false);

}  // namespace pflight
