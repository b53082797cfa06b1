#pragma once

#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "pflight/flight.hpp"

namespace pflight {

inline constexpr double kDefaultTurnEpsilon = 1e-9;

/// Per-interval statistics of a discretely observed flight. Every
/// estimator below is a function of this summary only.
struct IncrementSummary {
  std::size_t n = 0;
  double delta = 0.0;
  double c = 0.0;
  double epsilon = kDefaultTurnEpsilon;
  /// u_i = (c delta)^2 - |X_i - X_{i-1}|^2, clamped at 0 within tolerance.
  std::vector<double> u;
  /// eta_i = |X_i - X_{i-1}|.
  std::vector<double> eta;
  /// u_i > epsilon * (c delta)^2.
  std::vector<bool> turned;
  std::size_t n_plus = 0;
  double sum_sqrt_u_turned = 0.0;
  /// Sum over all intervals, with intervals classified as straight counted as 0.
  double sum_sqrt_u_all = 0.0;
};

enum class EstimatorKind { pseudo_mle, modified_mle, indicator, poisson_mle };

std::string_view to_string(EstimatorKind kind);

struct Estimate {
  double value = 0.0;
  EstimatorKind kind = EstimatorKind::pseudo_mle;
  std::size_t n = 0;
  double delta = 0.0;
  /// Asymptotic standard error; 0 when value is 0, +inf when saturated.
  double std_error = 0.0;
  bool saturated = false;
  /// Set by lambda_tilde when some interval has no turn, i.e. the data
  /// violate the every-interval-turns assumption behind that estimator.
  bool condition_violated = false;
};

/// Builds the increment summary. Throws InconsistentInputError if some
/// displacement exceeds c * delta by more than the tolerance.
IncrementSummary summarize_increments(const DiscreteSample& sample,
                                      double epsilon = kDefaultTurnEpsilon);

/// Log pseudo-likelihood, including the -n log(2 pi c) and -sum log sqrt(u)
/// constants.
double pseudo_log_likelihood(const IncrementSummary& summary, double lambda);

/// Derivative of the log pseudo-likelihood in lambda.
double score(const IncrementSummary& summary, double lambda);

/// Root of the score: c n+ / (c n delta - sum_turned sqrt(u)). Zero when no
/// interval turned.
Estimate lambda_hat(const IncrementSummary& summary);

/// Estimator that treats every interval as turned: c n / (c n delta - sum sqrt(u)).
Estimate lambda_tilde(const IncrementSummary& summary);

/// -log(1 - delta G_n) / delta with G_n = n+ / (n delta). Saturates (value
/// +inf, flag set) when every interval turned.
Estimate lambda_dot(const IncrementSummary& summary);

/// N(T) / T from the full trajectory.
Estimate poisson_mle(const Trajectory& traj);

/// Normalized pseudo-likelihood ratio Z_{n,lambda}(z) with local scale
/// phi = lambda / sqrt(n).
double pseudo_lr(const IncrementSummary& summary, double lambda, double z);

}  // namespace pflight
