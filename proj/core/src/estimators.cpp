#include "pflight/estimators.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pflight/errors.hpp"

namespace pflight {

namespace {

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive");
}

Estimate make_estimate(const IncrementSummary& s, EstimatorKind kind, double value) {
  Estimate e;
  e.kind = kind;
  e.value = value;
  e.n = s.n;
  e.delta = s.delta;
  return e;
}

// sqrt(lambda / (n delta)), the N(0, lambda) limit on the time scale n delta.
double poisson_scale_stderr(double value, double total_time) {
  return value > 0.0 ? std::sqrt(value / total_time) : 0.0;
}

}  // namespace

std::string_view to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::pseudo_mle:
      return "pseudo_mle";
    case EstimatorKind::modified_mle:
      return "modified_mle";
    case EstimatorKind::indicator:
      return "indicator";
    case EstimatorKind::poisson_mle:
      return "poisson_mle";
  }
  return "unknown";
}

IncrementSummary summarize_increments(const DiscreteSample& sample, double epsilon) {
  const std::size_t n = sample.intervals();
  if (n == 0) throw ParameterError("summarize_increments: need at least one interval");
  if (!(epsilon > 0.0) || epsilon > 1e-3) {
    throw ParameterError("summarize_increments: epsilon must lie in (0, 1e-3]");
  }
  if (!(sample.delta > 0.0)) throw ParameterError("summarize_increments: delta must be positive");
  sample.params.validate();

  IncrementSummary s;
  s.n = n;
  s.delta = sample.delta;
  s.c = sample.params.c;
  s.epsilon = epsilon;
  s.u.resize(n);
  s.eta.resize(n);
  s.turned.resize(n);

  const double step = s.c * s.delta;
  const double threshold = epsilon * step * step;
  for (std::size_t i = 0; i < n; ++i) {
    const double eta = norm(sample.positions[i + 1] - sample.positions[i]);
    double u = (step - eta) * (step + eta);
    if (u < -threshold) {
      throw InconsistentInputError("interval " + std::to_string(i + 1) +
                                   ": displacement exceeds c * delta");
    }
    if (u < 0.0) u = 0.0;
    s.eta[i] = eta;
    s.u[i] = u;
    s.turned[i] = u > threshold;
    if (s.turned[i]) {
      const double root = std::sqrt(u);
      ++s.n_plus;
      s.sum_sqrt_u_turned += root;
      s.sum_sqrt_u_all += root;
    }
  }
  return s;
}

double pseudo_log_likelihood(const IncrementSummary& s, double lambda) {
  check_lambda(lambda);
  double log_root_sum = 0.0;
  for (std::size_t i = 0; i < s.n; ++i) {
    if (s.turned[i]) log_root_sum += 0.5 * std::log(s.u[i]);
  }
  const double n = static_cast<double>(s.n);
  return -lambda * n * s.delta + static_cast<double>(s.n_plus) * std::log(lambda) +
         lambda / s.c * s.sum_sqrt_u_turned - log_root_sum -
         n * std::log(2.0 * std::numbers::pi * s.c);
}

double score(const IncrementSummary& s, double lambda) {
  check_lambda(lambda);
  return -static_cast<double>(s.n) * s.delta + s.sum_sqrt_u_turned / s.c +
         static_cast<double>(s.n_plus) / lambda;
}

Estimate lambda_hat(const IncrementSummary& s) {
  if (s.n_plus == 0) return make_estimate(s, EstimatorKind::pseudo_mle, 0.0);
  const double denom = s.c * static_cast<double>(s.n) * s.delta - s.sum_sqrt_u_turned;
  if (!(denom > 0.0)) {
    throw NumericalError("lambda_hat: non-positive denominator", 0.0, denom);
  }
  Estimate e = make_estimate(s, EstimatorKind::pseudo_mle,
                             s.c * static_cast<double>(s.n_plus) / denom);
  e.std_error = poisson_scale_stderr(e.value, static_cast<double>(s.n) * s.delta);
  return e;
}

Estimate lambda_tilde(const IncrementSummary& s) {
  const double denom = s.c * static_cast<double>(s.n) * s.delta - s.sum_sqrt_u_all;
  if (!(denom > 0.0)) {
    throw NumericalError("lambda_tilde: non-positive denominator", 0.0, denom);
  }
  Estimate e =
      make_estimate(s, EstimatorKind::modified_mle, s.c * static_cast<double>(s.n) / denom);
  e.condition_violated = s.n_plus < s.n;
  e.std_error = e.value / std::sqrt(static_cast<double>(s.n));
  return e;
}

Estimate lambda_dot(const IncrementSummary& s) {
  if (s.n_plus == s.n) {
    Estimate e = make_estimate(s, EstimatorKind::indicator,
                               std::numeric_limits<double>::infinity());
    e.saturated = true;
    e.std_error = std::numeric_limits<double>::infinity();
    return e;
  }
  // delta * G_n = n+ / n
  const double fraction = static_cast<double>(s.n_plus) / static_cast<double>(s.n);
  Estimate e = make_estimate(s, EstimatorKind::indicator, -std::log1p(-fraction) / s.delta);
  e.std_error = poisson_scale_stderr(e.value, static_cast<double>(s.n) * s.delta);
  return e;
}

Estimate poisson_mle(const Trajectory& traj) {
  if (!(traj.horizon > 0.0)) throw DomainError("poisson_mle: horizon must be positive");
  Estimate e;
  e.kind = EstimatorKind::poisson_mle;
  e.value = static_cast<double>(traj.event_count()) / traj.horizon;
  e.std_error = poisson_scale_stderr(e.value, traj.horizon);
  return e;
}

double pseudo_lr(const IncrementSummary& s, double lambda, double z) {
  check_lambda(lambda);
  const double n = static_cast<double>(s.n);
  const double phi = lambda / std::sqrt(n);
  const double shift = phi * z;
  if (!(lambda + shift > 0.0) || !std::isfinite(z)) {
    throw DomainError("pseudo_lr: lambda + phi(n) z must stay positive");
  }
  return std::exp(shift / s.c * s.sum_sqrt_u_all - shift * n * s.delta +
                  n * std::log1p(shift / lambda));
}

}  // namespace pflight
