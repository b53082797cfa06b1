#include "pflight/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "pflight/errors.hpp"

namespace pflight {

namespace {

void check_order(double nu, double x) {
  if (!(nu >= 0.0) || nu > kMaxBesselOrder || std::floor(2.0 * nu) != 2.0 * nu) {
    throw ParameterError("bessel_i: order must be an integer or half-integer in [0, 20]");
  }
  if (!(x >= 0.0) || std::isnan(x)) throw DomainError("bessel_i: x must be non-negative");
}

// exp(-x) * sum_m (x/2)^(2m+nu) / (m! Gamma(m+nu+1))
double scaled_series(double nu, double x) {
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < 1000; ++m) {
    term *= q / (m * (m + nu));
    sum += term;
    if (term < std::numeric_limits<double>::epsilon() * 0.25 * sum) break;
  }
  const double log_lead = nu * std::log(0.5 * x) - std::lgamma(nu + 1.0) - x;
  return sum * std::exp(log_lead);
}

// Hankel expansion: I_nu(x) ~ e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(nu) / x^k.
// The exponentially small companion term is below double resolution past the
// cutoff and is dropped. The series terminates for half-integer orders.
double scaled_asymptotic(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (mu - odd * odd) / (8.0 * k * x);
    if (next == 0.0) break;
    if (std::abs(next) >= std::abs(term)) break;  // divergent tail
    term = next;
    sum += term;
    if (std::abs(term) < std::numeric_limits<double>::epsilon() * 0.25 * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

}  // namespace

double bessel_series_cutoff(double nu) { return std::max(30.0, 0.5 * nu * nu); }

double bessel_i_scaled(double nu, double x) {
  check_order(nu, x);
  if (std::isinf(x)) return 0.0;
  return x <= bessel_series_cutoff(nu) ? scaled_series(nu, x) : scaled_asymptotic(nu, x);
}

double bessel_i(double nu, double x) {
  const double scaled = bessel_i_scaled(nu, x);
  const double value = scaled * std::exp(x);
  if (!std::isfinite(value)) {
    throw OverflowError("bessel_i: result exceeds double range", scaled, x);
  }
  return value;
}

}  // namespace pflight
