#include "pflight/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <numbers>

#include "pflight/bessel.hpp"
#include "pflight/errors.hpp"

namespace pflight {

namespace {

constexpr double kPi = std::numbers::pi;

void check_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw ParameterError("time t must be positive and finite");
}

void check_origin_at_zero(const FlightParams& params, const char* what) {
  if (params.origin.x != 0.0 || params.origin.y != 0.0) {
    throw ParameterError(std::string(what) + " requires the flight to start at (0, 0)");
  }
}

// exp(-lambda t + (lambda/c) sqrt(u)) with u = (ct)^2 - d2, written as
// exp(-(lambda/c) d2 / (ct + sqrt(u))) to avoid cancellation when lambda t is large.
double boundary_decay(double lambda, double c, double ct, double d2, double sqrt_u) {
  return std::exp(-(lambda / c) * d2 / (ct + sqrt_u));
}

}  // namespace

double planar_density_ac(const FlightParams& params, double t, Point point) {
  params.validate();
  check_time(t);
  const double ct = params.c * t;
  const Point d = point - params.origin;
  const double dist = norm(d);
  if (!(dist < ct)) {
    throw DomainError("planar_density_ac: point is on or outside the circle of radius ct");
  }
  const double d2 = squared_norm(d);
  const double sqrt_u = std::sqrt((ct - dist) * (ct + dist));
  return params.lambda / (2.0 * kPi * params.c) *
         boundary_decay(params.lambda, params.c, ct, d2, sqrt_u) / sqrt_u;
}

DensityValue radial_density_origin(const FlightParams& params, double t, double r) {
  params.validate();
  check_time(t);
  check_origin_at_zero(params, "radial_density_origin");
  const double ct = params.c * t;
  if (!(r > 0.0) || !(r < ct)) throw DomainError("radial_density_origin: r must lie in (0, ct)");
  const double z = std::sqrt((ct - r) * (ct + r));
  DensityValue out;
  out.ac = params.lambda / params.c * r *
           boundary_decay(params.lambda, params.c, ct, r * r, z) / z;
  out.singular_weight = std::exp(-params.lambda * t);
  return out;
}

DensityValue radial_density_offset(const FlightParams& params, double t, double r,
                                   const QuadratureOptions& options) {
  params.validate();
  check_time(t);
  const double ct = params.c * t;
  const double rho0 = norm(params.origin);
  if (!(r > 0.0)) throw DomainError("radial_density_offset: r must be positive");
  if (!(r < ct + rho0) || !(r > rho0 - ct) || r == ct - rho0) {
    throw DomainError("radial_density_offset: r outside the open reachable annulus");
  }

  const double lambda = params.lambda;
  const double c = params.c;
  const double b = 2.0 * r * rho0;
  // The angular integrand is symmetric about the direction of the origin; psi
  // is the angle from that direction and the integral over (0, 2pi) is twice
  // the integral over (0, psi_max).
  double integral = 0.0;
  if (r < ct - rho0) {
    // The whole circle of radius r lies in the reachable disc. With
    // theta = pi - psi, A = delta + 2b sin^2(theta/2) where delta is the gap
    // to the boundary, so 1/sqrt(A) peaks sharply at theta = 0 as r -> ct - rho0.
    const double far = r + rho0;
    const double delta = (ct - far) * (ct + far);
    auto decay = [&](double sh, double sqrt_a) {
      return boundary_decay(lambda, c, ct, far * far - 2.0 * b * sh * sh, sqrt_a);
    };
    auto plain = [&](double theta) {
      const double sh = std::sin(0.5 * theta);
      const double sqrt_a = std::sqrt(delta + 2.0 * b * sh * sh);
      return decay(sh, sqrt_a) / sqrt_a;
    };
    if (b == 0.0) {
      integral = 2.0 * integrate(plain, 0.0, kPi, options);
    } else {
      // sin(theta/2) = w sinh(v) with 2b w^2 = delta gives sqrt(A) = sqrt(delta) cosh(v)
      // and d theta / sqrt(A) = 2 dv / (sqrt(2b) cos(theta/2)), smooth on theta < pi/2.
      const double w = std::sqrt(delta / (2.0 * b));
      const double root_2b = std::sqrt(2.0 * b);
      auto smooth = [&](double v) {
        const double sh = w * std::sinh(v);
        const double half_cos = std::sqrt((1.0 - sh) * (1.0 + sh));
        return 2.0 / (root_2b * half_cos) * decay(sh, std::sqrt(delta) * std::cosh(v));
      };
      const double v_max = std::asinh(std::sqrt(0.5) / w);
      integral = 2.0 * (integrate(smooth, 0.0, v_max, options) +
                        integrate(plain, 0.5 * kPi, kPi, options));
    }
  } else {
    // Only the arc psi < psi_max is reachable; A(psi) vanishes like
    // (psi_max - psi) at the end, so psi = psi_max - s^2 removes the
    // inverse square root.
    const double k = ct * ct - r * r - rho0 * rho0;
    const double psi_max = std::acos(std::clamp(-k / b, -1.0, 1.0));
    auto f = [&](double s) {
      const double s2 = s * s;
      const double psi = psi_max - s2;
      const double a = 2.0 * b * std::sin(psi_max - 0.5 * s2) * std::sin(0.5 * s2);
      if (!(a > 0.0)) return 0.0;
      const double sh = std::sin(0.5 * psi);
      const double d2 = (r - rho0) * (r - rho0) + 2.0 * b * sh * sh;
      const double sqrt_a = std::sqrt(a);
      return 2.0 * s * boundary_decay(lambda, c, ct, d2, sqrt_a) / sqrt_a;
    };
    integral = 2.0 * integrate(f, 0.0, std::sqrt(psi_max), options);
  }

  DensityValue out;
  out.ac = lambda / (2.0 * kPi * c) * r * integral;
  out.singular_weight = std::exp(-lambda * t);
  return out;
}

double bessel_limit_density(Point origin, double t, double r) {
  check_time(t);
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("bessel_limit_density: r must be >= 0");
  if (r == 0.0) return 0.0;
  const double rho0 = norm(origin);
  const double x = r * rho0 / t;
  // e^{-(r^2 + rho0^2)/2t} I0(x) = e^{-(r - rho0)^2 / 2t} * (e^{-x} I0(x))
  return r / t * std::exp(-(r - rho0) * (r - rho0) / (2.0 * t)) * bessel_i_scaled(0.0, x);
}

double moment_closed_form_paper(const FlightParams& params, double t, int p) {
  params.validate();
  check_time(t);
  check_origin_at_zero(params, "moment_closed_form_paper");
  if (p < 1) throw ParameterError("moment_closed_form_paper: p must be >= 1");
  const double x = params.lambda * t;
  const double nu = 0.5 * (p + 1);
  const double bracket_scaled = std::sqrt(kPi) * std::pow(2.0 / x, 0.5 * (p - 1)) *
                                    std::tgamma(nu) * bessel_i_scaled(nu, x) +
                                std::exp(-x);
  return std::pow(params.c * t, p) * bracket_scaled;
}

double moment_quadrature(const FlightParams& params, double t, double p,
                         const QuadratureOptions& options) {
  params.validate();
  check_time(t);
  check_origin_at_zero(params, "moment_quadrature");
  if (!(p >= 0.0) || !std::isfinite(p)) throw ParameterError("moment_quadrature: p must be >= 0");
  const double x = params.lambda * t;
  const double scale = std::pow(params.c * t, p);
  // With z = ct * w the a.c. part is x * (ct)^p * int_0^1 (1 - w^2)^{p/2} e^{-x(1-w)} dw.
  auto f = [&](double w) {
    const double one_minus = 1.0 - w;
    return std::pow(one_minus * (1.0 + w), 0.5 * p) * std::exp(-x * one_minus);
  };
  QuadratureOptions inner = options;
  inner.abs_tol = options.abs_tol / (x * scale);
  const double ac = x * integrate(f, 0.0, 1.0, inner);
  return scale * (ac + std::exp(-x));
}

FisherInfo fisher_info(double lambda, double delta, std::size_t n) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ParameterError("lambda must be positive");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw ParameterError("delta must be positive");
  if (n == 0) throw ParameterError("n must be at least 1");
  const double x = lambda * delta;
  FisherInfo info;
  info.per_observation = (-std::expm1(-x) - x * x * std::exp(-x)) / (lambda * lambda);
  info.idealized_per_observation = 1.0 / (lambda * lambda);
  info.n = n;
  info.total = static_cast<double>(n) * info.per_observation;
  return info;
}

double fisher_info_quadrature(double lambda, double delta, double c,
                              const QuadratureOptions& options) {
  if (!(lambda > 0.0) || !(delta > 0.0) || !(c > 0.0)) {
    throw ParameterError("fisher_info_quadrature: lambda, delta and c must be positive");
  }
  // (lambda/c) int_0^{c delta} e^{-(lambda/c)(c delta - z)} (1/lambda - delta + z/c)^2 dz,
  // with z = c delta w.
  const double x = lambda * delta;
  auto f = [&](double w) {
    const double score = 1.0 / lambda - delta * (1.0 - w);
    return std::exp(-x * (1.0 - w)) * score * score;
  };
  QuadratureOptions inner = options;
  inner.abs_tol = options.abs_tol / x;
  return x * integrate(f, 0.0, 1.0, inner);
}

double cramer_rao_bound(double lambda, std::size_t n, const std::optional<BiasModel>& bias) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ParameterError("lambda must be positive");
  if (n == 0) throw ParameterError("n must be at least 1");
  const double information = static_cast<double>(n) / (lambda * lambda);
  if (!bias || !bias->bias) return 1.0 / information;

  const double b = bias->bias(lambda);
  double db = 0.0;
  if (bias->derivative) {
    db = bias->derivative(lambda);
  } else {
    const double h = 1e-5 * lambda;
    db = (bias->bias(lambda + h) - bias->bias(lambda - h)) / (2.0 * h);
  }
  return (1.0 + db) * (1.0 + db) / information + b * b;
}

}  // namespace pflight
