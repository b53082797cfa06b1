#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "pflight/params.hpp"
#include "pflight/quadrature.hpp"

namespace pflight {

/// Law of the flight at a query point: the absolutely continuous density
/// plus the weight exp(-lambda t) sitting on the boundary circle r = ct.
struct DensityValue {
  double ac = 0.0;
  double singular_weight = 0.0;
};

struct FisherInfo {
  double per_observation = 0.0;
  double idealized_per_observation = 0.0;
  std::size_t n = 0;
  double total = 0.0;
};

/// Absolutely continuous part of the planar density at `point`, time t:
/// lambda/(2 pi c) * exp(-lambda t + (lambda/c) sqrt(u)) / sqrt(u) with
/// u = c^2 t^2 - |point - origin|^2. Requires the point strictly inside the
/// disc of radius ct; the circle itself carries the singular component.
double planar_density_ac(const FlightParams& params, double t, Point point);

/// Radial law of R(t) = |X(t)| for a flight started at (0, 0).
DensityValue radial_density_origin(const FlightParams& params, double t, double r);

/// Radial law of the distance from (0, 0) for a flight started at
/// params.origin. Integrates the planar density around the circle of radius r,
/// restricted to the arc where the flight can be.
DensityValue radial_density_offset(const FlightParams& params, double t, double r,
                                   const QuadratureOptions& options = {});

/// Limit of the radial law under the Kac scaling (c, lambda -> inf,
/// c^2 / lambda -> 1).
double bessel_limit_density(Point origin, double t, double r);

/// E R^p(t) by the closed form with I_{(p+1)/2}, exactly as published.
/// Disagrees with moment_quadrature; kept for comparison.
double moment_closed_form_paper(const FlightParams& params, double t, int p);

/// E R^p(t) by direct quadrature of the radial law (origin start), in the
/// variable z = sqrt(c^2 t^2 - r^2), plus the boundary term (ct)^p e^{-lambda t}.
double moment_quadrature(const FlightParams& params, double t, double p,
                         const QuadratureOptions& options = {});

/// Fisher information of one increment over a step delta for the
/// i.i.d. pseudo-model, and its idealized value 1/lambda^2.
FisherInfo fisher_info(double lambda, double delta, std::size_t n);

/// The same per-observation information by quadrature of the score-squared
/// integrand over the disc, reduced to one dimension by polar coordinates
/// and z = sqrt(c^2 delta^2 - rho^2).
double fisher_info_quadrature(double lambda, double delta, double c = 1.0,
                              const QuadratureOptions& options = {});

/// Bias of an estimator as a function of lambda, with optional derivative.
struct BiasModel {
  std::function<double(double)> bias;
  std::function<double(double)> derivative;  // central differences if empty
};

/// Cramer-Rao lower bound on E (T_n - lambda)^2 under I_n = n / lambda^2.
double cramer_rao_bound(double lambda, std::size_t n,
                        const std::optional<BiasModel>& bias = std::nullopt);

}  // namespace pflight
