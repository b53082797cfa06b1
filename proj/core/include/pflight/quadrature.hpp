#pragma once

#include <cstddef>
#include <functional>

namespace pflight {

struct QuadratureOptions {
  double abs_tol = 1e-9;
  double rel_tol = 0.0;
  std::size_t max_subdivisions = 10000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  std::size_t subdivisions = 0;
  bool converged = false;
};

/// Globally adaptive 21-point Gauss-Kronrod quadrature on [a, b].
///
/// The interval with the largest error estimate is bisected until the total
/// error drops below max(abs_tol, rel_tol * |value|) or the subdivision
/// budget runs out. Nodes are interior, so integrable endpoint
/// singularities are never evaluated. Never throws on non-convergence;
/// inspect `converged`.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& options = {});

/// Like integrate_adaptive but throws NumericalError (with the best estimate
/// attached) when the tolerance is not met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& options = {});

}  // namespace pflight
