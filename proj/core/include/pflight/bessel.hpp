#pragma once

namespace pflight {

/// Largest order accepted by the Bessel routines.
inline constexpr double kMaxBesselOrder = 20.0;

/// Argument above which the large-x asymptotic expansion replaces the power
/// series for order nu: max(30, nu^2 / 2).
double bessel_series_cutoff(double nu);

/// Exponentially scaled modified Bessel function of the first kind,
/// exp(-x) * I_nu(x), for integer or half-integer nu in [0, 20] and x >= 0.
double bessel_i_scaled(double nu, double x);

/// Modified Bessel function of the first kind I_nu(x). Throws OverflowError
/// carrying exp(-x) * I_nu(x) and the exponent x when the value exceeds the
/// double range (x beyond about 713).
double bessel_i(double nu, double x);

}  // namespace pflight
