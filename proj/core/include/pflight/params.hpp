#pragma once

#include <cmath>
#include <numbers>

#include "pflight/errors.hpp"

namespace pflight {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double squared_norm(Point p) { return p.x * p.x + p.y * p.y; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }

/// Parameters of a planar random flight: turn rate, speed and start point.
struct FlightParams {
  double lambda = 1.0;
  double c = 1.0;
  Point origin{};

  /// Throws ParameterError unless lambda and c are positive and finite.
  void validate() const;
};

inline void FlightParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda must be positive and finite");
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw ParameterError("c must be positive and finite");
  }
  if (!std::isfinite(origin.x) || !std::isfinite(origin.y)) {
    throw ParameterError("origin must be finite");
  }
}

}  // namespace pflight
