#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pflight/params.hpp"
#include "pflight/rng.hpp"

namespace pflight {

/// Exact continuous-time path of a planar random flight on [0, horizon].
///
/// Segment j (0-based) runs from knot j to knot j+1 with heading
/// directions[j], where the knots are 0, event_times..., horizon. The
/// initial heading is not an event: event_times holds direction changes only.
struct Trajectory {
  double horizon = 0.0;
  std::vector<double> event_times;
  std::vector<double> directions;
  FlightParams params;

  std::size_t event_count() const noexcept { return event_times.size(); }
  /// Start time of segment j.
  double segment_begin(std::size_t j) const { return j == 0 ? 0.0 : event_times[j - 1]; }
  /// End time of segment j.
  double segment_end(std::size_t j) const {
    return j == event_times.size() ? horizon : event_times[j];
  }
  /// Sum of segment lengths; equals c * horizon up to rounding.
  double path_length() const;
};

/// Positions seen by an observer at t_i = i * delta, i = 0..n.
struct DiscreteSample {
  double delta = 0.0;
  std::vector<Point> positions;
  FlightParams params;

  std::size_t intervals() const noexcept {
    return positions.empty() ? 0 : positions.size() - 1;
  }
  double time_at(std::size_t i) const noexcept { return static_cast<double>(i) * delta; }
};

/// Draws a trajectory with Exponential(lambda) inter-event times (inversion,
/// -ln(U)/lambda) and headings 2*pi*U, U uniform on (0, 1]. Pure function of
/// its arguments.
Trajectory simulate_trajectory(const FlightParams& params, double horizon, SeedSpec seed);

/// Same as above but draws from a caller-owned generator.
Trajectory simulate_trajectory(const FlightParams& params, double horizon, Xoshiro256& rng);

/// Position on the path at time t in [0, horizon].
Point position_at(const Trajectory& traj, double t);

/// Positions at the n+1 grid times i * horizon / n, computed in a single
/// merged sweep over events and grid points.
DiscreteSample sample_at_grid(const Trajectory& traj, std::size_t n);

/// counts[i] = number of events in ((i)*delta, (i+1)*delta] for the i-th
/// observation interval (0-based), delta = horizon / n.
std::vector<std::uint32_t> ground_truth_counts(const Trajectory& traj, std::size_t n);

}  // namespace pflight
