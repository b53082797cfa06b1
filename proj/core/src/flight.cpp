#include "pflight/flight.hpp"

#include <algorithm>
#include <cmath>

#include "pflight/errors.hpp"

namespace pflight {

namespace {

void check_horizon(double horizon) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw ParameterError("horizon T must be positive and finite");
  }
}

double grid_time(std::size_t i, std::size_t n, double delta, double horizon) {
  return i == n ? horizon : static_cast<double>(i) * delta;
}

}  // namespace

double Trajectory::path_length() const {
  double total = 0.0;
  for (std::size_t j = 0; j < directions.size(); ++j) {
    total += params.c * (segment_end(j) - segment_begin(j));
  }
  return total;
}

Trajectory simulate_trajectory(const FlightParams& params, double horizon, SeedSpec seed) {
  Xoshiro256 rng(seed);
  return simulate_trajectory(params, horizon, rng);
}

// Draw order: initial heading, then (inter-arrival, heading) pairs until the
// next arrival falls past the horizon.
Trajectory simulate_trajectory(const FlightParams& params, double horizon, Xoshiro256& rng) {
  params.validate();
  check_horizon(horizon);

  Trajectory traj;
  traj.horizon = horizon;
  traj.params = params;
  traj.event_times.reserve(static_cast<std::size_t>(params.lambda * horizon * 1.1) + 16);
  traj.directions.reserve(traj.event_times.capacity() + 1);

  traj.directions.push_back(kTwoPi * rng.uniform_open_closed());
  double t = 0.0;
  for (;;) {
    t += -std::log(rng.uniform_open_closed()) / params.lambda;
    if (t >= horizon) break;
    // A zero inter-arrival (U == 1) would repeat a time; merge it instead.
    if (!traj.event_times.empty() && t <= traj.event_times.back()) {
      traj.directions.back() = kTwoPi * rng.uniform_open_closed();
      continue;
    }
    if (t <= 0.0) {
      traj.directions.back() = kTwoPi * rng.uniform_open_closed();
      continue;
    }
    traj.event_times.push_back(t);
    traj.directions.push_back(kTwoPi * rng.uniform_open_closed());
  }
  return traj;
}

Point position_at(const Trajectory& traj, double t) {
  if (!(t >= 0.0 && t <= traj.horizon)) {
    throw DomainError("position_at: t outside [0, T]");
  }
  const double c = traj.params.c;
  Point p = traj.params.origin;
  std::size_t j = 0;
  while (j < traj.event_times.size() && traj.event_times[j] < t) {
    const double len = c * (traj.segment_end(j) - traj.segment_begin(j));
    p.x += len * std::cos(traj.directions[j]);
    p.y += len * std::sin(traj.directions[j]);
    ++j;
  }
  const double len = c * (t - traj.segment_begin(j));
  p.x += len * std::cos(traj.directions[j]);
  p.y += len * std::sin(traj.directions[j]);
  return p;
}

DiscreteSample sample_at_grid(const Trajectory& traj, std::size_t n) {
  if (n == 0) throw ParameterError("sample_at_grid: n must be at least 1");
  check_horizon(traj.horizon);

  DiscreteSample sample;
  sample.params = traj.params;
  sample.delta = traj.horizon / static_cast<double>(n);
  sample.positions.reserve(n + 1);

  const double c = traj.params.c;
  const auto& events = traj.event_times;
  Point knot = traj.params.origin;  // position at segment_begin(j)
  std::size_t j = 0;
  double cos_j = std::cos(traj.directions[0]);
  double sin_j = std::sin(traj.directions[0]);

  for (std::size_t i = 0; i <= n; ++i) {
    const double t = grid_time(i, n, sample.delta, traj.horizon);
    while (j < events.size() && events[j] < t) {
      const double len = c * (traj.segment_end(j) - traj.segment_begin(j));
      knot.x += len * cos_j;
      knot.y += len * sin_j;
      ++j;
      cos_j = std::cos(traj.directions[j]);
      sin_j = std::sin(traj.directions[j]);
    }
    const double len = c * (t - traj.segment_begin(j));
    sample.positions.push_back({knot.x + len * cos_j, knot.y + len * sin_j});
  }
  return sample;
}

std::vector<std::uint32_t> ground_truth_counts(const Trajectory& traj, std::size_t n) {
  if (n == 0) throw ParameterError("ground_truth_counts: n must be at least 1");
  check_horizon(traj.horizon);
  const double delta = traj.horizon / static_cast<double>(n);
  std::vector<std::uint32_t> counts(n, 0);
  std::size_t i = 0;  // interval (t_i, t_{i+1}]
  for (double s : traj.event_times) {
    while (i + 1 < n && s > grid_time(i + 1, n, delta, traj.horizon)) ++i;
    ++counts[i];
  }
  return counts;
}

}  // namespace pflight
