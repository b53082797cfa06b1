#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pflight/estimators.hpp"
#include "pflight/flight.hpp"
#include "pflight/montecarlo.hpp"

namespace pflight::io {

/// Significant digits for raw values (round-trip exact) and for summaries.
inline constexpr int kRawDigits = 17;
inline constexpr int kSummaryDigits = 6;

/// printf-style %.{digits}g; non-finite values print as inf, -inf, nan.
std::string format_double(double value, int digits = kRawDigits);

/// Header `i,t,x,y` then one row per grid point.
void write_sample_csv(std::ostream& out, const DiscreteSample& sample);
/// One JSON object per grid point with keys i, t, x, y.
void write_sample_ndjson(std::ostream& out, const DiscreteSample& sample);
/// One JSON object holding the whole trajectory.
void write_trajectory_ndjson(std::ostream& out, const Trajectory& traj);
Trajectory parse_trajectory_json(const std::string& line);

/// Observed positions and times as read back from CSV or NDJSON.
struct ObservedPath {
  std::vector<double> times;
  std::vector<Point> positions;
};

ObservedPath read_positions_csv(std::istream& in);
ObservedPath read_positions_ndjson(std::istream& in);

/// Converts an observed path into a DiscreteSample with speed c. Requires at
/// least two points, t_0 = 0 and equidistant times (relative tolerance 1e-9).
DiscreteSample to_discrete_sample(const ObservedPath& path, double c);

/// Header `kind,value,stderr,n,delta,n_plus,saturated`.
void write_estimates_csv_header(std::ostream& out);
void write_estimate_csv_row(std::ostream& out, const Estimate& estimate, std::size_t n_plus);

/// Header `lambda,c,T,n,delta,estimator,reps,bias,rmse,min,max,saturated`;
/// values in summary precision.
void write_summary_csv(std::ostream& out, std::span<const ExperimentSummary> summaries);
/// One JSON object per (replication, estimator).
void write_records_ndjson(std::ostream& out, std::span<const ReplicationRecord> records,
                          const ExperimentConfig& config);

/// Parses an experiment configuration document. Unknown keys are rejected;
/// missing keys take the ExperimentConfig defaults. Throws ParameterError.
ExperimentConfig parse_experiment_config(const std::string& json_text);
std::string experiment_config_to_json(const ExperimentConfig& config);

}  // namespace pflight::io
