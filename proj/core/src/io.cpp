#include "pflight/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "pflight/errors.hpp"

namespace pflight::io {

using nlohmann::json;

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_number(const std::string& text, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    while (used < text.size() && (text[used] == ' ' || text[used] == '\r')) ++used;
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParameterError("line " + std::to_string(line_no) + ": bad number '" + text + "'");
  }
}

}  // namespace

std::string format_double(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

void write_sample_csv(std::ostream& out, const DiscreteSample& sample) {
  out << "i,t,x,y\n";
  for (std::size_t i = 0; i < sample.positions.size(); ++i) {
    const Point& p = sample.positions[i];
    out << i << ',' << format_double(sample.time_at(i)) << ',' << format_double(p.x) << ','
        << format_double(p.y) << '\n';
  }
}

void write_sample_ndjson(std::ostream& out, const DiscreteSample& sample) {
  for (std::size_t i = 0; i < sample.positions.size(); ++i) {
    const Point& p = sample.positions[i];
    json j = {{"i", i}, {"t", sample.time_at(i)}, {"x", p.x}, {"y", p.y}};
    out << j.dump(-1, ' ', false, json::error_handler_t::strict) << '\n';
  }
}

void write_trajectory_ndjson(std::ostream& out, const Trajectory& traj) {
  json j = {{"type", "trajectory"},
            {"T", traj.horizon},
            {"lambda", traj.params.lambda},
            {"c", traj.params.c},
            {"origin", {traj.params.origin.x, traj.params.origin.y}},
            {"event_times", traj.event_times},
            {"directions", traj.directions}};
  out << j.dump() << '\n';
}

Trajectory parse_trajectory_json(const std::string& line) {
  try {
    const json j = json::parse(line);
    Trajectory traj;
    traj.horizon = j.at("T").get<double>();
    traj.params.lambda = j.at("lambda").get<double>();
    traj.params.c = j.at("c").get<double>();
    const auto& origin = j.at("origin");
    traj.params.origin = {origin.at(0).get<double>(), origin.at(1).get<double>()};
    traj.event_times = j.at("event_times").get<std::vector<double>>();
    traj.directions = j.at("directions").get<std::vector<double>>();
    if (traj.directions.size() != traj.event_times.size() + 1) {
      throw ParameterError("trajectory: directions must have one more entry than event_times");
    }
    return traj;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("trajectory JSON: ") + e.what());
  }
}

ObservedPath read_positions_csv(std::istream& in) {
  ObservedPath path;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (line != "i,t,x,y") throw ParameterError("positions CSV: expected header 'i,t,x,y'");
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 4) {
      throw ParameterError("line " + std::to_string(line_no) + ": expected 4 columns");
    }
    path.times.push_back(parse_number(fields[1], line_no));
    path.positions.push_back({parse_number(fields[2], line_no), parse_number(fields[3], line_no)});
  }
  return path;
}

ObservedPath read_positions_ndjson(std::istream& in) {
  ObservedPath path;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      path.times.push_back(j.at("t").get<double>());
      path.positions.push_back({j.at("x").get<double>(), j.at("y").get<double>()});
    } catch (const json::exception& e) {
      throw ParameterError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return path;
}

DiscreteSample to_discrete_sample(const ObservedPath& path, double c) {
  if (path.positions.size() < 2) throw ParameterError("need at least two observed positions");
  if (path.times.front() != 0.0) throw ParameterError("first observation must be at t = 0");
  const std::size_t n = path.positions.size() - 1;
  const double delta = path.times.back() / static_cast<double>(n);
  if (!(delta > 0.0)) throw ParameterError("observation times must increase");
  for (std::size_t i = 0; i <= n; ++i) {
    const double expected = static_cast<double>(i) * delta;
    if (std::abs(path.times[i] - expected) > 1e-9 * std::max(1.0, path.times.back())) {
      throw ParameterError("observation times must be equidistant (row " + std::to_string(i) +
                           ")");
    }
  }
  DiscreteSample sample;
  sample.delta = delta;
  sample.positions = path.positions;
  sample.params.c = c;
  sample.params.lambda = 1.0;  // unknown; only c enters the estimators
  sample.params.origin = path.positions.front();
  sample.params.validate();
  return sample;
}

void write_estimates_csv_header(std::ostream& out) {
  out << "kind,value,stderr,n,delta,n_plus,saturated\n";
}

void write_estimate_csv_row(std::ostream& out, const Estimate& e, std::size_t n_plus) {
  out << to_string(e.kind) << ',' << format_double(e.value) << ',' << format_double(e.std_error)
      << ',' << e.n << ',' << format_double(e.delta) << ',' << n_plus << ','
      << (e.saturated ? "true" : "false") << '\n';
}

void write_summary_csv(std::ostream& out, std::span<const ExperimentSummary> summaries) {
  out << "lambda,c,T,n,delta,estimator,reps,bias,rmse,min,max,saturated\n";
  const int d = kSummaryDigits;
  for (const auto& s : summaries) {
    out << format_double(s.lambda, d) << ',' << format_double(s.c, d) << ','
        << format_double(s.horizon, d) << ',' << s.n << ',' << format_double(s.delta(), d) << ','
        << to_string(s.estimator) << ',' << s.reps << ',' << format_double(s.bias, d) << ','
        << format_double(s.rmse, d) << ',' << format_double(s.min, d) << ','
        << format_double(s.max, d) << ',' << s.saturated_count << '\n';
  }
}

void write_records_ndjson(std::ostream& out, std::span<const ReplicationRecord> records,
                          const ExperimentConfig& config) {
  for (const auto& r : records) {
    for (const auto& o : r.outcomes) {
      json j = {{"lambda", r.cell.lambda},
                {"n", r.cell.n},
                {"delta", config.horizon / static_cast<double>(r.cell.n)},
                {"rep", r.rep},
                {"stream_index", replication_stream(r.cell, r.rep)},
                {"events", r.event_count},
                {"n_plus", r.n_plus},
                {"estimator", std::string(to_string(o.estimator))},
                {"value", number_or_null(o.value)},
                {"status", std::string(to_string(o.status))}};
      out << j.dump() << '\n';
    }
  }
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  ExperimentConfig config;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ParameterError("config: top level must be an object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "lambda_grid") {
        config.lambda_grid = value.get<std::vector<double>>();
      } else if (key == "n_grid") {
        config.n_grid = value.get<std::vector<std::size_t>>();
      } else if (key == "T") {
        config.horizon = value.get<double>();
      } else if (key == "c") {
        config.c = value.get<double>();
      } else if (key == "reps") {
        config.reps = value.get<std::size_t>();
      } else if (key == "master_seed") {
        config.master_seed = value.get<std::uint64_t>();
      } else if (key == "estimators") {
        config.estimators.clear();
        for (const auto& name : value) {
          config.estimators.push_back(parse_estimator_choice(name.get<std::string>()));
        }
      } else if (key == "epsilon") {
        config.epsilon = value.get<double>();
      } else if (key == "threads") {
        config.threads = value.get<std::size_t>();
      } else {
        throw ParameterError("config: unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ParameterError(std::string("config: ") + e.what());
  }
  config.validate();
  return config;
}

std::string experiment_config_to_json(const ExperimentConfig& config) {
  std::vector<std::string> names;
  for (auto e : config.estimators) names.emplace_back(to_string(e));
  json j = {{"lambda_grid", config.lambda_grid},
            {"n_grid", config.n_grid},
            {"T", config.horizon},
            {"c", config.c},
            {"reps", config.reps},
            {"master_seed", config.master_seed},
            {"estimators", names},
            {"epsilon", config.epsilon},
            {"threads", config.threads}};
  return j.dump(2);
}

}  // namespace pflight::io
