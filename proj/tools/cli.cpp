#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "pflight/analytics.hpp"
#include "pflight/errors.hpp"
#include "pflight/estimators.hpp"
#include "pflight/flight.hpp"
#include "pflight/io.hpp"
#include "pflight/montecarlo.hpp"

namespace pflight::cli {

namespace {

struct SimulateOptions {
  double lambda = 1.0;
  double c = 1.0;
  double horizon = 10.0;
  std::size_t n = 100;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  double x0 = 0.0;
  double y0 = 0.0;
  std::string format = "csv";
  std::string trajectory_out;
};

struct EstimateOptions {
  std::string in = "-";
  std::string format = "auto";
  double c = 1.0;
  std::string estimator = "all";
  double epsilon = kDefaultTurnEpsilon;
};

struct DensityOptions {
  double lambda = 1.0;
  double c = 1.0;
  double t = 1.0;
  double x0 = 0.0;
  double y0 = 0.0;
  std::vector<double> r;
  std::size_t points = 10;
};

struct MomentsOptions {
  double lambda = 1.0;
  double c = 1.0;
  double t = 1.0;
  std::vector<int> p{1, 2, 3};
};

struct FisherOptions {
  double lambda = 1.0;
  double delta = 1.0;
  std::size_t n = 1;
};

struct McOptions {
  std::string config;
  bool table1 = false;
  std::string raw;
  std::optional<std::size_t> threads;
  std::optional<std::size_t> reps;
  std::optional<std::uint64_t> seed;
};

// Writes to a file when a path is given, else to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ParameterError("cannot open output file '" + path + "'");
      out_ = file_.get();
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ParameterError(std::string("--") + name + " must be positive and finite");
  }
}

void run_simulate(const SimulateOptions& o, std::ostream& out) {
  const FlightParams params{o.lambda, o.c, {o.x0, o.y0}};
  params.validate();
  require_positive(o.horizon, "T");
  if (o.n == 0) throw ParameterError("--n must be at least 1");

  const Trajectory traj = simulate_trajectory(params, o.horizon, SeedSpec{o.seed, o.stream});
  const DiscreteSample sample = sample_at_grid(traj, o.n);
  if (!o.trajectory_out.empty()) {
    Sink sink(o.trajectory_out, out);
    io::write_trajectory_ndjson(sink.stream(), traj);
  }
  if (o.format == "csv") {
    io::write_sample_csv(out, sample);
  } else {
    io::write_sample_ndjson(out, sample);
  }
}

void run_estimate(const EstimateOptions& o, std::istream& default_in, std::ostream& out) {
  require_positive(o.c, "c");
  std::string format = o.format;
  if (format == "auto") {
    const bool ndjson = o.in.size() >= 7 &&
                        (o.in.ends_with(".ndjson") || o.in.ends_with(".jsonl"));
    format = ndjson ? "ndjson" : "csv";
  }

  std::ifstream file;
  std::istream* in = &default_in;
  if (o.in != "-") {
    file.open(o.in);
    if (!file) throw ParameterError("cannot open input file '" + o.in + "'");
    in = &file;
  }
  const io::ObservedPath path =
      format == "csv" ? io::read_positions_csv(*in) : io::read_positions_ndjson(*in);
  const DiscreteSample sample = io::to_discrete_sample(path, o.c);
  const IncrementSummary summary = summarize_increments(sample, o.epsilon);

  io::write_estimates_csv_header(out);
  auto emit = [&](const Estimate& e) { io::write_estimate_csv_row(out, e, summary.n_plus); };
  if (o.estimator == "hat" || o.estimator == "all") emit(lambda_hat(summary));
  if (o.estimator == "tilde" || o.estimator == "all") emit(lambda_tilde(summary));
  if (o.estimator == "dot" || o.estimator == "all") emit(lambda_dot(summary));
}

void run_density(const DensityOptions& o, std::ostream& out) {
  const FlightParams params{o.lambda, o.c, {o.x0, o.y0}};
  params.validate();
  require_positive(o.t, "t");
  const double ct = o.c * o.t;
  const double rho0 = std::hypot(o.x0, o.y0);
  const double r_lo = std::max(0.0, rho0 - ct);
  const double r_hi = ct + rho0;

  std::vector<double> radii = o.r;
  if (radii.empty()) {
    if (o.points == 0) throw ParameterError("--points must be at least 1");
    for (std::size_t k = 1; k <= o.points; ++k) {
      radii.push_back(r_lo + (r_hi - r_lo) * static_cast<double>(k) /
                                 static_cast<double>(o.points + 1));
    }
  }
  for (double r : radii) {
    if (!(r > r_lo && r < r_hi)) {
      throw ParameterError("--r values must lie strictly inside the reachable range (" +
                           io::format_double(r_lo) + ", " + io::format_double(r_hi) + ")");
    }
    if (rho0 > 0.0 && r == ct - rho0) {
      throw ParameterError("--r equals ct - |origin|, where the density is unbounded");
    }
  }

  out << "r,ac,singular_weight\n";
  for (double r : radii) {
    const DensityValue v = rho0 == 0.0 ? radial_density_origin(params, o.t, r)
                                       : radial_density_offset(params, o.t, r);
    out << io::format_double(r) << ',' << io::format_double(v.ac) << ','
        << io::format_double(v.singular_weight) << '\n';
  }
}

void run_moments(const MomentsOptions& o, std::ostream& out) {
  const FlightParams params{o.lambda, o.c, {0.0, 0.0}};
  params.validate();
  require_positive(o.t, "t");
  for (int p : o.p) {
    if (p < 1 || p > 39) throw ParameterError("--p values must lie in [1, 39]");
  }
  out << "p,value_paper,value_quadrature\n";
  for (int p : o.p) {
    out << p << ',' << io::format_double(moment_closed_form_paper(params, o.t, p)) << ','
        << io::format_double(moment_quadrature(params, o.t, p)) << '\n';
  }
}

void run_fisher(const FisherOptions& o, std::ostream& out) {
  require_positive(o.lambda, "lambda");
  require_positive(o.delta, "delta");
  if (o.n == 0) throw ParameterError("--n must be at least 1");
  const FisherInfo info = fisher_info(o.lambda, o.delta, o.n);
  out << "lambda,delta,n,per_obs,idealized,total\n"
      << io::format_double(o.lambda) << ',' << io::format_double(o.delta) << ',' << info.n << ','
      << io::format_double(info.per_observation) << ','
      << io::format_double(info.idealized_per_observation) << ','
      << io::format_double(info.total) << '\n';
}

void run_mc(const McOptions& o, std::ostream& out) {
  ExperimentConfig config;
  if (o.table1) {
    if (!o.config.empty()) throw ParameterError("--table1 and --config are exclusive");
    config = ExperimentConfig::table1();
  } else {
    if (o.config.empty()) throw ParameterError("mc needs --config or --table1");
    std::ifstream file(o.config);
    if (!file) throw ParameterError("cannot open config file '" + o.config + "'");
    std::stringstream text;
    text << file.rdbuf();
    config = io::parse_experiment_config(text.str());
  }
  if (o.threads) config.threads = *o.threads;
  if (o.reps) config.reps = *o.reps;
  if (o.seed) config.master_seed = *o.seed;
  config.threads = effective_threads(config.threads);
  config.validate();

  std::unique_ptr<Sink> raw_sink;
  if (!o.raw.empty()) raw_sink = std::make_unique<Sink>(o.raw, out);

  const ExperimentResult result = run_experiment(config, raw_sink != nullptr);
  io::write_summary_csv(out, result.summaries);
  if (raw_sink) io::write_records_ndjson(raw_sink->stream(), result.records, config);
}

void report_runtime_error(std::ostream& err, const char* kind, const std::exception& e) {
  nlohmann::json j = {{"error", kind}, {"message", e.what()}};
  if (const auto* ne = dynamic_cast<const NumericalError*>(&e)) {
    j["estimate"] = ne->estimate();
    j["error_estimate"] = ne->error_estimate();
  }
  err << j.dump() << '\n';
}

}  // namespace

std::size_t effective_threads(std::size_t requested) {
  std::size_t threads = requested;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PFL_THREADS")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) threads = std::min<std::size_t>(threads, cap);
  }
  return threads;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar random flight simulation, densities and turn-rate estimation", "pflight"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write results to this file instead of stdout");

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate a flight and print its grid sample");
  sim_cmd->add_option("--lambda", sim.lambda, "Turn rate")->required();
  sim_cmd->add_option("--c", sim.c, "Speed")->required();
  sim_cmd->add_option("--T", sim.horizon, "Time horizon")->required();
  sim_cmd->add_option("--n", sim.n, "Number of observation intervals")->required();
  sim_cmd->add_option("--seed", sim.seed, "Master seed");
  sim_cmd->add_option("--stream", sim.stream, "Stream index");
  sim_cmd->add_option("--x0", sim.x0, "Start x");
  sim_cmd->add_option("--y0", sim.y0, "Start y");
  sim_cmd->add_option("--format", sim.format)->check(CLI::IsMember({"csv", "ndjson"}));
  sim_cmd->add_option("--trajectory-out", sim.trajectory_out,
                      "Also write the exact trajectory as NDJSON to this file");
  sim_cmd->add_option("--out", out_path);

  EstimateOptions est;
  auto* est_cmd = app.add_subcommand("estimate", "Estimate lambda from observed positions");
  est_cmd->add_option("--in", est.in, "Positions file (CSV i,t,x,y or NDJSON); - for stdin");
  est_cmd->add_option("--format", est.format)->check(CLI::IsMember({"auto", "csv", "ndjson"}));
  est_cmd->add_option("--c", est.c, "Known speed")->required();
  est_cmd->add_option("--estimator", est.estimator)
      ->check(CLI::IsMember({"hat", "tilde", "dot", "all"}));
  est_cmd->add_option("--epsilon", est.epsilon, "Relative turn-classification tolerance");
  est_cmd->add_option("--out", out_path);

  DensityOptions den;
  auto* den_cmd = app.add_subcommand("density", "Radial density of the distance from (0,0)");
  den_cmd->add_option("--lambda", den.lambda)->required();
  den_cmd->add_option("--c", den.c)->required();
  den_cmd->add_option("--t", den.t)->required();
  den_cmd->add_option("--x0", den.x0);
  den_cmd->add_option("--y0", den.y0);
  den_cmd->add_option("--r", den.r, "Radii (comma separated)")->delimiter(',');
  den_cmd->add_option("--points", den.points, "Evenly spaced radii when --r is absent");
  den_cmd->add_option("--out", out_path);

  MomentsOptions mom;
  auto* mom_cmd = app.add_subcommand("moments", "Moments E R^p(t) for a flight from (0,0)");
  mom_cmd->add_option("--lambda", mom.lambda)->required();
  mom_cmd->add_option("--c", mom.c)->required();
  mom_cmd->add_option("--t", mom.t)->required();
  mom_cmd->add_option("--p", mom.p, "Orders (comma separated)")->delimiter(',');
  mom_cmd->add_option("--out", out_path);

  FisherOptions fis;
  auto* fis_cmd = app.add_subcommand("fisher", "Fisher information per observation and total");
  fis_cmd->add_option("--lambda", fis.lambda)->required();
  fis_cmd->add_option("--delta", fis.delta)->required();
  fis_cmd->add_option("--n", fis.n)->required();
  fis_cmd->add_option("--out", out_path);

  McOptions mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo bias / RMSE study");
  mc_cmd->add_option("--config", mc.config, "Experiment configuration (JSON)");
  mc_cmd->add_flag("--table1", mc.table1, "Use the built-in T=500 study grid");
  mc_cmd->add_option("--raw", mc.raw, "Write per-replication NDJSON to this file");
  mc_cmd->add_option("--threads", mc.threads, "Worker threads (0 = auto)");
  mc_cmd->add_option("--reps", mc.reps, "Override the replication count");
  mc_cmd->add_option("--seed", mc.seed, "Override the master seed");
  mc_cmd->add_option("--out", out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    Sink sink(out_path, out);
    std::ostream& dest = sink.stream();
    if (*sim_cmd) {
      run_simulate(sim, dest);
    } else if (*est_cmd) {
      run_estimate(est, std::cin, dest);
    } else if (*den_cmd) {
      run_density(den, dest);
    } else if (*mom_cmd) {
      run_moments(mom, dest);
    } else if (*fis_cmd) {
      run_fisher(fis, dest);
    } else if (*mc_cmd) {
      run_mc(mc, dest);
    }
    dest.flush();
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    report_runtime_error(err, "numerical", e);
    return kExitRuntimeError;
  } catch (const InconsistentInputError& e) {
    report_runtime_error(err, "inconsistent_input", e);
    return kExitRuntimeError;
  } catch (const std::exception& e) {
    report_runtime_error(err, "runtime", e);
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace pflight::cli
