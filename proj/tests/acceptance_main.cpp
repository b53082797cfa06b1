// Acceptance suite: one check per exit criterion, each printing a single
// PASS/FAIL line (plus indented detail lines). Run all criteria with no
// arguments, or one with --criterion N.

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "pflight/analytics.hpp"
#include "pflight/estimators.hpp"
#include "pflight/flight.hpp"
#include "pflight/io.hpp"
#include "pflight/montecarlo.hpp"
#include "test_support.hpp"

namespace pflight {
namespace {

using testing::mean_var;
using testing::relative_diff;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    pass = pass && ok;
  }
};

std::string fmt(double v, int digits = 6) { return io::format_double(v, digits); }

// ---------------------------------------------------------------------------
// 1. Table-1 regression at full scale.

struct Table1Target {
  double lambda;
  std::size_t n;
  double bias;
  double bias_tol;
  double rmse;
  double rmse_tol;
};

constexpr Table1Target kTable1Targets[] = {
    {0.10, 200, 0.002, 0.005, 0.015, 0.005},
    {0.50, 500, 0.002, 0.005, 0.035, 0.005},
    {1.00, 1000, 0.002, 0.005, 0.050, 0.005},
    {2.00, 200, -0.031, 0.008, 0.141, 0.008},
};

Outcome table1_for(const std::vector<ExperimentSummary>& summaries, EstimatorChoice which) {
  Outcome out;
  for (const auto& target : kTable1Targets) {
    for (const auto& s : summaries) {
      if (s.estimator != which || s.lambda != target.lambda || s.n != target.n) continue;
      const bool bias_ok = std::abs(s.bias - target.bias) <= target.bias_tol;
      const bool rmse_ok = std::abs(s.rmse - target.rmse) <= target.rmse_tol;
      out.check(bias_ok, std::string(to_string(which)) + " lambda=" + fmt(target.lambda) +
                             " n=" + std::to_string(target.n) + " bias " + fmt(s.bias, 4) +
                             " target " + fmt(target.bias) + " +/- " + fmt(target.bias_tol));
      out.check(rmse_ok, std::string(to_string(which)) + " lambda=" + fmt(target.lambda) +
                             " n=" + std::to_string(target.n) + " rmse " + fmt(s.rmse, 4) +
                             " target " + fmt(target.rmse) + " +/- " + fmt(target.rmse_tol));
    }
  }
  return out;
}

Outcome criterion_table1() {
  ExperimentConfig config = ExperimentConfig::table1();
  config.estimators = {EstimatorChoice::hat, EstimatorChoice::tilde};
  const ExperimentResult result = run_experiment(config);

  Outcome hat = table1_for(result.summaries, EstimatorChoice::hat);
  const Outcome tilde = table1_for(result.summaries, EstimatorChoice::tilde);
  Outcome out;
  out.details = hat.details;
  if (hat.pass) {
    out.details.push_back("estimator: hat (root of the pseudo-likelihood score)");
  } else if (tilde.pass) {
    out.details.insert(out.details.end(), tilde.details.begin(), tilde.details.end());
    out.details.push_back("estimator: tilde reproduces the table; hat does not");
  } else {
    out.pass = false;
    out.details.insert(out.details.end(), tilde.details.begin(), tilde.details.end());
    out.details.push_back("neither estimator reproduces every targeted cell");
  }
  std::ostringstream csv;
  io::write_summary_csv(csv, result.summaries);
  std::istringstream lines(csv.str());
  for (std::string line; std::getline(lines, line);) out.details.push_back("  " + line);
  return out;
}

// ---------------------------------------------------------------------------
// 2. Density normalization.

double radial_mass_origin(const FlightParams& p, double t) {
  // r = sqrt((ct)^2 - z^2), dr = -(z / r) dz removes the 1/sqrt edge.
  const double ct = p.c * t;
  return integrate(
      [&](double z) {
        const double r = std::sqrt((ct - z) * (ct + z));
        if (!(r > 0.0) || !(r < ct)) return 0.0;
        return radial_density_origin(p, t, r).ac * z / r;
      },
      0.0, ct, {1e-12, 0.0, 10000});
}

double radial_mass_offset(const FlightParams& p, double t) {
  const double ct = p.c * t;
  const double rho0 = norm(p.origin);
  const QuadratureOptions inner{1e-11, 1e-12, 10000};
  auto f = [&](double r) { return radial_density_offset(p, t, r, inner).ac; };
  const QuadratureOptions outer{1e-9, 0.0, 10000};
  return integrate(f, 0.0, ct - rho0, outer) + integrate(f, ct - rho0, ct + rho0, outer);
}

Outcome criterion_normalization() {
  Outcome out;
  double worst = 0.0;
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (double c : {0.5, 1.0, 2.0}) {
      for (double t : {0.5, 1.0, 2.0}) {
        const FlightParams p{lambda, c, {}};
        const double total = radial_mass_origin(p, t) + std::exp(-lambda * t);
        worst = std::max(worst, std::abs(total - 1.0));
      }
    }
  }
  out.check(worst <= 1e-8, "origin start, 27 grid points: max |mass - 1| = " + fmt(worst, 3) +
                               " (tol 1e-8)");
  const FlightParams offset{1.0, 1.0, {0.2, 0.1}};
  const double ac_mass = radial_mass_offset(offset, 1.0);
  const double total = ac_mass + std::exp(-1.0);
  out.check(std::abs(total - 1.0) <= 1e-6,
            "origin (0.2, 0.1), lambda=c=t=1: a.c. mass " + fmt(ac_mass, 10) +
                " (1 - e^-1 = 0.632121), |mass - 1| = " + fmt(std::abs(total - 1.0), 3) +
                " (tol 1e-6)");
  return out;
}

// ---------------------------------------------------------------------------
// 3. Fisher information closed form against quadrature.

Outcome criterion_fisher() {
  Outcome out;
  boost::math::quadrature::tanh_sinh<double> ts;
  double worst_lib = 0.0;
  double worst_2d = 0.0;
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (double delta : {0.5, 1.0, 2.0}) {
      const double closed = fisher_info(lambda, delta, 1).per_observation;
      worst_lib = std::max(worst_lib, std::abs(closed - fisher_info_quadrature(lambda, delta)));
      // Independent 2-D polar integral of the score-squared integrand, c = 1.
      const double c = 1.0;
      const double cd = c * delta;
      auto radial = [&](double rho) {
        const double u = (cd - rho) * (cd + rho);
        const double s = 1.0 / lambda - delta + std::sqrt(u) / c;
        const double value = lambda / (2.0 * kPi * c) *
                             std::exp(-lambda * delta + lambda / c * std::sqrt(u)) /
                             std::sqrt(u) * s * s * rho;
        return ts.integrate([&](double) { return value; }, 0.0, 2.0 * kPi);
      };
      worst_2d = std::max(worst_2d, std::abs(closed - ts.integrate(radial, 0.0, cd)));
    }
  }
  out.check(worst_lib <= 1e-8,
            "closed form vs reduced quadrature on {0.5,1,2}^2: max diff " + fmt(worst_lib, 3));
  out.check(worst_2d <= 1e-8,
            "closed form vs 2-D polar quadrature on {0.5,1,2}^2: max diff " + fmt(worst_2d, 3));
  const double spot = fisher_info(1.0, 1.0, 1).per_observation;
  out.check(std::abs(spot - (1.0 - 2.0 * std::exp(-1.0))) <= 1e-15 &&
                std::abs(spot - 0.264241) <= 1e-6,
            "I(1, 1) = " + fmt(spot, 10));
  return out;
}

// ---------------------------------------------------------------------------
// 4. Moments: quadrature vs simulation vs the published closed form.

Outcome criterion_moments() {
  Outcome out;
  const FlightParams p{1.0, 1.0, {}};
  constexpr std::size_t kPaths = 100000;
  std::vector<std::vector<double>> powers(4);
  for (std::size_t k = 0; k < kPaths; ++k) {
    const Trajectory traj = simulate_trajectory(p, 1.0, SeedSpec{4, k});
    const double r = norm(position_at(traj, 1.0));
    for (int q = 1; q <= 3; ++q) powers[q].push_back(std::pow(r, q));
  }
  for (int q = 1; q <= 3; ++q) {
    const auto mv = mean_var(powers[q]);
    const double se = std::sqrt(mv.variance / kPaths);
    const double quad = moment_quadrature(p, 1.0, q);
    out.check(std::abs(quad - mv.mean) <= 3.0 * se,
              "p=" + std::to_string(q) + ": quadrature " + fmt(quad, 8) + " sample " +
                  fmt(mv.mean, 8) + " (3 SE = " + fmt(3 * se, 3) + ")");
  }
  const double paper = moment_closed_form_paper(p, 1.0, 2);
  const double quad = moment_quadrature(p, 1.0, 2.0);
  out.check(std::abs(paper - 0.6079) <= 5e-4 && std::abs(quad - 0.7358) <= 5e-4,
            "p=2 published closed form " + fmt(paper, 6) + " vs quadrature " + fmt(quad, 6) +
                ": discrepancy persists");
  return out;
}

// ---------------------------------------------------------------------------
// 5. Estimator property suite.

Outcome criterion_estimator_properties() {
  Outcome out;
  double worst_score = 0.0;
  double worst_rot = 0.0;
  double worst_scale = 0.0;
  bool tilde_equal = true;
  std::size_t all_turned_cases = 0;
  for (std::uint64_t k = 0; k < 40; ++k) {
    const double lambda = 0.2 + 0.25 * static_cast<double>(k % 10);
    const Trajectory traj = simulate_trajectory({lambda, 1.0, {}}, 200.0, SeedSpec{55, k});
    const DiscreteSample sample = sample_at_grid(traj, 50 + 20 * k);
    const IncrementSummary s = summarize_increments(sample);
    const Estimate hat = lambda_hat(s);
    if (s.n_plus > 0) {
      worst_score =
          std::max(worst_score, std::abs(score(s, hat.value)) / static_cast<double>(s.n));
    }
    if (s.n_plus == s.n) {
      ++all_turned_cases;
      tilde_equal = tilde_equal && lambda_tilde(s).value == hat.value;
    }
    const double angle = 0.37 * static_cast<double>(k + 1);
    DiscreteSample rotated = sample;
    DiscreteSample scaled = sample;
    const double a = 0.05 + 3.0 * static_cast<double>(k);
    scaled.params.c *= a;
    for (std::size_t i = 0; i < sample.positions.size(); ++i) {
      const Point q = sample.positions[i];
      rotated.positions[i] = {std::cos(angle) * q.x - std::sin(angle) * q.y,
                              std::sin(angle) * q.x + std::cos(angle) * q.y};
      scaled.positions[i] = {a * q.x, a * q.y};
    }
    const IncrementSummary sr = summarize_increments(rotated);
    const IncrementSummary ss = summarize_increments(scaled);
    for (auto* est : {&lambda_hat, &lambda_tilde, &lambda_dot}) {
      const double base = (*est)(s).value;
      if (std::isinf(base)) continue;
      worst_rot = std::max(worst_rot, relative_diff((*est)(sr).value, base));
      worst_scale = std::max(worst_scale, relative_diff((*est)(ss).value, base));
    }
  }
  // Dense-turn cases to exercise the hat == tilde identity.
  for (std::uint64_t k = 0; k < 20; ++k) {
    const IncrementSummary s = summarize_increments(
        sample_at_grid(simulate_trajectory({6.0, 1.0, {}}, 100.0, SeedSpec{56, k}), 40));
    if (s.n_plus != s.n) continue;
    ++all_turned_cases;
    tilde_equal = tilde_equal && lambda_tilde(s).value == lambda_hat(s).value;
  }
  out.check(worst_score <= 1e-10, "score root: max |F_n(hat)| / n = " + fmt(worst_score, 3));
  out.check(worst_rot <= 1e-12, "rotation invariance: max rel diff " + fmt(worst_rot, 3));
  out.check(worst_scale <= 1e-12, "scale invariance: max rel diff " + fmt(worst_scale, 3));
  out.check(tilde_equal && all_turned_cases > 0,
            "hat == tilde on " + std::to_string(all_turned_cases) + " fully turned samples");

  for (double lambda_delta : {0.1, 1.0, 5.0}) {
    std::size_t mismatches = 0;
    std::size_t checked = 0;
    for (std::uint64_t rep = 0; checked < 10000; ++rep) {
      const Trajectory traj = simulate_trajectory({lambda_delta, 1.0, {}}, 1000.0, {57, rep});
      const IncrementSummary s = summarize_increments(sample_at_grid(traj, 1000));
      const auto counts = ground_truth_counts(traj, 1000);
      for (std::size_t i = 0; i < 1000; ++i) mismatches += s.turned[i] != (counts[i] >= 1);
      checked += 1000;
    }
    out.check(mismatches == 0, "turn classification at lambda*delta=" + fmt(lambda_delta) + ": " +
                                   std::to_string(mismatches) + " mismatches in " +
                                   std::to_string(checked) + " intervals");
  }
  return out;
}

// ---------------------------------------------------------------------------
// 6. Asymptotic normality of the indicator estimator.

Outcome criterion_dot_normality() {
  Outcome out;
  constexpr std::size_t kReps = 2000;
  const double lambda = 1.0;
  const double horizon = 400.0;
  const double delta = 0.1;
  const auto n = static_cast<std::size_t>(std::llround(horizon / delta));
  std::vector<double> z;
  std::size_t saturated = 0;
  for (std::size_t r = 0; r < kReps; ++r) {
    const Trajectory traj = simulate_trajectory({lambda, 1.0, {}}, horizon, SeedSpec{66, r});
    const Estimate e = lambda_dot(summarize_increments(sample_at_grid(traj, n)));
    if (e.saturated) {
      ++saturated;
      continue;
    }
    z.push_back(std::sqrt(static_cast<double>(n) * delta) * (e.value - lambda) / std::sqrt(lambda));
  }
  const auto mv = mean_var(z);
  out.check(saturated == 0, "saturated replications: " + std::to_string(saturated));
  out.check(std::abs(mv.mean) <= 0.1, "|mean| = " + fmt(std::abs(mv.mean), 4) + " (tol 0.1)");
  out.check(mv.variance >= 0.8 && mv.variance <= 1.2,
            "variance = " + fmt(mv.variance, 4) + " (range [0.8, 1.2])");
  return out;
}

// ---------------------------------------------------------------------------
// 7. Kac / Bessel limit.

Outcome criterion_kac() {
  Outcome out;
  std::vector<double> sup;
  for (double c : {10.0, 30.0, 100.0}) {
    const FlightParams p{c * c, c, {}};
    double worst = 0.0;
    for (int k = 1; k <= 10; ++k) {
      const double r = 0.25 * k;
      worst = std::max(worst, std::abs(radial_density_origin(p, 1.0, r).ac -
                                       bessel_limit_density({}, 1.0, r)));
    }
    sup.push_back(worst);
    out.details.push_back("  c=" + fmt(c) + ": sup diff " + fmt(worst, 4));
  }
  out.check(sup[0] > sup[1] && sup[1] > sup[2], "sup difference decreasing in c");
  out.check(sup[2] <= 1e-2, "sup difference at c=100: " + fmt(sup[2], 4) + " (tol 1e-2)");
  return out;
}

// ---------------------------------------------------------------------------
// 8. Determinism across thread counts.

Outcome criterion_determinism() {
  Outcome out;
  ExperimentConfig config = ExperimentConfig::table1();
  std::string reference;
  for (std::size_t threads : {1u, 2u, 8u}) {
    config.threads = threads;
    std::ostringstream csv;
    io::write_summary_csv(csv, run_experiment(config).summaries);
    if (reference.empty()) {
      reference = csv.str();
      out.check(!reference.empty(), "threads=1 summary CSV: " + std::to_string(reference.size()) +
                                        " bytes");
    } else {
      out.check(csv.str() == reference,
                "threads=" + std::to_string(threads) + " byte-identical to threads=1");
    }
  }
  return out;
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "Table-1 regression (T=500, c=1, N=10000)", &criterion_table1},
    {2, "Density normalization", &criterion_normalization},
    {3, "Fisher closed form vs quadrature", &criterion_fisher},
    {4, "Moment oracle triangle", &criterion_moments},
    {5, "Estimator property suite", &criterion_estimator_properties},
    {6, "Asymptotic normality of the indicator estimator", &criterion_dot_normality},
    {7, "Kac/Bessel limit", &criterion_kac},
    {8, "Determinism across thread counts", &criterion_determinism},
};

}  // namespace
}  // namespace pflight

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: pflight_acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool all_pass = true;
  bool ran = false;
  for (const auto& c : pflight::kCriteria) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    pflight::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.details.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << '\n';
    for (const auto& d : outcome.details) std::cout << "       " << d << '\n';
    std::cout.flush();
    all_pass = all_pass && outcome.pass;
  }
  if (!ran) {
    std::cerr << "no such criterion\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
