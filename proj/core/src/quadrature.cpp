#include "pflight/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "pflight/errors.hpp"

namespace pflight {

namespace {

// Kronrod abscissae for the 21-point rule; odd indices are the 10-point
// Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980054214, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod21(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  std::array<double, 10> lo{};
  std::array<double, 10> hi{};
  double kronrod = kWgk[10] * fc;
  double gauss = 0.0;
  double abs_sum = kWgk[10] * std::abs(fc);
  for (std::size_t k = 0; k < 10; ++k) {
    const double dx = half * kXgk[k];
    lo[k] = f(center - dx);
    hi[k] = f(center + dx);
    kronrod += kWgk[k] * (lo[k] + hi[k]);
    abs_sum += kWgk[k] * (std::abs(lo[k]) + std::abs(hi[k]));
    if (k % 2 == 1) gauss += kWg[k / 2] * (lo[k] + hi[k]);
  }
  // QUADPACK error heuristic: scale |K - G| against the spread of f about
  // its mean, and never report less than the roundoff floor.
  const double mean = 0.5 * kronrod;
  double spread = kWgk[10] * std::abs(fc - mean);
  for (std::size_t k = 0; k < 10; ++k) {
    spread += kWgk[k] * (std::abs(lo[k] - mean) + std::abs(hi[k] - mean));
  }
  const double width = std::abs(half);
  kronrod *= half;
  gauss *= half;
  spread *= width;
  abs_sum *= width;
  double error = std::abs(kronrod - gauss);
  if (spread != 0.0 && error != 0.0) {
    error = spread * std::min(1.0, std::pow(200.0 * error / spread, 1.5));
  }
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    error = std::max(50.0 * kEps * abs_sum, error);
  }
  return {a, b, kronrod, error};
}

// True when every 21-point node lies strictly inside [a, b].
bool resolvable(double a, double b) {
  const double center = 0.5 * (a + b);
  const double dx = 0.5 * (b - a) * kXgk[0];
  return center - dx > a && center + dx < b;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& options) {
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  const double sign = a < b ? 1.0 : -1.0;
  if (a > b) std::swap(a, b);

  std::priority_queue<Segment> heap;
  const Segment first = gauss_kronrod21(f, a, b);
  heap.push(first);
  double total = first.value;
  double total_error = first.error;
  result.evaluations = 21;

  auto tolerance = [&] { return std::max(options.abs_tol, options.rel_tol * std::abs(total)); };

  // Segments too narrow to split without Kronrod nodes landing on their
  // endpoints are retired here and kept as final leaves.
  std::vector<Segment> leaves;
  double retired_error = 0.0;
  while (!heap.empty() && total_error > tolerance() && retired_error <= tolerance() &&
         result.subdivisions < options.max_subdivisions) {
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!resolvable(worst.a, mid) || !resolvable(mid, worst.b)) {
      leaves.push_back(worst);
      retired_error += worst.error;
      continue;
    }
    const Segment left = gauss_kronrod21(f, worst.a, mid);
    const Segment right = gauss_kronrod21(f, mid, worst.b);
    result.evaluations += 42;
    ++result.subdivisions;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the leaves so that incremental updates do not leave drift.
  total = 0.0;
  total_error = 0.0;
  while (!heap.empty()) {
    leaves.push_back(heap.top());
    heap.pop();
  }
  std::sort(leaves.begin(), leaves.end(),
            [](const Segment& l, const Segment& r) { return l.a < r.a; });
  for (const auto& s : leaves) {
    total += s.value;
    total_error += s.error;
  }

  result.value = sign * total;
  result.error = total_error;
  result.converged = std::isfinite(total) && total_error <= tolerance();
  return result;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& options) {
  const QuadratureResult r = integrate_adaptive(f, a, b, options);
  if (!r.converged) {
    throw NumericalError("adaptive quadrature did not reach the requested tolerance", r.value,
                         r.error);
  }
  return r.value;
}

}  // namespace pflight
