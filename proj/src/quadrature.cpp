#include "casimir/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir::quad {
namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
using Gauss = boost::math::quadrature::gauss<double, 7>;

constexpr std::size_t kMaxIntervals = 4000;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double l1;
  bool operator<(const Panel& other) const { return error < other.error; }
};

// Kronrod 15-point estimate with the embedded 7-point Gauss rule as error gauge.
Panel evaluate(const std::function<double(double)>& f, double a, double b) {
  const auto& kx = Rule::abscissa();
  const auto& kw = Rule::weights();
  const auto& gw = Gauss::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(mid);
  double kronrod = kw[0] * fc;
  double l1 = kw[0] * std::abs(fc);
  double gauss = gw[0] * fc;  // the centre is a Gauss node of the 7-point rule
  for (std::size_t i = 1; i < kx.size(); ++i) {
    const double f1 = f(mid - half * kx[i]);
    const double f2 = f(mid + half * kx[i]);
    kronrod += kw[i] * (f1 + f2);
    l1 += kw[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 0) {
      gauss += gw[i / 2] * (f1 + f2);
    }
  }
  return Panel{a, b, kronrod * half, std::abs((kronrod - gauss) * half), l1 * std::abs(half)};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  if (!(b > a)) {
    if (a == b) {
      return Result{0.0, 0.0};
    }
    const Result flipped = integrate(f, b, a, rel_tol);
    return Result{-flipped.value, flipped.error_estimate};
  }
  std::priority_queue<Panel> panels;
  panels.push(evaluate(f, a, b));
  double value = panels.top().value;
  double error = panels.top().error;
  double l1 = panels.top().l1;

  while (panels.size() < kMaxIntervals && error > rel_tol * l1 && error > 0.0) {
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      panels.push(worst);
      break;  // interval exhausted at double resolution
    }
    const Panel left = evaluate(f, worst.a, mid);
    const Panel right = evaluate(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum from scratch to shed the drift of the running updates.
  value = 0.0;
  error = 0.0;
  while (!panels.empty()) {
    value += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  return Result{value, error};
}

Result integrate_piecewise(const std::function<double(double)>& f, std::span<const double> breakpoints,
                           double rel_tol) {
  if (breakpoints.size() < 2) {
    throw PreconditionError("integrate_piecewise: need at least two breakpoints");
  }
  Result total{0.0, 0.0};
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1])) {
      throw PreconditionError("integrate_piecewise: breakpoints must be strictly increasing");
    }
    const Result part = integrate(f, breakpoints[i - 1], breakpoints[i], rel_tol);
    total.value += part.value;
    total.error_estimate += part.error_estimate;
  }
  return total;
}

std::vector<double> endpoint_graded_breaks(double a, double b, double finest) {
  const double half = 0.5 * (b - a);
  std::vector<double> offsets;
  for (double d = finest; d < half; d *= 4.0) {
    offsets.push_back(d);
  }
  std::vector<double> breaks;
  breaks.push_back(a);
  for (double d : offsets) {
    breaks.push_back(a + d);
  }
  breaks.push_back(a + half);
  for (auto it = offsets.rbegin(); it != offsets.rend(); ++it) {
    breaks.push_back(b - *it);
  }
  breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return breaks;
}

}  // namespace casimir::quad
