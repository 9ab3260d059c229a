#include "casimir/fit.hpp"

#include <cmath>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir::fit {

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw PreconditionError("least_squares: need at least two (x, y) pairs of equal length");
  }
  const double n = static_cast<double>(x.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) {
    throw PreconditionError("least_squares: all x values coincide");
  }
  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;
  // A perfect horizontal line explains everything there is to explain.
  const double r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return LineFit{slope, intercept, r2};
}

PowerLaw power_law(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw PreconditionError("power_law: x and y differ in length");
  }
  std::vector<double> lx(x.size());
  std::vector<double> ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !std::isfinite(x[i])) {
      throw DomainError("power_law: abscissa must be positive to take its logarithm");
    }
    if (y[i] == 0.0 || !std::isfinite(y[i])) {
      throw DomainError("power_law: ordinate is zero or non-finite; cannot take its logarithm");
    }
    lx[i] = std::log(x[i]);
    ly[i] = std::log(std::abs(y[i]));
  }
  const LineFit line = least_squares(lx, ly);
  return PowerLaw{line.slope, std::exp(line.intercept), line.r_squared};
}

}  // namespace casimir::fit
