#pragma once

#include <span>

namespace casimir::fit {

struct LineFit {
  double slope;
  double intercept;
  double r_squared;
};

/// Ordinary least squares y = intercept + slope * x. Needs >= 2 points with
/// distinct x.
LineFit least_squares(std::span<const double> x, std::span<const double> y);

struct PowerLaw {
  double exponent;
  double amplitude;
  double r_squared;
};

/// Fits |y| = amplitude * x^exponent by least squares in log-log space.
/// Throws DomainError if any x <= 0 or y == 0.
PowerLaw power_law(std::span<const double> x, std::span<const double> y);

}  // namespace casimir::fit
