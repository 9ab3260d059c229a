#pragma once

#include <functional>
#include <span>
#include <vector>

namespace casimir::quad {

struct Result {
  double value;
  double error_estimate;
};

/// Adaptive 15-point Gauss-Kronrod quadrature of f over [a, b].
/// Globally adaptive: bisects the worst panel until the summed error estimate
/// falls below rel_tol times the L1 norm
/// of the integrand, or 4000 panels are in use.
Result integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-13);

/// Same, summed over consecutive segments of an increasing breakpoint list.
/// Useful when the integrand is sharply peaked at known locations.
Result integrate_piecewise(const std::function<double(double)>& f, std::span<const double> breakpoints,
                           double rel_tol = 1e-13);

/// Breakpoints on [a, b] refined geometrically toward both ends, down to a
/// spacing of `finest` next to each endpoint.
std::vector<double> endpoint_graded_breaks(double a, double b, double finest);

}  // namespace casimir::quad
