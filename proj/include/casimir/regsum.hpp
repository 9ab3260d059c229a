#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace casimir::regsum {

/// Which rule assigns a value to a divergent mode sum.
class RegScheme {
 public:
  enum class Kind { ZetaContinuation, ExpCutoff };

  static RegScheme zeta() { return RegScheme(Kind::ZetaContinuation, std::nullopt); }
  /// Throws DomainError unless epsilon > 0 and finite.
  static RegScheme cutoff(double epsilon);

  Kind kind() const noexcept { return kind_; }
  bool is_cutoff() const noexcept { return kind_ == Kind::ExpCutoff; }
  /// Present exactly when kind() == ExpCutoff.
  std::optional<double> epsilon() const noexcept { return epsilon_; }

 private:
  RegScheme(Kind kind, std::optional<double> epsilon) : kind_(kind), epsilon_(epsilon) {}

  Kind kind_;
  std::optional<double> epsilon_;
};

/// The series scale * sum_{n>=1} n^exponent.
struct PowerSeriesSpec {
  double exponent = 0.0;
  double scale = 1.0;
};

/// scale * zeta(-exponent). Throws PoleError for exponent = -1.
double zeta_regularize_power(const PowerSeriesSpec& spec);

/// Callable assigning a value to a power series. Consumers take one of these so
/// the route through the regularization engine can be observed.
using PowerRegularizer = std::function<double(const PowerSeriesSpec&)>;

/// The zeta-continuation regularizer (wraps zeta_regularize_power).
PowerRegularizer zeta_power_regularizer();

/// S(eps, theta) = sum_{n>=1} e^{-eps n} sin(2 theta n) in closed form.
/// Exactly zero at theta = 0 and theta = pi. Throws DomainError for eps <= 0
/// or theta outside [0, pi].
double abel_sum_sin(double eps, double theta);

/// dS(eps, theta)/dtheta = 2 sum_{n>=1} n e^{-eps n} cos(2 theta n), analytic.
double abel_sum_sin_derivative(double eps, double theta);

/// The eps -> 0 limit of S, (1/2) cot theta; also the zeta value of S(theta).
/// Throws SingularityError at theta in {0, pi}.
double abel_sum_sin_limit(double theta);

/// d/dtheta of abel_sum_sin_limit: -1 / (2 sin^2 theta).
double abel_sum_sin_limit_derivative(double theta);

/// sum_{n>=1} n e^{-eps n} = e^{-eps} / (1 - e^{-eps})^2 ~ 1/eps^2 - 1/12 + eps^2/240.
double abel_sum_linear(double eps);

/// sum_{n>=1} n^2 e^{-eps n} = q (1 + q) / (1 - q)^3 with q = e^{-eps}
/// ~ 2/eps^3 - eps/120. Its finite part is zeta(-2) = 0.
double abel_sum_quadratic(double eps);

struct Sample {
  double h;
  double value;
};

struct Extrapolation {
  double value;
  /// |difference between the last two extrapolation stages|.
  double error_estimate;
};

/// Richardson extrapolation to h -> 0 for f(h) = f0 + c1 h^order + c2 h^(2 order) + ...
/// Samples must have strictly decreasing h in a constant ratio, and there must
/// be at least order + 1 of them.
Extrapolation richardson_extrapolate(std::span<const Sample> samples, int order);

/// Comparison tolerances used across the library.
struct Tolerances {
  double closed_form_relative = 1e-10;
  double extrapolated = 1e-6;
};

}  // namespace casimir::regsum
