#include "casimir/regsum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/specfun.hpp"

namespace casimir::regsum {
namespace {

void require_cutoff(double eps, const char* what) {
  if (!std::isfinite(eps) || eps <= 0.0) {
    throw DomainError(std::string(what) + ": cutoff eps must be positive, got " + std::to_string(eps));
  }
}

void require_closed_angle(double theta, const char* what) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
    throw DomainError(std::string(what) + ": theta outside [0, pi]");
  }
}

void require_open_angle(double theta, const char* what) {
  require_closed_angle(theta, what);
  if (theta == 0.0 || theta == std::numbers::pi) {
    throw SingularityError(std::string(what) + ": singular at theta = 0, pi");
  }
}

// Shared pieces of the geometric closed form: q = e^{-eps}, 1 - q, and
// D = 1 - 2 q cos 2theta + q^2 = (1 - q)^2 + 4 q sin^2 theta.
struct CutoffTerms {
  double q;
  double one_minus_q;
  double sin_t;
  double cos_t;
  double denom;
};

CutoffTerms cutoff_terms(double eps, double theta) {
  CutoffTerms t{};
  t.q = std::exp(-eps);
  t.one_minus_q = -std::expm1(-eps);
  t.sin_t = std::sin(theta);
  t.cos_t = std::cos(theta);
  t.denom = t.one_minus_q * t.one_minus_q + 4.0 * t.q * t.sin_t * t.sin_t;
  return t;
}

}  // namespace

RegScheme RegScheme::cutoff(double epsilon) {
  require_cutoff(epsilon, "RegScheme");
  return RegScheme(Kind::ExpCutoff, epsilon);
}

double zeta_regularize_power(const PowerSeriesSpec& spec) {
  if (!std::isfinite(spec.exponent) || !std::isfinite(spec.scale)) {
    throw DomainError("zeta_regularize_power: non-finite series specification");
  }
  if (spec.exponent == -1.0) {
    throw PoleError("zeta_regularize_power: harmonic series (exponent -1) sits on the zeta pole");
  }
  return spec.scale * specfun::riemann_zeta(-spec.exponent);
}

PowerRegularizer zeta_power_regularizer() {
  return [](const PowerSeriesSpec& spec) { return zeta_regularize_power(spec); };
}

double abel_sum_sin(double eps, double theta) {
  require_cutoff(eps, "abel_sum_sin");
  require_closed_angle(theta, "abel_sum_sin");
  if (theta == 0.0 || theta == std::numbers::pi) {
    return 0.0;
  }
  const CutoffTerms t = cutoff_terms(eps, theta);
  return t.q * 2.0 * t.sin_t * t.cos_t / t.denom;
}

double abel_sum_sin_derivative(double eps, double theta) {
  require_cutoff(eps, "abel_sum_sin_derivative");
  require_closed_angle(theta, "abel_sum_sin_derivative");
  const CutoffTerms t = cutoff_terms(eps, theta);
  // 2q[(1 + q^2) cos 2theta - 2q] / D^2, numerator rewritten without cancellation.
  const double s2 = t.sin_t * t.sin_t;
  const double numer = t.one_minus_q * t.one_minus_q - 2.0 * (1.0 + t.q * t.q) * s2;
  return 2.0 * t.q * numer / (t.denom * t.denom);
}

double abel_sum_sin_limit(double theta) {
  require_open_angle(theta, "abel_sum_sin_limit");
  return 0.5 * std::cos(theta) / std::sin(theta);
}

double abel_sum_sin_limit_derivative(double theta) {
  require_open_angle(theta, "abel_sum_sin_limit_derivative");
  const double s = std::sin(theta);
  return -0.5 / (s * s);
}

double abel_sum_linear(double eps) {
  require_cutoff(eps, "abel_sum_linear");
  const double q = std::exp(-eps);
  const double one_minus_q = -std::expm1(-eps);
  return q / (one_minus_q * one_minus_q);
}

double abel_sum_quadratic(double eps) {
  require_cutoff(eps, "abel_sum_quadratic");
  const double q = std::exp(-eps);
  const double one_minus_q = -std::expm1(-eps);
  return q * (1.0 + q) / (one_minus_q * one_minus_q * one_minus_q);
}

Extrapolation richardson_extrapolate(std::span<const Sample> samples, int order) {
  if (order < 1) {
    throw PreconditionError("richardson_extrapolate: order must be >= 1");
  }
  const std::size_t n = samples.size();
  if (n < static_cast<std::size_t>(order) + 1 || n < 2) {
    throw PreconditionError("richardson_extrapolate: need at least order + 1 samples, got " +
                            std::to_string(n));
  }
  for (const Sample& s : samples) {
    if (!std::isfinite(s.h) || s.h <= 0.0 || !std::isfinite(s.value)) {
      throw PreconditionError("richardson_extrapolate: step sizes must be positive and values finite");
    }
  }
  const double ratio = samples[0].h / samples[1].h;
  if (!(ratio > 1.0)) {
    throw PreconditionError("richardson_extrapolate: step sizes must strictly decrease");
  }
  for (std::size_t i = 2; i < n; ++i) {
    const double r = samples[i - 1].h / samples[i].h;
    if (std::abs(r - ratio) > 1e-9 * ratio) {
      throw PreconditionError("richardson_extrapolate: step sizes are not in a constant ratio");
    }
  }

  // Neville-style tableau; row i holds the estimates that end at sample i.
  std::vector<double> prev(n), cur(n);
  for (std::size_t i = 0; i < n; ++i) {
    prev[i] = samples[i].value;
  }
  double last_stage = prev[n - 1];
  double before_last = prev[n - 1];
  for (std::size_t k = 1; k < n; ++k) {
    const double factor = std::pow(ratio, static_cast<double>(order) * static_cast<double>(k)) - 1.0;
    for (std::size_t i = k; i < n; ++i) {
      cur[i] = prev[i] + (prev[i] - prev[i - 1]) / factor;
    }
    before_last = last_stage;
    last_stage = cur[n - 1];
    std::swap(prev, cur);
  }
  return Extrapolation{last_stage, std::abs(last_stage - before_last)};
}

}  // namespace casimir::regsum
