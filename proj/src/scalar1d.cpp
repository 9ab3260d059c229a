#include "casimir/scalar1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ratio>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::scalar1d {
namespace {

constexpr double kPi = std::numbers::pi;

// The 1/18 constant of the interacting density times its 1/8 prefactor is the
// 1/144 of the integrated energy.
static_assert(std::ratio_equal_v<std::ratio_multiply<std::ratio<1, 8>, std::ratio<1, 18>>, std::ratio<1, 144>>);

double inv_sin2(const Position& pos, const char* what) {
  if (!pos.interior()) {
    throw SingularityError(std::string(what) + ": zeta-regularized density is singular at theta = 0, pi");
  }
  const double s = std::sin(pos.theta());
  return 1.0 / (s * s);
}

}  // namespace

Mode mode(std::int64_t n, const Geometry& g) {
  if (n < 1) {
    throw DomainError("mode: index must be >= 1, got " + std::to_string(n));
  }
  return Mode{n, kPi * static_cast<double>(n) / g.length()};
}

double mode_function(const Mode& m, const Geometry& g, const Position& pos) {
  if (!pos.interior()) {
    return 0.0;
  }
  return std::sqrt(2.0 / g.length()) * std::sin(static_cast<double>(m.n) * pos.theta());
}

double free_total_energy(const Geometry& g, const regsum::PowerRegularizer& regularizer) {
  // sum omega_n / 2 = (pi / 2L) sum n
  return regularizer(regsum::PowerSeriesSpec{1.0, kPi / (2.0 * g.length())});
}

double electric_position_part(const Geometry& g, const Position& pos, const regsum::RegScheme& scheme) {
  const double L2 = g.length() * g.length();
  if (scheme.is_cutoff()) {
    return -(kPi / (8.0 * L2)) * regsum::abel_sum_sin_derivative(*scheme.epsilon(), pos.theta());
  }
  return (kPi / (16.0 * L2)) * inv_sin2(pos, "electric_density");
}

double electric_density(const Geometry& g, const Position& pos, const regsum::RegScheme& scheme) {
  const double L2 = g.length() * g.length();
  return -kPi / (48.0 * L2) + electric_position_part(g, pos, scheme);
}

double magnetic_density(const Geometry& g, const Position& pos, const regsum::RegScheme& scheme) {
  const double L2 = g.length() * g.length();
  return -kPi / (48.0 * L2) - electric_position_part(g, pos, scheme);
}

double cutoff_bulk_density(const Geometry& g, double eps) {
  const double L2 = g.length() * g.length();
  return (kPi / (4.0 * L2)) * regsum::abel_sum_linear(eps);
}

EnergySplit density_split(const Geometry& g, const Position& pos, const regsum::RegScheme& scheme) {
  return EnergySplit::of(electric_density(g, pos, scheme), magnetic_density(g, pos, scheme));
}

Couplings::Couplings(double alpha, double mass) : alpha_(alpha), mass_(mass) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw DomainError("couplings: alpha must be >= 0");
  }
  if (!std::isfinite(mass) || mass <= 0.0) {
    throw DomainError("couplings: mass must be > 0");
  }
}

bool Couplings::outside_validity(const Geometry& g) const noexcept {
  const double mL = mass_ * g.length();
  return alpha_ / (mL * mL) > 0.1;
}

CorrectionParts interacting_correction(const Geometry& g, const Position& pos, const Couplings& c) {
  const double x = inv_sin2(pos, "interacting_density");
  const double L = g.length();
  const double m = c.mass();
  const double prefactor = -c.alpha() * kPi * kPi / (8.0 * m * m * L * L * L * L);
  return CorrectionParts{prefactor / 18.0, prefactor * x * x};
}

double interacting_density(const Geometry& g, const Position& pos, const Couplings& c) {
  const double L = g.length();
  return -kPi / (24.0 * L * L) + interacting_correction(g, pos, c).total();
}

double interacting_correction_constant(const Geometry& g, const Couplings& c) {
  const double L = g.length();
  const double m = c.mass();
  return -c.alpha() * kPi * kPi / (8.0 * 18.0 * m * m * L * L * L);
}

double interacting_total_energy(const Geometry& g, const Couplings& c,
                                const regsum::PowerRegularizer& regularizer) {
  const double L = g.length();
  const double k = kPi / L;
  const double sum_omega = regularizer(regsum::PowerSeriesSpec{1.0, k});
  const double sum_omega_sq = regularizer(regsum::PowerSeriesSpec{2.0, k * k});
  const double m = c.mass();
  const double correction = -(c.alpha() / (m * m)) * (sum_omega * sum_omega + sum_omega_sq) / L;

  const double expected = interacting_correction_constant(g, c);
  if (std::abs(correction - expected) > 1e-13 * std::abs(expected) + 1e-300) {
    throw Error("interacting_total_energy: integrated correction " + std::to_string(correction) +
                " disagrees with L x constant density part " + std::to_string(expected));
  }
  return free_total_energy(g, regularizer) + correction;
}

RouteResult total_energy_by_route(const Geometry& g, const TotalRoute& route, const regsum::RegScheme& scheme) {
  const double L = g.length();
  if (std::holds_alternative<SumThenRegularize>(route)) {
    if (scheme.is_cutoff()) {
      const double eps = *scheme.epsilon();
      const double finite = (kPi / (2.0 * L)) * (regsum::abel_sum_linear(eps) - 1.0 / (eps * eps));
      return RouteResult{finite, finite, std::nullopt, 0.0};
    }
    const double value = free_total_energy(g);
    return RouteResult{value, -kPi / (24.0 * L), std::nullopt, 0.0};
  }

  const double margin = std::get<IntegrateRegularizedDensity>(route).margin;
  if (!std::isfinite(margin) || margin < 0.0 || margin >= 0.5 * L) {
    throw DomainError("total_energy_by_route: margin must lie in [0, L/2)");
  }
  if (margin == 0.0 && !scheme.is_cutoff()) {
    throw DivergenceError(
        "total_energy_by_route: the zeta-regularized density grows like 1/sin^2 theta at the ends; "
        "its integral over [0, L] diverges like cot(pi margin / L)");
  }

  auto density = [&](double z) { return electric_density(g, Position::from_z(z, g), scheme); };
  const double finest = scheme.is_cutoff() ? std::min(*scheme.epsilon(), 1.0) * L * 1e-2 : margin * 0.5;
  const auto breaks = quad::endpoint_graded_breaks(margin, L - margin, std::max(finest, 1e-12 * L));
  const quad::Result q = quad::integrate_piecewise(density, breaks);

  const double theta_margin = kPi * margin / L;
  const double bulk = -(kPi / (48.0 * L * L)) * (L - 2.0 * margin);
  if (scheme.is_cutoff()) {
    const double edge = regsum::abel_sum_sin(*scheme.epsilon(), theta_margin);
    return RouteResult{q.value, bulk + edge / (4.0 * L), std::nullopt, q.error_estimate};
  }
  const double divergent = std::cos(theta_margin) / std::sin(theta_margin) / (8.0 * L);
  return RouteResult{q.value, bulk + divergent, divergent, q.error_estimate};
}

}  // namespace casimir::scalar1d
