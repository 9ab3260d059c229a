#include "casimir/em3d.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"

namespace casimir::em3d {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
constexpr double kPi4 = kPi2 * kPi2;

constexpr std::int64_t kDensityDenominator = 128 * 27 * 5;     // 2^7 3^3 5
constexpr std::int64_t kEnergyDenominator = 128 * 243 * 125;   // 2^7 3^5 5^3
static_assert(kDensityDenominator == 17280);
static_assert(kEnergyDenominator == 3888000);
// L times (11/225) / (2^7 3^3 5) must be 11 / (2^7 3^5 5^3).
static_assert(kDensityDenominator * 225 == kEnergyDenominator);

void require_interior(double theta, const char* what) {
  if (!std::isfinite(theta) || theta <= 0.0 || theta >= kPi) {
    throw SingularityError(std::string(what) + ": singular at the plates (theta = 0, pi)");
  }
}

double pow4(double x) { return (x * x) * (x * x); }

}  // namespace

EhCouplings::EhCouplings(double alpha, double mass) : alpha_(alpha), mass_(mass) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw DomainError("EhCouplings: alpha must be >= 0");
  }
  if (!std::isfinite(mass) || mass <= 0.0) {
    throw DomainError("EhCouplings: mass must be > 0");
  }
}

double profile_F(double theta) {
  require_interior(theta, "profile_F");
  const double s = std::sin(theta);
  const double x = 1.0 / (s * s);
  return 3.0 * x * x - 2.0 * x;
}

double profile_F_from_cot(double theta) {
  require_interior(theta, "profile_F_from_cot");
  // d/dt cot = -csc^2, d2 = 2 csc^2 cot, d3 = -2 csc^2 (csc^2 + 2 cot^2).
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double csc2 = 1.0 / (s * s);
  const double cot = c / s;
  return csc2 * (csc2 + 2.0 * cot * cot);
}

CorrelatorPair correlators(const Geometry& g, const Position& pos) {
  const double F = profile_F(pos.theta());
  const double pref = -kPi2 / (16.0 * pow4(g.length()));
  return CorrelatorPair{pref * (1.0 / 45.0 - F), pref * (1.0 / 45.0 + F)};
}

CorrelatorPair near_plate_asymptotics(const Geometry& /*g*/, double z) {
  if (!std::isfinite(z) || z <= 0.0) {
    throw DomainError("near_plate_asymptotics: z must be positive");
  }
  const double e2 = 3.0 / (16.0 * kPi2 * pow4(z));
  return CorrelatorPair{e2, -e2};
}

double free_casimir_density(const Geometry& g) { return -kPi2 / (720.0 * pow4(g.length())); }

double free_energy_per_area(const Geometry& g) {
  const double L = g.length();
  return -kPi2 / (720.0 * L * L * L);
}

double casimir_force_per_area(const Geometry& g) { return kPi2 / (240.0 * pow4(g.length())); }

double force_per_area_numeric(const Geometry& g, const EhCouplings& c) {
  const double L = g.length();
  const double h = 1e-5 * L;
  const double plus = corrected_total_energy(Geometry(L + h), c);
  const double minus = corrected_total_energy(Geometry(L - h), c);
  return (plus - minus) / (2.0 * h);
}

double eh_correction_constant(const Geometry& g, const EhCouplings& c) {
  const double a = c.alpha();
  const double L4 = pow4(g.length());
  const double pref = -a * a * kPi4 / (static_cast<double>(kDensityDenominator) * pow4(c.mass()) * L4 * L4);
  return pref * (11.0 / 225.0);
}

CorrectionDensity eh_correction_density(const Geometry& g, const Position& pos, const EhCouplings& c) {
  const double F = profile_F(pos.theta());
  const double a = c.alpha();
  const double L4 = pow4(g.length());
  const double pref = -a * a * kPi4 / (static_cast<double>(kDensityDenominator) * pow4(c.mass()) * L4 * L4);
  return CorrectionDensity{eh_correction_constant(g, c), pref * 9.0 * F * F};
}

double eh_energy_correction(const Geometry& g, const EhCouplings& c) {
  const double L = g.length();
  const double a = c.alpha();
  const double L7 = pow4(L) * L * L * L;
  const double closed_form = -11.0 * a * a * kPi4 / (static_cast<double>(kEnergyDenominator) * pow4(c.mass()) * L7);
  const double from_density = L * eh_correction_constant(g, c);
  if (std::abs(closed_form - from_density) > 1e-14 * std::abs(closed_form)) {
    throw Error("eh_energy_correction: constant-part integral " + std::to_string(from_density) +
                " disagrees with closed form " + std::to_string(closed_form));
  }
  return closed_form;
}

double corrected_total_energy(const Geometry& g, const EhCouplings& c) {
  return free_energy_per_area(g) + eh_energy_correction(g, c);
}

double thermal_free_energy_density(double temperature, const EhCouplings& c) {
  if (!std::isfinite(temperature) || temperature <= 0.0) {
    throw DomainError("thermal_free_energy_density: temperature must be positive");
  }
  const double L = 1.0 / (2.0 * temperature);
  return corrected_total_energy(Geometry(L), c) / L;
}

}  // namespace casimir::em3d
