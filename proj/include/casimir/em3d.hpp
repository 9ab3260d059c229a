#pragma once

#include "casimir/geometry.hpp"

// Electromagnetic field between perfectly conducting parallel plates a
// distance L apart, with the lowest-order Euler-Heisenberg correction.
// Three-dimensional totals are per unit plate area.
namespace casimir::em3d {

/// Field fluctuations <E^2> and <B^2>, units 1/length^4.
struct CorrelatorPair {
  double e2;
  double b2;

  /// (<E^2> + <B^2>) / 2.
  double energy_density() const noexcept { return 0.5 * (e2 + b2); }
};

/// Four-photon coupling: fine-structure constant and electron mass (1/length).
class EhCouplings {
 public:
  /// Throws DomainError unless alpha >= 0 and m > 0.
  EhCouplings(double alpha, double mass);

  /// alpha = 1/137.035999 with m = 1 in natural units.
  static EhCouplings physical() { return EhCouplings(1.0 / 137.035999, 1.0); }

  double alpha() const noexcept { return alpha_; }
  double mass() const noexcept { return mass_; }

 private:
  double alpha_;
  double mass_;
};

/// F(theta) = 3/sin^4 theta - 2/sin^2 theta. Throws SingularityError at 0, pi.
double profile_F(double theta);

/// The same function written as -(1/2) d^3/dtheta^3 cot theta, expanded as
/// csc^2 (csc^2 + 2 cot^2). Kept separate for cross-checking.
double profile_F_from_cot(double theta);

/// <E^2> = -(pi^2/16L^4)(1/45 - F), <B^2> = -(pi^2/16L^4)(1/45 + F).
CorrelatorPair correlators(const Geometry& g, const Position& pos);

/// Leading behaviour next to the plate at z = 0: <E^2> = -<B^2> = 3 / (16 pi^2 z^4).
/// Throws DomainError for z <= 0.
CorrelatorPair near_plate_asymptotics(const Geometry& g, double z);

/// -pi^2 / 720 L^4, independent of position.
double free_casimir_density(const Geometry& g);

/// Free energy per unit area -pi^2 / 720 L^3.
double free_energy_per_area(const Geometry& g);

/// Attractive force per unit area pi^2 / 240 L^4.
double casimir_force_per_area(const Geometry& g);

/// Magnitude of the attractive force, dE/dL, by a central difference
/// (step 1e-5 L) of corrected_total_energy. With alpha = 0 this reproduces
/// casimir_force_per_area.
double force_per_area_numeric(const Geometry& g, const EhCouplings& c);

struct CorrectionDensity {
  double constant;  // the 11/225 term
  double position;  // the 9 F^2 term
  double total() const noexcept { return constant + position; }
};

/// -(alpha^2 pi^4 / (2^7 3^3 5 m^4 L^8)) (11/225 + 9 F(theta)^2).
CorrectionDensity eh_correction_density(const Geometry& g, const Position& pos, const EhCouplings& c);

/// Constant part of the correction density (the 11/225 term), position independent.
double eh_correction_constant(const Geometry& g, const EhCouplings& c);

/// -11 alpha^2 pi^4 / (2^7 3^5 5^3 m^4 L^7), the Euler-Heisenberg shift of the
/// energy per unit area. Throws Error if it disagrees with L times
/// eh_correction_constant.
double eh_energy_correction(const Geometry& g, const EhCouplings& c);

/// -pi^2/720L^3 - 11 alpha^2 pi^4 / (2^7 3^5 5^3 m^4 L^7) per unit area.
///
/// Only the constant part of the correction density contributes; the 9F^2
/// term is taken to integrate to zero once the mode sums and transverse
/// momentum integrals are regularized together (not re-derived here).
double corrected_total_energy(const Geometry& g, const EhCouplings& c);

/// Free energy density of the photon gas at temperature T: corrected_total_energy / L
/// with L = 1/(2T). Throws DomainError for T <= 0.
double thermal_free_energy_density(double temperature, const EhCouplings& c);

}  // namespace casimir::em3d
