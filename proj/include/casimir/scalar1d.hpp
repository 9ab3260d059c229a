#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "casimir/geometry.hpp"
#include "casimir/regsum.hpp"

// Massless Dirichlet scalar field on [0, L] in 1+1 dimensions.
// The electric and magnetic densities are (1/2)<(d_t phi)^2> and
// (1/2)<(d_z phi)^2>; energies are in natural units.
namespace casimir::scalar1d {

struct Mode {
  std::int64_t n;
  double omega;  // pi n / L
};

/// Throws DomainError for n < 1.
Mode mode(std::int64_t n, const Geometry& g);

/// Normalized eigenmode sqrt(2/L) sin(omega z); exactly zero at both ends.
double mode_function(const Mode& m, const Geometry& g, const Position& pos);

/// -pi / 24L, obtained by handing (pi / 2L) sum n to the regularizer.
double free_total_energy(const Geometry& g,
                         const regsum::PowerRegularizer& regularizer = regsum::zeta_power_regularizer());

/// Zeta scheme: -(pi/16L^2)(1/3 - 1/sin^2 theta), singular at the ends.
/// Cutoff scheme: -pi/48L^2 - (pi/8L^2) dS(eps, theta)/dtheta, finite everywhere.
double electric_density(const Geometry& g, const Position& pos, const regsum::RegScheme& scheme);

/// Zeta scheme: -(pi/16L^2)(1/3 + 1/sin^2 theta).
/// Cutoff scheme: -pi/48L^2 + (pi/8L^2) dS(eps, theta)/dtheta.
double magnetic_density(const Geometry& g, const Position& pos, const regsum::RegScheme& scheme);

/// The position-dependent piece of the electric density, i.e. everything
/// except the -pi/48L^2 bulk term. The magnetic piece is its negative.
double electric_position_part(const Geometry& g, const Position& pos, const regsum::RegScheme& scheme);

/// Bulk (position-independent) part of either density with the exponential
/// cutoff left in: (pi/4L^2) sum n e^{-eps n}. Diverges like pi/(4 L^2 eps^2).
double cutoff_bulk_density(const Geometry& g, double eps);

struct EnergySplit {
  double electric;
  double magnetic;
  double total;

  static EnergySplit of(double electric, double magnetic) {
    return EnergySplit{electric, magnetic, electric + magnetic};
  }
};

EnergySplit density_split(const Geometry& g, const Position& pos, const regsum::RegScheme& scheme);

/// Coupling alpha and heavy mass m of the quartic derivative interaction.
class Couplings {
 public:
  /// Throws DomainError unless alpha >= 0 and m > 0.
  Couplings(double alpha, double mass);

  double alpha() const noexcept { return alpha_; }
  double mass() const noexcept { return mass_; }

  /// First-order perturbation theory needs alpha / (m L)^2 small; true above 0.1.
  bool outside_validity(const Geometry& g) const noexcept;

 private:
  double alpha_;
  double mass_;
};

/// -pi/24L^2 - (alpha pi^2 / 8 m^2 L^4)(1/18 + 1/sin^4 theta).
double interacting_density(const Geometry& g, const Position& pos, const Couplings& c);

/// The alpha-dependent piece of interacting_density, split into its constant
/// and position-dependent parts.
struct CorrectionParts {
  double constant;
  double position;
  double total() const noexcept { return constant + position; }
};
CorrectionParts interacting_correction(const Geometry& g, const Position& pos, const Couplings& c);

/// -(alpha pi^2 / 144 m^2 L^3), the correction density's constant part times L.
double interacting_correction_constant(const Geometry& g, const Couplings& c);

/// -pi/24L - alpha pi^2 / (144 m^2 L^3).
///
/// The correction is built by integrating the unregularized Wick-contracted
/// density first, which leaves (1/L)[(sum omega_n)^2 + sum omega_n^2], and then
/// regularizing both sums. The result is checked against L times the constant
/// part of interacting_density; a mismatch throws Error.
double interacting_total_energy(const Geometry& g, const Couplings& c,
                                const regsum::PowerRegularizer& regularizer = regsum::zeta_power_regularizer());

/// Sum the modes and regularize the total.
struct SumThenRegularize {};

/// Integrate the regularized electric density over [margin, L - margin].
struct IntegrateRegularizedDensity {
  double margin;
};

using TotalRoute = std::variant<SumThenRegularize, IntegrateRegularizedDensity>;

struct RouteResult {
  double value;
  /// Closed-form value of the same quantity (the antiderivative of 1/sin^2 for route 2).
  double analytic;
  /// For route 2: (1/8L) cot(pi margin / L), the piece that diverges as margin -> 0.
  std::optional<double> divergent_part;
  double quadrature_error;
};

/// Route 1: finite. With the zeta scheme, (pi/2L) zeta(-1) = -pi/24L; with a
/// cutoff, the finite part (pi/2L)(sum n e^{-eps n} - 1/eps^2).
/// Route 2: quadrature of the electric density over [margin, L - margin]. A zero
/// margin with the zeta scheme throws DivergenceError without integrating.
RouteResult total_energy_by_route(const Geometry& g, const TotalRoute& route, const regsum::RegScheme& scheme);

}  // namespace casimir::scalar1d
