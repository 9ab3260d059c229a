#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "casimir/em3d.hpp"
#include "casimir/fit.hpp"
#include "casimir/geometry.hpp"
#include "casimir/kernels.hpp"
#include "casimir/regsum.hpp"
#include "casimir/scalar1d.hpp"

// Experiments on the order of limits: regularize-then-integrate against
// integrate-then-regularize, boundary divergences, and the small-eps
// expansion of the cutoff sine series.
namespace casimir::lab {

/// 1+1-d Dirichlet scalar; with couplings the quartic correction is sampled too.
struct ScalarSource {
  std::optional<scalar1d::Couplings> couplings;
};

/// Photons between plates; electric/magnetic columns are <E^2>/2 and <B^2>/2.
/// With couplings the Euler-Heisenberg correction is sampled too.
struct EmSource {
  std::optional<em3d::EhCouplings> couplings;
};

using DensitySource = std::variant<ScalarSource, EmSource>;

enum class Clustering { Uniform, Endpoints };

struct GridSpec {
  std::size_t count = 101;
  Clustering clustering = Clustering::Uniform;
};

/// Interior angles in (0, pi), strictly increasing and mirror symmetric.
/// Uniform: theta_i = pi (i + 1) / (count + 1). Endpoints: Chebyshev nodes
/// (pi/2)(1 - cos(pi (i + 1/2) / count)). Throws PreconditionError for count < 2.
std::vector<double> make_grid(const GridSpec& spec);

enum class Component { Electric, Magnetic, Total, Correction };

struct DensityProfile {
  Geometry geometry;
  regsum::RegScheme scheme;
  std::vector<double> grid;
  std::vector<scalar1d::EnergySplit> values;
  /// alpha-dependent density at each grid point; empty without couplings.
  std::vector<double> correction;
  /// Position-independent parts, subtracted before fitting divergences.
  scalar1d::EnergySplit baseline;
  double correction_baseline = 0.0;

  double component(Component c, std::size_t i) const;
  double baseline_of(Component c) const;
};

/// Samples a density source on a grid with the given kernel backend.
/// The electromagnetic source is defined only in the zeta scheme.
DensityProfile sample_profile(const DensitySource& source, const Geometry& g, const regsum::RegScheme& scheme,
                              const GridSpec& grid, kernels::Backend backend = kernels::active_backend());

enum class Endpoint { Left, Right };

struct DivergenceFit {
  double exponent;
  double amplitude;
  double r_squared;
  std::pair<double, double> window;  // (theta_min, theta_max)

  /// r_squared >= 0.99.
  bool conclusive() const noexcept { return r_squared >= 0.99; }
};

/// Log-log least squares of |component - baseline| against sin(theta) over the
/// `window_points` grid points nearest the endpoint whose difference stands
/// above rounding noise (64 ulp of the terms involved). Throws DomainError when
/// fewer than that many qualify.
DivergenceFit fit_divergence(const DensityProfile& profile, Endpoint endpoint, Component component,
                             std::size_t window_points = 4);

struct FreeScalarModel {};
struct InteractingScalarModel {
  scalar1d::Couplings couplings;
};
using ScalarModel = std::variant<FreeScalarModel, InteractingScalarModel>;

/// Integral of the regularized density over [delta, L - delta].
struct PartialTotal {
  double delta;
  double value;     // quadrature
  double analytic;  // closed-form antiderivative
};

/// One cutoff value. The cutoff total is assembled as closed-form bulk plus a
/// quadrature of the position-dependent pieces over the full interval.
struct CutoffRow {
  double eps;
  /// Unsubtracted total: bulk_closed_form + position_integral.
  double raw_total;
  /// Position-independent piece, built from sum n e^{-eps n} closed forms. The
  /// quartic term uses correlators with their unbounded-space 1/eps^2 removed.
  double bulk_closed_form;
  /// Quadrature over [0, L] of all position-dependent terms.
  double position_integral;
  /// Quadrature over [0, L] of the electric position-dependent term alone.
  double electric_position_integral;
  /// raw_total minus the bulk closed form plus the zeta value of the bulk.
  double total_after_bulk_subtraction;
  /// raw_total minus its Laurent pole terms in eps.
  double finite_part;
};

struct CommutationVerdict {
  bool sum_route_finite;
  bool partial_totals_diverge;
  /// Only asserted for the free field; empty when the model makes no prediction.
  std::optional<bool> cutoff_total_eps_independent;
  bool routes_agree;

  bool passed() const noexcept {
    return sum_route_finite && partial_totals_diverge && cutoff_total_eps_independent.value_or(true) &&
           routes_agree;
  }
};

struct CommutationTolerances {
  double exponent = 0.02;
  double eps_independence = 1e-8;
  double route_agreement_relative = 1e-7;
};

struct CommutationReport {
  std::string model;
  double length;
  std::optional<double> alpha;
  std::optional<double> mass;

  double sum_then_regularize;  // (a)
  std::vector<PartialTotal> partial_totals;  // (b)
  double expected_exponent;
  fit::PowerLaw divergence_fit;
  bool partial_totals_monotone;
  std::vector<CutoffRow> cutoff_rows;  // (c)
  double cutoff_spread;  // max - min of total_after_bulk_subtraction
  regsum::Extrapolation extrapolated_finite_part;
  CommutationVerdict verdict;  // (d)
};

/// Runs the order-of-limits experiment. Both lists must be strictly decreasing
/// with a constant ratio and at least three entries; every delta < L/2.
CommutationReport commutation_report(const Geometry& g, const ScalarModel& model, std::span<const double> deltas,
                                     std::span<const double> epsilons,
                                     const CommutationTolerances& tol = CommutationTolerances{});

enum class ExpansionStatus {
  Ok,
  /// theta (or pi - theta) below the largest eps: the expansion does not apply.
  Breakdown,
  /// The residual vanishes identically (theta = pi/2), so no slope exists.
  VanishingResidual,
};

struct ExpansionRow {
  double theta;
  std::vector<double> residuals;
  std::optional<double> slope;
  ExpansionStatus status;
};

/// For each theta, the residual S(eps, theta) - cot(theta)/2 + (cos theta / 8 sin^3 theta) eps^2
/// at every eps, and its log-log slope in eps (expected 4). Eps must halve at
/// each step, with at least three values.
std::vector<ExpansionRow> epsilon_expansion_check(std::span<const double> thetas, std::span<const double> epsilons);

}  // namespace casimir::lab
