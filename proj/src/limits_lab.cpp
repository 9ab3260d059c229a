#include "casimir/limits_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::lab {
namespace {

constexpr double kPi = std::numbers::pi;

void require_geometric(std::span<const double> values, const char* what, std::optional<double> exact_ratio) {
  if (values.size() < 3) {
    throw PreconditionError(std::string(what) + ": need at least three values");
  }
  for (double v : values) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw PreconditionError(std::string(what) + ": values must be positive");
    }
  }
  const double ratio = values[0] / values[1];
  if (!(ratio > 1.0)) {
    throw PreconditionError(std::string(what) + ": values must strictly decrease");
  }
  if (exact_ratio && std::abs(ratio - *exact_ratio) > 1e-9 * *exact_ratio) {
    throw PreconditionError(std::string(what) + ": consecutive values must differ by a factor " +
                            std::to_string(*exact_ratio));
  }
  for (std::size_t i = 2; i < values.size(); ++i) {
    const double r = values[i - 1] / values[i];
    if (std::abs(r - ratio) > 1e-9 * ratio) {
      throw PreconditionError(std::string(what) + ": values must form a geometric sequence");
    }
  }
}

// Integral over [0, L] of a function of z that is sharply peaked within a
// width ~ eps L of both ends.
double integrate_full_interval(const Geometry& g, double eps, const std::function<double(double)>& f) {
  const double L = g.length();
  const auto breaks = quad::endpoint_graded_breaks(0.0, L, std::min(eps, 1.0) * L * 1e-2);
  return quad::integrate_piecewise(f, breaks).value;
}

double interacting_partial_analytic(const Geometry& g, const scalar1d::Couplings& c, double delta) {
  const double L = g.length();
  const double m = c.mass();
  const double span = L - 2.0 * delta;
  const double bulk = (-kPi / (24.0 * L * L) + scalar1d::interacting_correction_constant(g, c) / L) * span;
  const double pref = -c.alpha() * kPi * kPi / (8.0 * m * m * L * L * L * L);
  const double x = kPi * delta / L;
  const double cot = std::cos(x) / std::sin(x);
  // integral of csc^4 over [x, pi - x] is 2 (cot x + cot^3 x / 3)
  return bulk + pref * (L / kPi) * 2.0 * (cot + cot * cot * cot / 3.0);
}

}  // namespace

std::vector<double> make_grid(const GridSpec& spec) {
  if (spec.count < 2) {
    throw PreconditionError("make_grid: need at least two grid points");
  }
  const std::size_t n = spec.count;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.clustering == Clustering::Uniform) {
      grid[i] = kPi * static_cast<double>(i + 1) / static_cast<double>(n + 1);
    } else {
      const double t = kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
      grid[i] = 0.5 * kPi * (1.0 - std::cos(t));
    }
  }
  // Exact midpoint for odd counts keeps the grid mirror symmetric about pi/2.
  if (n % 2 == 1) {
    grid[n / 2] = 0.5 * kPi;
  }
  return grid;
}

double DensityProfile::component(Component c, std::size_t i) const {
  switch (c) {
    case Component::Electric:
      return values.at(i).electric;
    case Component::Magnetic:
      return values.at(i).magnetic;
    case Component::Total:
      return values.at(i).total;
    case Component::Correction:
      if (correction.empty()) {
        throw PreconditionError("DensityProfile: no correction column without couplings");
      }
      return correction.at(i);
  }
  return 0.0;
}

double DensityProfile::baseline_of(Component c) const {
  switch (c) {
    case Component::Electric:
      return baseline.electric;
    case Component::Magnetic:
      return baseline.magnetic;
    case Component::Total:
      return baseline.total;
    case Component::Correction:
      return correction_baseline;
  }
  return 0.0;
}

DensityProfile sample_profile(const DensitySource& source, const Geometry& g, const regsum::RegScheme& scheme,
                              const GridSpec& spec, kernels::Backend backend) {
  std::vector<double> grid = make_grid(spec);
  const std::size_t n = grid.size();
  std::vector<double> sines(n);
  std::transform(grid.begin(), grid.end(), sines.begin(), [](double t) { return std::sin(t); });

  const double L = g.length();
  std::vector<double> electric(n);
  std::vector<double> magnetic(n);
  std::vector<double> correction;
  scalar1d::EnergySplit baseline{};
  double correction_baseline = 0.0;

  if (const auto* scalar = std::get_if<ScalarSource>(&source)) {
    if (scheme.is_cutoff()) {
      kernels::scalar_cutoff_densities(backend, L, *scheme.epsilon(), sines, electric, magnetic);
    } else {
      kernels::scalar_zeta_densities(backend, L, sines, electric, magnetic);
    }
    baseline = scalar1d::EnergySplit::of(-kPi / (48.0 * L * L), -kPi / (48.0 * L * L));
    if (scalar->couplings) {
      const auto& c = *scalar->couplings;
      correction.resize(n);
      correction_baseline = scalar1d::interacting_correction_constant(g, c) / L;
      if (scheme.is_cutoff()) {
        // Wick contraction of <((d_t phi)^2 - (d_z phi)^2)^2> with <(d_t phi)^2> = 2 electric.
        const double k = -c.alpha() / (c.mass() * c.mass());
        for (std::size_t i = 0; i < n; ++i) {
          const double e = 2.0 * electric[i];
          const double b = 2.0 * magnetic[i];
          correction[i] = k * (3.0 * e * e + 3.0 * b * b - 2.0 * e * b);
        }
      } else {
        kernels::interacting_correction(backend, L, c.alpha(), c.mass(), sines, correction);
      }
    }
  } else {
    const auto& em = std::get<EmSource>(source);
    if (scheme.is_cutoff()) {
      throw DomainError("sample_profile: electromagnetic densities are available in the zeta scheme only");
    }
    kernels::em_correlators(backend, L, sines, electric, magnetic);
    for (std::size_t i = 0; i < n; ++i) {
      electric[i] *= 0.5;
      magnetic[i] *= 0.5;
    }
    const double half_constant = -kPi * kPi / (16.0 * 45.0 * 2.0 * L * L * L * L);
    baseline = scalar1d::EnergySplit::of(half_constant, half_constant);
    baseline.total = em3d::free_casimir_density(g);
    if (em.couplings) {
      correction.resize(n);
      kernels::eh_correction(backend, L, em.couplings->alpha(), em.couplings->mass(), sines, correction);
      correction_baseline = em3d::eh_correction_constant(g, *em.couplings);
    }
  }

  std::vector<scalar1d::EnergySplit> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = scalar1d::EnergySplit::of(electric[i], magnetic[i]);
  }
  return DensityProfile{g, scheme, std::move(grid), std::move(values), std::move(correction), baseline,
                        correction_baseline};
}

DivergenceFit fit_divergence(const DensityProfile& profile, Endpoint endpoint, Component component,
                             std::size_t window_points) {
  constexpr double kNoiseUlps = 64.0;
  if (window_points < 2) {
    throw PreconditionError("fit_divergence: window needs at least two points");
  }
  const std::size_t n = profile.grid.size();
  const double base = profile.baseline_of(component);
  std::vector<double> xs;
  std::vector<double> ys;
  double theta_min = kPi;
  double theta_max = 0.0;
  for (std::size_t k = 0; k < n && xs.size() < window_points; ++k) {
    const std::size_t i = endpoint == Endpoint::Left ? k : n - 1 - k;
    const double y = std::abs(profile.component(component, i) - base);
    // The total is a sum of two large terms; a difference at their rounding
    // level carries no information about the divergence.
    const double scale = component == Component::Total
                             ? std::abs(profile.values[i].electric) + std::abs(profile.values[i].magnetic)
                             : std::abs(profile.component(component, i));
    if (!(y > kNoiseUlps * std::numeric_limits<double>::epsilon() * scale) || !std::isfinite(y)) {
      continue;
    }
    const double theta = profile.grid[i];
    xs.push_back(std::sin(theta));
    ys.push_back(y);
    theta_min = std::min(theta_min, theta);
    theta_max = std::max(theta_max, theta);
  }
  if (xs.size() < window_points) {
    throw DomainError("fit_divergence: only " + std::to_string(xs.size()) + " of " + std::to_string(window_points) +
                      " window points have a position-dependent part above rounding noise; cannot take logarithms");
  }
  const fit::PowerLaw pl = fit::power_law(xs, ys);
  return DivergenceFit{pl.exponent, pl.amplitude, pl.r_squared, {theta_min, theta_max}};
}

CommutationReport commutation_report(const Geometry& g, const ScalarModel& model, std::span<const double> deltas,
                                     std::span<const double> epsilons, const CommutationTolerances& tol) {
  require_geometric(deltas, "commutation_report deltas", std::nullopt);
  require_geometric(epsilons, "commutation_report epsilons", std::nullopt);
  const double L = g.length();
  if (deltas.front() >= 0.5 * L) {
    throw PreconditionError("commutation_report: every delta must be below L/2");
  }

  const auto* interacting = std::get_if<InteractingScalarModel>(&model);
  CommutationReport report{};
  report.length = L;
  report.model = interacting ? "interacting-scalar" : "free-scalar";
  if (interacting) {
    report.alpha = interacting->couplings.alpha();
    report.mass = interacting->couplings.mass();
  }

  // (a) sum the modes, then regularize.
  report.sum_then_regularize = interacting ? scalar1d::interacting_total_energy(g, interacting->couplings)
                                           : scalar1d::free_total_energy(g);

  // (b) regularize the density, then integrate up to a margin.
  report.expected_exponent = interacting ? -3.0 : -1.0;
  for (double delta : deltas) {
    if (interacting) {
      const auto& c = interacting->couplings;
      auto density = [&](double z) { return scalar1d::interacting_density(g, Position::from_z(z, g), c); };
      const auto breaks = quad::endpoint_graded_breaks(delta, L - delta, 0.5 * delta);
      const double value = quad::integrate_piecewise(density, breaks).value;
      report.partial_totals.push_back(PartialTotal{delta, value, interacting_partial_analytic(g, c, delta)});
    } else {
      const auto r = scalar1d::total_energy_by_route(g, scalar1d::IntegrateRegularizedDensity{delta},
                                                     regsum::RegScheme::zeta());
      report.partial_totals.push_back(PartialTotal{delta, r.value, r.analytic});
    }
  }
  // The finite part drops out of successive differences, which scale like delta^p.
  std::vector<double> fit_deltas;
  std::vector<double> differences;
  for (std::size_t i = 0; i + 1 < report.partial_totals.size(); ++i) {
    fit_deltas.push_back(report.partial_totals[i].delta);
    differences.push_back(report.partial_totals[i + 1].value - report.partial_totals[i].value);
  }
  report.divergence_fit = fit::power_law(fit_deltas, differences);
  report.partial_totals_monotone =
      std::all_of(differences.begin(), differences.end(), [](double d) { return d > 0.0; }) ||
      std::all_of(differences.begin(), differences.end(), [](double d) { return d < 0.0; });

  // (c) regularize with a cutoff over the full interval, then let eps -> 0.
  const double zeta_bulk = [&] {
    double bulk = scalar1d::free_total_energy(g);
    if (interacting) {
      const auto& c = interacting->couplings;
      const double sum_omega = regsum::zeta_regularize_power(regsum::PowerSeriesSpec{1.0, kPi / L});
      bulk += -(c.alpha() / (c.mass() * c.mass())) * sum_omega * sum_omega / L;
    }
    return bulk;
  }();

  std::vector<regsum::Sample> finite_samples;
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t j = 0; j < epsilons.size(); ++j) {
    const double eps = epsilons[j];
    const auto scheme = regsum::RegScheme::cutoff(eps);
    auto electric_part = [&](double z) { return scalar1d::electric_position_part(g, Position::from_z(z, g), scheme); };
    auto magnetic_part = [&](double z) { return -scalar1d::electric_position_part(g, Position::from_z(z, g), scheme); };

    CutoffRow row{};
    row.eps = eps;
    const double A = regsum::abel_sum_linear(eps);
    row.bulk_closed_form = (kPi / (2.0 * L)) * A;
    row.electric_position_integral = integrate_full_interval(g, eps, electric_part);
    row.position_integral = row.electric_position_integral + integrate_full_interval(g, eps, magnetic_part);
    double pole = (kPi / (2.0 * L)) / (eps * eps);

    if (interacting) {
      const auto& c = interacting->couplings;
      const double k = -c.alpha() / (c.mass() * c.mass());
      // The quartic term is built from correlators with their unbounded-space
      // 1/eps^2 piece removed: beta = (pi/4L^2)(A - 1/eps^2). Squaring the raw A
      // instead would leave the spurious finite cross term 2 (1/eps^2)(eps^2/240).
      // With e = 2(beta + p), b = 2(beta - p): 3e^2 + 3b^2 - 2eb = 16 beta^2 + 32 p^2.
      const double subtracted = A - 1.0 / (eps * eps);
      row.bulk_closed_form += k * kPi * kPi * subtracted * subtracted / (L * L * L);
      auto squared = [&](double z) {
        const double p = scalar1d::electric_position_part(g, Position::from_z(z, g), scheme);
        return 32.0 * p * p;
      };
      row.position_integral += k * integrate_full_interval(g, eps, squared);
      const double e2 = eps * eps;
      // sum n^2 e^{-2 eps n} ~ 1/(4 eps^3) - eps/60: only the position term has a pole.
      pole += k * kPi * kPi / (L * L * L) / (4.0 * e2 * eps);
    }

    row.raw_total = row.bulk_closed_form + row.position_integral;
    row.total_after_bulk_subtraction = row.position_integral + zeta_bulk;
    row.finite_part = row.raw_total - pole;
    finite_samples.push_back(regsum::Sample{eps, row.finite_part});

    lo = j == 0 ? row.total_after_bulk_subtraction : std::min(lo, row.total_after_bulk_subtraction);
    hi = j == 0 ? row.total_after_bulk_subtraction : std::max(hi, row.total_after_bulk_subtraction);
    report.cutoff_rows.push_back(row);
  }
  report.cutoff_spread = hi - lo;
  // Free field: finite part is even in eps. Interacting: sum n^2 e^{-2 eps n} adds odd powers.
  report.extrapolated_finite_part = regsum::richardson_extrapolate(finite_samples, interacting ? 1 : 2);

  // (d) verdict.
  const double a = report.sum_then_regularize;
  CommutationVerdict& v = report.verdict;
  v.sum_route_finite = std::isfinite(a);
  v.partial_totals_diverge = std::abs(report.divergence_fit.exponent - report.expected_exponent) <= tol.exponent;
  if (!interacting) {
    bool matches = report.cutoff_spread <= tol.eps_independence;
    for (const auto& row : report.cutoff_rows) {
      matches = matches && std::abs(row.total_after_bulk_subtraction - a) <= tol.eps_independence;
    }
    v.cutoff_total_eps_independent = matches;
  }
  v.routes_agree = std::abs(report.extrapolated_finite_part.value - a) <= tol.route_agreement_relative * std::abs(a);
  return report;
}

std::vector<ExpansionRow> epsilon_expansion_check(std::span<const double> thetas, std::span<const double> epsilons) {
  require_geometric(epsilons, "epsilon_expansion_check", 2.0);
  const double eps_max = epsilons.front();
  std::vector<ExpansionRow> rows;
  for (double theta : thetas) {
    if (!(theta > 0.0 && theta < kPi)) {
      throw DomainError("epsilon_expansion_check: theta must be strictly inside (0, pi)");
    }
    ExpansionRow row{theta, {}, std::nullopt, ExpansionStatus::Ok};
    const double s = std::sin(theta);
    const double coeff = std::cos(theta) / (8.0 * s * s * s);
    const double limit = regsum::abel_sum_sin_limit(theta);
    bool all_zero = true;
    for (double eps : epsilons) {
      const double r = regsum::abel_sum_sin(eps, theta) - limit + coeff * eps * eps;
      row.residuals.push_back(r);
      all_zero = all_zero && std::abs(r) <= 1e-14;
    }
    if (all_zero) {
      row.status = ExpansionStatus::VanishingResidual;
    } else {
      row.slope = fit::power_law(epsilons, row.residuals).exponent;
      if (theta < eps_max || kPi - theta < eps_max) {
        row.status = ExpansionStatus::Breakdown;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace casimir::lab
