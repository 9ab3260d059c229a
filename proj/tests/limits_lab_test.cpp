#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/limits_lab.hpp"
#include "support.hpp"

using namespace casimir;
using namespace casimir::lab;
using casimir::testkit::Gen;
using casimir::testkit::kPi;
using casimir::testkit::rel_err;

namespace {

const std::vector<double> kDeltas{0.02, 0.01, 0.005, 0.0025};
const std::vector<double> kEpsilons{0.04, 0.02, 0.01, 0.005};

}  // namespace

TEST(Grid, UniformAndClustered) {
  const auto u = make_grid({5, Clustering::Uniform});
  ASSERT_EQ(u.size(), 5u);
  EXPECT_DOUBLE_EQ(u[0], kPi / 6);
  EXPECT_EQ(u[2], kPi / 2);
  const auto c = make_grid({7, Clustering::Endpoints});
  EXPECT_EQ(c[3], kPi / 2);
  EXPECT_LT(c[0], kPi / 8 / 7);
  EXPECT_THROW(make_grid({1, Clustering::Uniform}), PreconditionError);
}

TEST(GridProperty, StrictlyIncreasingInteriorAndMirrored) {
  Gen gen(71);
  for (int i = 0; i < 100; ++i) {
    const GridSpec spec{static_cast<std::size_t>(gen.integer(2, 400)),
                        i % 2 ? Clustering::Endpoints : Clustering::Uniform};
    const auto grid = make_grid(spec);
    ASSERT_EQ(grid.size(), spec.count);
    EXPECT_GT(grid.front(), 0.0);
    EXPECT_LT(grid.back(), kPi);
    for (std::size_t k = 1; k < grid.size(); ++k) EXPECT_LT(grid[k - 1], grid[k]);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      EXPECT_NEAR(grid[k] + grid[grid.size() - 1 - k], kPi, 1e-14);
    }
  }
}

TEST(Profile, ScalarMidpoint) {
  const auto p = sample_profile(ScalarSource{}, Geometry(1.0), regsum::RegScheme::zeta(), {101, Clustering::Uniform});
  EXPECT_LT(rel_err(p.values[50].electric, kPi / 24.0), 1e-14);
  EXPECT_TRUE(p.correction.empty());
}

TEST(Profile, FreeEmIsConstant) {
  const Geometry g(1.0);
  const auto p = sample_profile(EmSource{}, g, regsum::RegScheme::zeta(), {64, Clustering::Uniform});
  // (E^2 + B^2)/2 cancels two terms of size ~F, so the floor grows with F.
  for (std::size_t i = 0; i < p.grid.size(); ++i) {
    const double F = em3d::profile_F(p.grid[i]);
    EXPECT_LT(rel_err(p.values[i].total, -kPi * kPi / 720.0), 1e-12 + 2e-14 * F) << p.grid[i];
  }
}

TEST(Profile, EmRejectsCutoff) {
  EXPECT_THROW(sample_profile(EmSource{}, Geometry(1.0), regsum::RegScheme::cutoff(0.1), {}), DomainError);
}

TEST(Profile, BackendsGiveIdenticalProfiles) {
  const Geometry g(1.0);
  for (const DensitySource& src : {DensitySource(ScalarSource{scalar1d::Couplings(0.01, 10.0)}),
                                   DensitySource(EmSource{em3d::EhCouplings::physical()})}) {
    const auto a = sample_profile(src, g, regsum::RegScheme::zeta(), {37, Clustering::Endpoints},
                                  kernels::Backend::Scalar);
    const auto b = sample_profile(src, g, regsum::RegScheme::zeta(), {37, Clustering::Endpoints},
                                  kernels::active_backend());
    for (std::size_t i = 0; i < a.grid.size(); ++i) {
      EXPECT_EQ(a.values[i].total, b.values[i].total);
      EXPECT_EQ(a.correction[i], b.correction[i]);
    }
  }
}

TEST(Profile, CorrectionComponentNeedsCouplings) {
  const auto p = sample_profile(ScalarSource{}, Geometry(1.0), regsum::RegScheme::zeta(), {5});
  EXPECT_THROW(p.component(Component::Correction, 0), PreconditionError);
}

TEST(Divergence, ScalarElectricIsInverseSquare) {
  const auto p = sample_profile(ScalarSource{}, Geometry(1.0), regsum::RegScheme::zeta(), {2001, Clustering::Uniform});
  for (Endpoint e : {Endpoint::Left, Endpoint::Right}) {
    const auto f = fit_divergence(p, e, Component::Electric);
    EXPECT_NEAR(f.exponent, -2.0, 0.02);
    EXPECT_TRUE(f.conclusive());
  }
}

TEST(Divergence, EmCorrelatorIsInverseFourth) {
  const auto p = sample_profile(EmSource{}, Geometry(1.0), regsum::RegScheme::zeta(), {2001, Clustering::Uniform});
  EXPECT_NEAR(fit_divergence(p, Endpoint::Left, Component::Electric).exponent, -4.0, 0.02);
}

TEST(Divergence, EulerHeisenbergIsInverseEighth) {
  const auto p = sample_profile(EmSource{em3d::EhCouplings::physical()}, Geometry(1.0), regsum::RegScheme::zeta(),
                                {2001, Clustering::Uniform});
  EXPECT_NEAR(fit_divergence(p, Endpoint::Left, Component::Correction).exponent, -8.0, 0.1);
}

TEST(Divergence, InteractingScalarIsInverseFourth) {
  const auto p = sample_profile(ScalarSource{scalar1d::Couplings(0.01, 10.0)}, Geometry(1.0),
                                regsum::RegScheme::zeta(), {2001, Clustering::Uniform});
  EXPECT_NEAR(fit_divergence(p, Endpoint::Right, Component::Correction).exponent, -4.0, 0.02);
}

TEST(Divergence, FreeEmTotalHasNothingToFit) {
  const auto p = sample_profile(EmSource{}, Geometry(1.0), regsum::RegScheme::zeta(), {11});
  EXPECT_THROW(fit_divergence(p, Endpoint::Left, Component::Total), DomainError);
}

TEST(DivergenceProperty, HalvingWindowIsStable) {
  Gen gen(72);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1000, 4000));
    const auto p = sample_profile(EmSource{em3d::EhCouplings::physical()}, Geometry(gen.log_uniform(0.5, 2.0)),
                                  regsum::RegScheme::zeta(), {n, Clustering::Uniform});
    for (Component c : {Component::Electric, Component::Correction}) {
      const double wide = fit_divergence(p, Endpoint::Left, c, 8).exponent;
      const double narrow = fit_divergence(p, Endpoint::Left, c, 4).exponent;
      EXPECT_LT(std::abs(wide - narrow), 0.05);
    }
  }
}

TEST(Commutation, FreeScalar) {
  const auto r = commutation_report(Geometry(1.0), FreeScalarModel{}, kDeltas, kEpsilons);
  EXPECT_LT(rel_err(r.sum_then_regularize, -kPi / 24.0), 1e-14);
  EXPECT_NEAR(r.divergence_fit.exponent, -1.0, 0.02);
  EXPECT_TRUE(r.partial_totals_monotone);
  EXPECT_LT(r.cutoff_spread, 1e-8);
  EXPECT_LT(rel_err(r.extrapolated_finite_part.value, -kPi / 24.0), 1e-7);
  ASSERT_TRUE(r.verdict.cutoff_total_eps_independent.has_value());
  EXPECT_TRUE(r.verdict.passed());
  for (const auto& pt : r.partial_totals) EXPECT_LT(rel_err(pt.value, pt.analytic), 1e-11);
}

TEST(Commutation, InteractingScalar) {
  const scalar1d::Couplings c(0.01, 10.0);
  const auto r = commutation_report(Geometry(1.0), InteractingScalarModel{c}, kDeltas, kEpsilons);
  EXPECT_NEAR(r.sum_then_regularize, -0.13090655, 5e-9);
  EXPECT_NEAR(r.divergence_fit.exponent, -3.0, 0.02);
  EXPECT_FALSE(r.verdict.cutoff_total_eps_independent.has_value());
  EXPECT_TRUE(r.verdict.routes_agree);
  EXPECT_LT(rel_err(r.extrapolated_finite_part.value, r.sum_then_regularize), 1e-7);
  EXPECT_TRUE(r.verdict.passed());
}

TEST(Commutation, Preconditions) {
  const std::vector<double> short_list{0.1, 0.05};
  const std::vector<double> uneven{0.1, 0.05, 0.01};
  const std::vector<double> wide{0.8, 0.4, 0.2};
  EXPECT_THROW(commutation_report(Geometry(1.0), FreeScalarModel{}, short_list, kEpsilons), PreconditionError);
  EXPECT_THROW(commutation_report(Geometry(1.0), FreeScalarModel{}, uneven, kEpsilons), PreconditionError);
  EXPECT_THROW(commutation_report(Geometry(1.0), FreeScalarModel{}, wide, kEpsilons), PreconditionError);
}

TEST(CommutationProperty, RoutesAgreeForRandomGeometry) {
  Gen gen(73);
  for (int i = 0; i < 5; ++i) {
    const Geometry g(gen.log_uniform(0.5, 3.0));
    const auto r = commutation_report(g, FreeScalarModel{}, kDeltas, kEpsilons);
    EXPECT_TRUE(r.verdict.passed()) << g.length();
    const scalar1d::Couplings c(gen.log_uniform(1e-3, 1e-2), gen.log_uniform(5.0, 20.0));
    const auto ri = commutation_report(g, InteractingScalarModel{c}, kDeltas, kEpsilons);
    EXPECT_TRUE(ri.verdict.passed()) << g.length();
  }
}

TEST(Expansion, SlopeFourAwayFromBoundaries) {
  const std::vector<double> thetas{0.5, 1.0, 2.0};
  const std::vector<double> eps{0.04, 0.02, 0.01};
  for (const auto& row : epsilon_expansion_check(thetas, eps)) {
    EXPECT_EQ(row.status, ExpansionStatus::Ok);
    ASSERT_TRUE(row.slope.has_value());
    EXPECT_NEAR(*row.slope, 4.0, 0.1) << row.theta;
  }
}

TEST(Expansion, HalfPiResidualVanishes) {
  const std::vector<double> thetas{kPi / 2};
  const std::vector<double> eps{0.04, 0.02, 0.01};
  const auto rows = epsilon_expansion_check(thetas, eps);
  EXPECT_EQ(rows[0].status, ExpansionStatus::VanishingResidual);
  EXPECT_FALSE(rows[0].slope.has_value());
}

TEST(Expansion, BreakdownNearBoundary) {
  const std::vector<double> thetas{0.005, kPi - 0.005};
  const std::vector<double> eps{0.04, 0.02, 0.01};
  for (const auto& row : epsilon_expansion_check(thetas, eps)) EXPECT_EQ(row.status, ExpansionStatus::Breakdown);
}

TEST(Expansion, Preconditions) {
  const std::vector<double> thetas{1.0};
  const std::vector<double> ratio3{0.09, 0.03, 0.01};
  const std::vector<double> two{0.02, 0.01};
  EXPECT_THROW(epsilon_expansion_check(thetas, ratio3), PreconditionError);
  EXPECT_THROW(epsilon_expansion_check(thetas, two), PreconditionError);
  const std::vector<double> edge{0.0};
  const std::vector<double> eps{0.04, 0.02, 0.01};
  EXPECT_THROW(epsilon_expansion_check(edge, eps), DomainError);
}
