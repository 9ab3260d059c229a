#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/regsum.hpp"
#include "frozen_values.hpp"
#include "support.hpp"

using namespace casimir;
using namespace casimir::regsum;
using casimir::testkit::Gen;
using casimir::testkit::kPi;
using casimir::testkit::rel_err;

TEST(RegScheme, Factories) {
  EXPECT_FALSE(RegScheme::zeta().epsilon().has_value());
  EXPECT_FALSE(RegScheme::zeta().is_cutoff());
  const RegScheme c = RegScheme::cutoff(0.1);
  EXPECT_TRUE(c.is_cutoff());
  EXPECT_EQ(c.epsilon().value(), 0.1);
  EXPECT_THROW(RegScheme::cutoff(0.0), DomainError);
  EXPECT_THROW(RegScheme::cutoff(-1.0), DomainError);
  EXPECT_THROW(RegScheme::cutoff(std::nan("")), DomainError);
}

TEST(ZetaRegularizePower, KnownSeries) {
  EXPECT_NEAR(zeta_regularize_power({1.0, 1.0}), -1.0 / 12.0, 1e-16);
  EXPECT_EQ(zeta_regularize_power({2.0, 5.0}), 0.0);
  EXPECT_NEAR(zeta_regularize_power({0.0, 2.0}), -1.0, 1e-15);
  EXPECT_NEAR(zeta_regularize_power({3.0, 1.0}), 1.0 / 120.0, 1e-16);
  EXPECT_THROW(zeta_regularize_power({-1.0, 1.0}), PoleError);
}

TEST(ZetaRegularizePower, RegularizerWrapsIt) {
  const PowerRegularizer r = zeta_power_regularizer();
  EXPECT_EQ(r({1.0, 3.0}), zeta_regularize_power({1.0, 3.0}));
}

TEST(AbelSumSin, FrozenTable) {
  for (const auto& cell : frozen::kCutoffSinSum) {
    EXPECT_LT(rel_err(abel_sum_sin(cell.eps, cell.theta), cell.value), 1e-12) << cell.eps << " " << cell.theta;
  }
}

TEST(AbelSumSin, DirectSummation) {
  for (double eps : {0.05, 0.1, 0.5}) {
    for (double theta : {0.3, 1.0, 2.5}) {
      EXPECT_LT(rel_err(abel_sum_sin(eps, theta), testkit::direct_sin_sum(eps, theta)), 1e-10);
    }
  }
}

TEST(AbelSumSin, EndpointsAreExactlyZero) {
  for (double eps : {1e-4, 0.1, 3.0}) {
    EXPECT_EQ(abel_sum_sin(eps, 0.0), 0.0);
    EXPECT_EQ(abel_sum_sin(eps, kPi), 0.0);
  }
}

TEST(AbelSumSin, Preconditions) {
  EXPECT_THROW(abel_sum_sin(0.0, 1.0), DomainError);
  EXPECT_THROW(abel_sum_sin(0.1, -0.1), DomainError);
  EXPECT_THROW(abel_sum_sin(0.1, 4.0), DomainError);
  EXPECT_THROW(abel_sum_sin_limit(0.0), SingularityError);
}

TEST(AbelSumSinProperty, AntisymmetricAboutHalfPi) {
  Gen gen(21);
  for (int i = 0; i < 200; ++i) {
    const double eps = gen.log_uniform(1e-3, 2.0);
    const double theta = gen.interior_theta();
    EXPECT_NEAR(abel_sum_sin(eps, kPi - theta), -abel_sum_sin(eps, theta), 1e-12 * (1.0 + 1.0 / eps));
  }
}

TEST(AbelSumSinProperty, DerivativeMatchesFiniteDifference) {
  Gen gen(22);
  for (int i = 0; i < 100; ++i) {
    const double eps = gen.log_uniform(0.05, 2.0);
    const double theta = gen.uniform(0.2, kPi - 0.2);
    const double h = 1e-5;
    const double fd = (abel_sum_sin(eps, theta + h) - abel_sum_sin(eps, theta - h)) / (2.0 * h);
    EXPECT_NEAR(abel_sum_sin_derivative(eps, theta), fd, 1e-6 * (1.0 + std::abs(fd)));
  }
}

TEST(AbelSumSinProperty, ApproachesCotangentLimit) {
  Gen gen(23);
  for (int i = 0; i < 100; ++i) {
    const double theta = gen.uniform(0.1, kPi - 0.1);
    const std::vector<Sample> s{{0.02, abel_sum_sin(0.02, theta)},
                                {0.01, abel_sum_sin(0.01, theta)},
                                {0.005, abel_sum_sin(0.005, theta)},
                                {0.0025, abel_sum_sin(0.0025, theta)}};
    EXPECT_NEAR(richardson_extrapolate(s, 2).value, 0.5 / std::tan(theta), 1e-8);
  }
}

TEST(AbelSumLinear, FrozenAndDirect) {
  for (const auto& [eps, want] : frozen::kCutoffLinearSum) EXPECT_LT(rel_err(abel_sum_linear(eps), want), 1e-13);
  for (double eps : {0.05, 0.3, 2.0}) {
    EXPECT_LT(rel_err(abel_sum_linear(eps), testkit::direct_power_sum(1, eps)), 1e-12);
  }
}

TEST(AbelSumLinear, LaurentFinitePartIsZetaMinusOne) {
  for (double eps : {0.02, 0.01, 0.005}) {
    const double finite = abel_sum_linear(eps) - 1.0 / (eps * eps);
    EXPECT_NEAR(finite, -1.0 / 12.0 + eps * eps / 240.0, 1e-9);
  }
}

TEST(AbelSumQuadratic, DirectAndPoleStructure) {
  for (double eps : {0.05, 0.3, 2.0}) {
    EXPECT_LT(rel_err(abel_sum_quadratic(eps), testkit::direct_power_sum(2, eps)), 1e-12);
  }
  const double eps = 0.01;
  EXPECT_NEAR(abel_sum_quadratic(eps) - 2.0 / (eps * eps * eps), -eps / 120.0, 1e-7);
}

TEST(Richardson, RemovesPolynomialErrorExactly) {
  auto f = [](double h) { return 3.0 + 2.0 * h * h - 5.0 * std::pow(h, 4); };
  const std::vector<Sample> s{{0.4, f(0.4)}, {0.2, f(0.2)}, {0.1, f(0.1)}};
  const Extrapolation e = richardson_extrapolate(s, 2);
  EXPECT_NEAR(e.value, 3.0, 1e-14);
}

TEST(Richardson, FirstOrder) {
  auto f = [](double h) { return -1.0 + 0.7 * h + 0.1 * h * h; };
  const std::vector<Sample> s{{0.3, f(0.3)}, {0.1, f(0.1)}, {1.0 / 30.0, f(1.0 / 30.0)}};
  EXPECT_NEAR(richardson_extrapolate(s, 1).value, -1.0, 1e-14);
}

TEST(Richardson, Preconditions) {
  const std::vector<Sample> one{{0.1, 1.0}};
  EXPECT_THROW(richardson_extrapolate(one, 1), PreconditionError);
  const std::vector<Sample> two{{0.1, 1.0}, {0.05, 1.0}};
  EXPECT_THROW(richardson_extrapolate(two, 2), PreconditionError);
  const std::vector<Sample> uneven{{0.1, 1.0}, {0.05, 1.0}, {0.01, 1.0}};
  EXPECT_THROW(richardson_extrapolate(uneven, 1), PreconditionError);
  const std::vector<Sample> increasing{{0.05, 1.0}, {0.1, 1.0}};
  EXPECT_THROW(richardson_extrapolate(increasing, 1), PreconditionError);
  EXPECT_THROW(richardson_extrapolate(two, 0), PreconditionError);
}

// The residual after the eps^2 term of the small-eps expansion falls like eps^4.
TEST(ExpansionProperty, ResidualIsFourthOrder) {
  Gen gen(24);
  for (int i = 0; i < 50; ++i) {
    const double theta = gen.uniform(0.5, kPi - 0.5);
    if (std::abs(theta - kPi / 2) < 0.05) continue;
    auto residual = [&](double eps) {
      const double s = std::sin(theta);
      return abel_sum_sin(eps, theta) - 0.5 / std::tan(theta) + std::cos(theta) / (8.0 * s * s * s) * eps * eps;
    };
    const double slope = std::log2(residual(0.04) / residual(0.02));
    EXPECT_NEAR(slope, 4.0, 0.1) << theta;
  }
}
