#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <functional>
#include <vector>

#include "casimir/em3d.hpp"
#include "casimir/kernels.hpp"
#include "casimir/scalar1d.hpp"
#include "support.hpp"

using namespace casimir;
using casimir::kernels::Backend;
using casimir::testkit::Gen;
using casimir::testkit::kPi;
using casimir::testkit::rel_err;

namespace {

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

// Runs `fill` with both backends on random inputs of awkward sizes and
// demands identical bits.
void expect_backends_identical(std::uint64_t seed,
                               const std::function<void(Backend, const std::vector<double>&, std::vector<double>&,
                                                        std::vector<double>&)>& fill) {
  if (!kernels::avx2_available()) GTEST_SKIP() << "AVX2 not available on this CPU";
  Gen gen(seed);
  for (std::size_t n : {0, 1, 3, 4, 5, 7, 8, 13, 64, 101, 1000}) {
    std::vector<double> theta = gen.vec(n, 1e-4, kPi - 1e-4);
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = std::sin(theta[i]);
    std::vector<double> a1(n), b1(n), a2(n), b2(n);
    fill(Backend::Scalar, s, a1, b1);
    fill(Backend::Avx2, s, a2, b2);
    EXPECT_TRUE(bit_equal(a1, a2)) << "n=" << n;
    EXPECT_TRUE(bit_equal(b1, b2)) << "n=" << n;
  }
}

}  // namespace

TEST(Dispatch, BackendNames) {
  EXPECT_EQ(kernels::backend_name(Backend::Scalar), "scalar");
  EXPECT_EQ(kernels::backend_name(Backend::Avx2), "avx2");
  if (!kernels::avx2_available()) EXPECT_EQ(kernels::active_backend(), Backend::Scalar);
}

TEST(Dispatch, MismatchedSpansRejected) {
  std::vector<double> s(4, 0.5), e(4), m(3);
  EXPECT_ANY_THROW(kernels::scalar_zeta_densities(Backend::Scalar, 1.0, s, e, m));
}

TEST(Equivalence, ScalarZetaDensities) {
  expect_backends_identical(61, [](Backend b, const auto& s, auto& e, auto& m) {
    kernels::scalar_zeta_densities(b, 1.3, s, e, m);
  });
}

TEST(Equivalence, ScalarCutoffDensities) {
  expect_backends_identical(62, [](Backend b, const auto& s, auto& e, auto& m) {
    kernels::scalar_cutoff_densities(b, 0.7, 0.01, s, e, m);
  });
}

TEST(Equivalence, EmCorrelators) {
  expect_backends_identical(63, [](Backend b, const auto& s, auto& e, auto& m) {
    kernels::em_correlators(b, 2.0, s, e, m);
  });
}

TEST(Equivalence, EhCorrection) {
  expect_backends_identical(64, [](Backend b, const auto& s, auto& e, auto&) {
    kernels::eh_correction(b, 1.0, 1.0 / 137.036, 1.0, s, e);
  });
}

TEST(Equivalence, InteractingCorrection) {
  expect_backends_identical(65, [](Backend b, const auto& s, auto& e, auto&) {
    kernels::interacting_correction(b, 1.0, 0.01, 10.0, s, e);
  });
}

TEST(Equivalence, CutoffModeSums) {
  if (!kernels::avx2_available()) GTEST_SKIP() << "AVX2 not available on this CPU";
  Gen gen(66);
  for (std::size_t n : {1, 3, 4, 9, 33}) {
    const auto theta = gen.vec(n, 0.0, kPi);
    std::vector<double> s1(n), c1(n), s2(n), c2(n);
    kernels::cutoff_mode_sums(Backend::Scalar, 0.003, 5000, theta, s1, c1);
    kernels::cutoff_mode_sums(Backend::Avx2, 0.003, 5000, theta, s2, c2);
    EXPECT_TRUE(bit_equal(s1, s2));
    EXPECT_TRUE(bit_equal(c1, c2));
  }
}

// The batch kernels reproduce the single-point library functions.
TEST(Reference, MatchesPointwiseFunctions) {
  Gen gen(67);
  const Geometry g(1.3);
  const scalar1d::Couplings sc(0.01, 10.0);
  const em3d::EhCouplings ec(0.02, 1.5);
  const std::size_t n = 50;
  std::vector<double> theta = gen.vec(n, 1e-3, kPi - 1e-3), s(n), e(n), m(n), x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = std::sin(theta[i]);
  for (Backend b : {Backend::Scalar, kernels::active_backend()}) {
    kernels::scalar_zeta_densities(b, 1.3, s, e, m);
    kernels::em_correlators(b, 1.3, s, x, y);
    for (std::size_t i = 0; i < n; ++i) {
      const Position p = Position::from_theta(theta[i], g);
      EXPECT_LT(rel_err(e[i], scalar1d::electric_density(g, p, regsum::RegScheme::zeta())), 1e-13);
      EXPECT_LT(rel_err(m[i], scalar1d::magnetic_density(g, p, regsum::RegScheme::zeta())), 1e-13);
      const auto c = em3d::correlators(g, p);
      EXPECT_LT(rel_err(x[i], c.e2), 1e-12);
      EXPECT_LT(rel_err(y[i], c.b2), 1e-12);
    }
    kernels::scalar_cutoff_densities(b, 1.3, 0.05, s, e, m);
    for (std::size_t i = 0; i < n; ++i) {
      const Position p = Position::from_theta(theta[i], g);
      const auto scheme = regsum::RegScheme::cutoff(0.05);
      EXPECT_NEAR(e[i], scalar1d::electric_density(g, p, scheme), 1e-12 * (1.0 + std::abs(e[i])));
    }
    kernels::interacting_correction(b, 1.3, 0.01, 10.0, s, x);
    kernels::eh_correction(b, 1.3, 0.02, 1.5, s, y);
    for (std::size_t i = 0; i < n; ++i) {
      const Position p = Position::from_theta(theta[i], g);
      EXPECT_LT(rel_err(x[i], scalar1d::interacting_correction(g, p, sc).total()), 1e-12);
      EXPECT_LT(rel_err(y[i], em3d::eh_correction_density(g, p, ec).total()), 1e-12);
    }
  }
}

TEST(Reference, ModeSumsMatchDirectLongDoubleLoop) {
  const std::vector<double> theta{0.0, 0.4, 1.5, 2.9};
  const double eps = 0.02;
  const std::int64_t modes = 3000;
  std::vector<double> s(theta.size()), c(theta.size());
  kernels::cutoff_mode_sums(kernels::active_backend(), eps, modes, theta, s, c);
  for (std::size_t i = 0; i < theta.size(); ++i) {
    long double ss = 0, cc = 0;
    for (std::int64_t n = 1; n <= modes; ++n) {
      const long double w = std::exp(-static_cast<long double>(eps) * n);
      ss += w * std::sin(2.0L * n * theta[i]);
      cc += n * w * std::cos(2.0L * n * theta[i]);
    }
    EXPECT_NEAR(s[i], static_cast<double>(ss), 1e-12 * (1.0 + std::abs(static_cast<double>(ss))));
    EXPECT_NEAR(c[i], static_cast<double>(cc), 1e-11 * (1.0 + std::abs(static_cast<double>(cc))));
  }
}
