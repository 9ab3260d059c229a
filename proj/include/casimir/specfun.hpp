#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace casimir::specfun {

using Rational = boost::multiprecision::cpp_rational;

/// Largest index served by the Bernoulli table.
inline constexpr int kMaxBernoulliIndex = 64;

/// Riemann zeta on the real line, s != 1.
///
/// s > 0 uses Euler-Maclaurin corrected partial sums. Negative integers return
/// the exact Bernoulli value (-B_{n+1}/(n+1), zero at negative even integers);
/// other s < 0 go through the functional equation. Accurate to ~1e-13 relative
/// on [-10, 30].
///
/// Throws PoleError at s = 1 and DomainError on non-finite input.
double riemann_zeta(double s);

/// Gamma function. Throws PoleError at non-positive integers.
double gamma(double x);

/// B_n as an exact rational (B_1 = -1/2 convention), 0 <= n <= 64.
const Rational& bernoulli_exact(int n);

/// B_n correctly rounded to double.
double bernoulli(int n);

namespace detail {

/// zeta(s) for s > 0 via Euler-Maclaurin summation (no shortcut for integers).
double zeta_euler_maclaurin(double s);

/// zeta(s) for s < 0 via the functional equation, never using the Bernoulli
/// shortcut. Exposed so the two routes can be compared at integer points.
double zeta_functional_equation(double s);

}  // namespace detail

}  // namespace casimir::specfun
