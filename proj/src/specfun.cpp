#include "casimir/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"

namespace casimir::specfun {
namespace {

using boost::multiprecision::cpp_int;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be finite");
  }
}

bool is_integer(double x) { return std::floor(x) == x; }

// Exact table from sum_{k=0}^{n} C(n+1, k) B_k = 0, built once.
struct BernoulliTable {
  std::array<Rational, kMaxBernoulliIndex + 1> exact;
  std::array<double, kMaxBernoulliIndex + 1> rounded{};

  BernoulliTable() {
    exact[0] = 1;
    for (int n = 1; n <= kMaxBernoulliIndex; ++n) {
      Rational acc = 0;
      cpp_int binom = 1;  // C(n+1, k)
      for (int k = 0; k < n; ++k) {
        acc += Rational(binom) * exact[k];
        binom = binom * (n + 1 - k) / (k + 1);
      }
      exact[n] = -acc / (n + 1);
    }
    for (int n = 0; n <= kMaxBernoulliIndex; ++n) {
      rounded[n] = exact[n].convert_to<double>();
    }
  }
};

const BernoulliTable& table() {
  static const BernoulliTable t;
  return t;
}

// -B_{n+1}/(n+1) in exact arithmetic, then rounded once.
double zeta_negative_integer(int n) {
  if (n == 0) {
    return -0.5;
  }
  if (n % 2 == 0) {
    return 0.0;
  }
  const Rational value = -table().exact[n + 1] / (n + 1);
  return value.convert_to<double>();
}

}  // namespace

namespace detail {

double zeta_euler_maclaurin(double s) {
  constexpr int kTerms = 16;       // explicit partial sum up to N - 1
  constexpr int kCorrections = 12;  // Bernoulli tail corrections B_2 .. B_24
  const double N = kTerms;

  double sum = 0.0;
  for (int n = kTerms - 1; n >= 1; --n) {
    sum += std::pow(static_cast<double>(n), -s);
  }
  const double n_pow = std::pow(N, -s);
  sum += N * n_pow / (s - 1.0);
  sum += 0.5 * n_pow;

  // Term k: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}.
  double rising = s;             // s(s+1)...(s+2k-2)
  double factorial = 2.0;        // (2k)!
  double n_power = n_pow / N;    // N^{-s-2k+1}
  for (int k = 1; k <= kCorrections; ++k) {
    const double term = table().rounded[2 * k] / factorial * rising * n_power;
    sum += term;
    rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    n_power /= N * N;
  }
  return sum;
}

double zeta_functional_equation(double s) {
  // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
  const double pi = std::numbers::pi;
  const double one_minus_s = 1.0 - s;
  return std::pow(2.0, s) * std::pow(pi, s - 1.0) * std::sin(0.5 * pi * s) *
         std::tgamma(one_minus_s) * zeta_euler_maclaurin(one_minus_s);
}

}  // namespace detail

double riemann_zeta(double s) {
  require_finite(s, "riemann_zeta");
  if (s == 1.0) {
    throw PoleError("riemann_zeta: pole at s = 1");
  }
  if (s <= 0.0 && is_integer(s) && -s <= kMaxBernoulliIndex - 1) {
    return zeta_negative_integer(static_cast<int>(-s));
  }
  if (s < 0.0) {
    return detail::zeta_functional_equation(s);
  }
  return detail::zeta_euler_maclaurin(s);
}

double gamma(double x) {
  require_finite(x, "gamma");
  if (x <= 0.0 && is_integer(x)) {
    throw PoleError("gamma: pole at non-positive integer " + std::to_string(x));
  }
  return std::tgamma(x);
}

const Rational& bernoulli_exact(int n) {
  if (n < 0 || n > kMaxBernoulliIndex) {
    throw DomainError("bernoulli: index " + std::to_string(n) + " outside [0, 64]");
  }
  return table().exact[n];
}

double bernoulli(int n) {
  bernoulli_exact(n);
  return table().rounded[n];
}

}  // namespace casimir::specfun
