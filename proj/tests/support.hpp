#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

// Small generators for the property tests. Seeds are fixed so failures
// reproduce; each test picks its own seed.
namespace casimir::testkit {

inline constexpr double kPi = std::numbers::pi;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Log-uniform on [lo, hi]; lengths and couplings span decades.
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  double interior_theta(double margin = 1e-3) { return uniform(margin, kPi - margin); }

  std::vector<double> vec(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (double& x : v) x = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

inline double rel_err(double got, double want) {
  return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

/// sum_{n>=1} e^{-eps n} sin(2 n theta), summed term by term in long double
/// until the weights drop below 1e-25.
inline double direct_sin_sum(double eps, double theta) {
  long double acc = 0.0L;
  for (long n = 1;; ++n) {
    const long double w = std::exp(-static_cast<long double>(eps) * n);
    if (w < 1e-25L) break;
    acc += w * std::sin(2.0L * n * static_cast<long double>(theta));
  }
  return static_cast<double>(acc);
}

/// sum_{n>=1} n^p e^{-eps n}, term by term in long double.
inline double direct_power_sum(int p, double eps) {
  long double acc = 0.0L;
  for (long n = 1;; ++n) {
    const long double w = std::pow(static_cast<long double>(n), p) * std::exp(-static_cast<long double>(eps) * n);
    acc += w;
    if (n > 10 && w < 1e-25L * acc) break;
  }
  return static_cast<double>(acc);
}

}  // namespace casimir::testkit
