// Scalar reference kernels. The AVX2 variants in avx2.cpp mirror these
// operation for operation; keep the two in step.

#include <cmath>

#include "kernel_impl.hpp"

namespace casimir::kernels::scalar {

void zeta_densities(const ZetaConstants& k, const double* s, double* e, double* m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = 1.0 / (s[i] * s[i]);
    const double pos = k.position * x;
    e[i] = k.bulk + pos;
    m[i] = k.bulk - pos;
  }
}

void cutoff_densities(const CutoffConstants& k, const double* s, double* e, double* m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double s2 = s[i] * s[i];
    const double denom = k.omq2 + k.four_q * s2;
    const double numer = k.omq2 - k.two_one_plus_q2 * s2;
    const double dS = (k.two_q * numer) / (denom * denom);
    const double pos = k.position * dS;
    e[i] = k.bulk + pos;
    m[i] = k.bulk - pos;
  }
}

void em_correlators(const EmConstants& k, const double* s, double* e2, double* b2, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = 1.0 / (s[i] * s[i]);
    const double F = 3.0 * (x * x) - 2.0 * x;
    e2[i] = k.prefactor * (k.inv45 - F);
    b2[i] = k.prefactor * (k.inv45 + F);
  }
}

void eh_correction(const EhConstants& k, const double* s, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = 1.0 / (s[i] * s[i]);
    const double F = 3.0 * (x * x) - 2.0 * x;
    out[i] = k.prefactor * (k.c11 + 9.0 * (F * F));
  }
}

void interacting_correction(const InteractingConstants& k, const double* s, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = 1.0 / (s[i] * s[i]);
    out[i] = k.prefactor * (k.c18 + x * x);
  }
}

void cutoff_mode_sums(double eps, std::int64_t modes, const double* theta, double* sin_sum, double* cos_weighted,
                      std::size_t n) {
  const double q = std::exp(-eps);
  for (std::size_t i = 0; i < n; ++i) {
    const long double two_theta = 2.0L * static_cast<long double>(theta[i]);
    const double rot_c = static_cast<double>(std::cos(two_theta));
    const double rot_s = static_cast<double>(std::sin(two_theta));
    double c = rot_c;
    double s = rot_s;
    double w = q;
    double acc_sin = 0.0;
    double acc_cos = 0.0;
    for (std::int64_t mode = 1; mode <= modes; ++mode) {
      if (mode % kResyncInterval == 0) {
        const long double phase = two_theta * static_cast<long double>(mode);
        c = static_cast<double>(std::cos(phase));
        s = static_cast<double>(std::sin(phase));
        w = std::exp(-eps * static_cast<double>(mode));
      }
      const double nd = static_cast<double>(mode);
      acc_sin = acc_sin + w * s;
      acc_cos = acc_cos + (nd * w) * c;
      const double next_c = c * rot_c - s * rot_s;
      const double next_s = s * rot_c + c * rot_s;
      c = next_c;
      s = next_s;
      w = w * q;
    }
    sin_sum[i] = acc_sin;
    cos_weighted[i] = acc_cos;
  }
}

}  // namespace casimir::kernels::scalar
