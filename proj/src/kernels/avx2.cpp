// AVX2 variants of the reference kernels in scalar.cpp. Four angles per
// 256-bit register; remainders go through the scalar reference. Compiled with
// -mavx2 and without FMA so every lane rounds exactly like the scalar path.

#include <immintrin.h>

#include <cmath>

#include "kernel_impl.hpp"

namespace casimir::kernels::avx2 {
namespace {

constexpr std::size_t kLanes = 4;

std::size_t vector_end(std::size_t n) { return n - n % kLanes; }

}  // namespace

void zeta_densities(const ZetaConstants& k, const double* s, double* e, double* m, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d bulk = _mm256_set1_pd(k.bulk);
  const __m256d position = _mm256_set1_pd(k.position);
  const std::size_t end = vector_end(n);
  for (std::size_t i = 0; i < end; i += kLanes) {
    const __m256d sv = _mm256_loadu_pd(s + i);
    const __m256d x = _mm256_div_pd(one, _mm256_mul_pd(sv, sv));
    const __m256d pos = _mm256_mul_pd(position, x);
    _mm256_storeu_pd(e + i, _mm256_add_pd(bulk, pos));
    _mm256_storeu_pd(m + i, _mm256_sub_pd(bulk, pos));
  }
  scalar::zeta_densities(k, s + end, e + end, m + end, n - end);
}

void cutoff_densities(const CutoffConstants& k, const double* s, double* e, double* m, std::size_t n) {
  const __m256d bulk = _mm256_set1_pd(k.bulk);
  const __m256d position = _mm256_set1_pd(k.position);
  const __m256d omq2 = _mm256_set1_pd(k.omq2);
  const __m256d four_q = _mm256_set1_pd(k.four_q);
  const __m256d two_one_plus_q2 = _mm256_set1_pd(k.two_one_plus_q2);
  const __m256d two_q = _mm256_set1_pd(k.two_q);
  const std::size_t end = vector_end(n);
  for (std::size_t i = 0; i < end; i += kLanes) {
    const __m256d sv = _mm256_loadu_pd(s + i);
    const __m256d s2 = _mm256_mul_pd(sv, sv);
    const __m256d denom = _mm256_add_pd(omq2, _mm256_mul_pd(four_q, s2));
    const __m256d numer = _mm256_sub_pd(omq2, _mm256_mul_pd(two_one_plus_q2, s2));
    const __m256d dS = _mm256_div_pd(_mm256_mul_pd(two_q, numer), _mm256_mul_pd(denom, denom));
    const __m256d pos = _mm256_mul_pd(position, dS);
    _mm256_storeu_pd(e + i, _mm256_add_pd(bulk, pos));
    _mm256_storeu_pd(m + i, _mm256_sub_pd(bulk, pos));
  }
  scalar::cutoff_densities(k, s + end, e + end, m + end, n - end);
}

namespace {

inline __m256d profile(__m256d x) {
  const __m256d three = _mm256_set1_pd(3.0);
  const __m256d two = _mm256_set1_pd(2.0);
  return _mm256_sub_pd(_mm256_mul_pd(three, _mm256_mul_pd(x, x)), _mm256_mul_pd(two, x));
}

inline __m256d inv_sin2(const double* s) {
  const __m256d sv = _mm256_loadu_pd(s);
  return _mm256_div_pd(_mm256_set1_pd(1.0), _mm256_mul_pd(sv, sv));
}

}  // namespace

void em_correlators(const EmConstants& k, const double* s, double* e2, double* b2, std::size_t n) {
  const __m256d pref = _mm256_set1_pd(k.prefactor);
  const __m256d inv45 = _mm256_set1_pd(k.inv45);
  const std::size_t end = vector_end(n);
  for (std::size_t i = 0; i < end; i += kLanes) {
    const __m256d F = profile(inv_sin2(s + i));
    _mm256_storeu_pd(e2 + i, _mm256_mul_pd(pref, _mm256_sub_pd(inv45, F)));
    _mm256_storeu_pd(b2 + i, _mm256_mul_pd(pref, _mm256_add_pd(inv45, F)));
  }
  scalar::em_correlators(k, s + end, e2 + end, b2 + end, n - end);
}

void eh_correction(const EhConstants& k, const double* s, double* out, std::size_t n) {
  const __m256d pref = _mm256_set1_pd(k.prefactor);
  const __m256d c11 = _mm256_set1_pd(k.c11);
  const __m256d nine = _mm256_set1_pd(9.0);
  const std::size_t end = vector_end(n);
  for (std::size_t i = 0; i < end; i += kLanes) {
    const __m256d F = profile(inv_sin2(s + i));
    const __m256d body = _mm256_add_pd(c11, _mm256_mul_pd(nine, _mm256_mul_pd(F, F)));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(pref, body));
  }
  scalar::eh_correction(k, s + end, out + end, n - end);
}

void interacting_correction(const InteractingConstants& k, const double* s, double* out, std::size_t n) {
  const __m256d pref = _mm256_set1_pd(k.prefactor);
  const __m256d c18 = _mm256_set1_pd(k.c18);
  const std::size_t end = vector_end(n);
  for (std::size_t i = 0; i < end; i += kLanes) {
    const __m256d x = inv_sin2(s + i);
    _mm256_storeu_pd(out + i, _mm256_mul_pd(pref, _mm256_add_pd(c18, _mm256_mul_pd(x, x))));
  }
  scalar::interacting_correction(k, s + end, out + end, n - end);
}

void cutoff_mode_sums(double eps, std::int64_t modes, const double* theta, double* sin_sum, double* cos_weighted,
                      std::size_t n) {
  const double q = std::exp(-eps);
  const __m256d qv = _mm256_set1_pd(q);
  const std::size_t end = vector_end(n);
  alignas(32) double lane_c[kLanes];
  alignas(32) double lane_s[kLanes];
  alignas(32) long double two_theta[kLanes];

  for (std::size_t i = 0; i < end; i += kLanes) {
    for (std::size_t l = 0; l < kLanes; ++l) {
      two_theta[l] = 2.0L * static_cast<long double>(theta[i + l]);
      lane_c[l] = static_cast<double>(std::cos(two_theta[l]));
      lane_s[l] = static_cast<double>(std::sin(two_theta[l]));
    }
    const __m256d rot_c = _mm256_load_pd(lane_c);
    const __m256d rot_s = _mm256_load_pd(lane_s);
    __m256d c = rot_c;
    __m256d s = rot_s;
    __m256d w = qv;
    __m256d acc_sin = _mm256_setzero_pd();
    __m256d acc_cos = _mm256_setzero_pd();
    for (std::int64_t mode = 1; mode <= modes; ++mode) {
      if (mode % kResyncInterval == 0) {
        for (std::size_t l = 0; l < kLanes; ++l) {
          const long double phase = two_theta[l] * static_cast<long double>(mode);
          lane_c[l] = static_cast<double>(std::cos(phase));
          lane_s[l] = static_cast<double>(std::sin(phase));
        }
        c = _mm256_load_pd(lane_c);
        s = _mm256_load_pd(lane_s);
        w = _mm256_set1_pd(std::exp(-eps * static_cast<double>(mode)));
      }
      const __m256d nd = _mm256_set1_pd(static_cast<double>(mode));
      acc_sin = _mm256_add_pd(acc_sin, _mm256_mul_pd(w, s));
      acc_cos = _mm256_add_pd(acc_cos, _mm256_mul_pd(_mm256_mul_pd(nd, w), c));
      const __m256d next_c = _mm256_sub_pd(_mm256_mul_pd(c, rot_c), _mm256_mul_pd(s, rot_s));
      const __m256d next_s = _mm256_add_pd(_mm256_mul_pd(s, rot_c), _mm256_mul_pd(c, rot_s));
      c = next_c;
      s = next_s;
      w = _mm256_mul_pd(w, qv);
    }
    _mm256_storeu_pd(sin_sum + i, acc_sin);
    _mm256_storeu_pd(cos_weighted + i, acc_cos);
  }
  scalar::cutoff_mode_sums(eps, modes, theta + end, sin_sum + end, cos_weighted + end, n - end);
}

}  // namespace casimir::kernels::avx2
