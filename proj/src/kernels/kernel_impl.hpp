#pragma once

// Per-backend entry points and the constants both backends share. Internal.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>

namespace casimir::kernels {

inline constexpr std::int64_t kResyncInterval = 64;

struct ZetaConstants {
  double bulk;      // -pi / 48L^2
  double position;  // pi / 16L^2
  explicit ZetaConstants(double L) {
    const double L2 = L * L;
    bulk = -std::numbers::pi / (48.0 * L2);
    position = std::numbers::pi / (16.0 * L2);
  }
};

struct CutoffConstants {
  double bulk;             // -pi / 48L^2
  double position;         // -pi / 8L^2
  double omq2;             // (1 - q)^2
  double four_q;           // 4q
  double two_one_plus_q2;  // 2 (1 + q^2)
  double two_q;            // 2q
  CutoffConstants(double L, double eps) {
    const double L2 = L * L;
    const double q = std::exp(-eps);
    const double omq = -std::expm1(-eps);
    bulk = -std::numbers::pi / (48.0 * L2);
    position = -std::numbers::pi / (8.0 * L2);
    omq2 = omq * omq;
    four_q = 4.0 * q;
    two_one_plus_q2 = 2.0 * (1.0 + q * q);
    two_q = 2.0 * q;
  }
};

struct EmConstants {
  double prefactor;  // -pi^2 / 16L^4
  double inv45;
  explicit EmConstants(double L) {
    const double L2 = L * L;
    prefactor = -(std::numbers::pi * std::numbers::pi) / (16.0 * L2 * L2);
    inv45 = 1.0 / 45.0;
  }
};

struct EhConstants {
  double prefactor;  // -alpha^2 pi^4 / (17280 m^4 L^8)
  double c11;        // 11 / 225
  EhConstants(double L, double alpha, double m) {
    const double L4 = (L * L) * (L * L);
    const double m4 = (m * m) * (m * m);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    prefactor = -alpha * alpha * (pi2 * pi2) / (17280.0 * m4 * L4 * L4);
    c11 = 11.0 / 225.0;
  }
};

struct InteractingConstants {
  double prefactor;  // -alpha pi^2 / (8 m^2 L^4)
  double c18;        // 1 / 18
  InteractingConstants(double L, double alpha, double m) {
    const double L4 = (L * L) * (L * L);
    prefactor = -alpha * std::numbers::pi * std::numbers::pi / (8.0 * m * m * L4);
    c18 = 1.0 / 18.0;
  }
};

namespace scalar {
void zeta_densities(const ZetaConstants& k, const double* s, double* e, double* m, std::size_t n);
void cutoff_densities(const CutoffConstants& k, const double* s, double* e, double* m, std::size_t n);
void em_correlators(const EmConstants& k, const double* s, double* e2, double* b2, std::size_t n);
void eh_correction(const EhConstants& k, const double* s, double* out, std::size_t n);
void interacting_correction(const InteractingConstants& k, const double* s, double* out, std::size_t n);
void cutoff_mode_sums(double eps, std::int64_t modes, const double* theta, double* sin_sum, double* cos_weighted,
                      std::size_t n);
}  // namespace scalar

#if defined(CASIMIR_HAVE_AVX2)
namespace avx2 {
void zeta_densities(const ZetaConstants& k, const double* s, double* e, double* m, std::size_t n);
void cutoff_densities(const CutoffConstants& k, const double* s, double* e, double* m, std::size_t n);
void em_correlators(const EmConstants& k, const double* s, double* e2, double* b2, std::size_t n);
void eh_correction(const EhConstants& k, const double* s, double* out, std::size_t n);
void interacting_correction(const InteractingConstants& k, const double* s, double* out, std::size_t n);
void cutoff_mode_sums(double eps, std::int64_t modes, const double* theta, double* sin_sum, double* cos_weighted,
                      std::size_t n);
}  // namespace avx2
#endif

}  // namespace casimir::kernels
