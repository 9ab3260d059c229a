#include <cstdlib>
#include <string>
#include <string_view>

#include "casimir/errors.hpp"
#include "casimir/kernels.hpp"
#include "kernel_impl.hpp"

namespace casimir::kernels {
namespace {

Backend detect() noexcept {
  Backend best = avx2_available() ? Backend::Avx2 : Backend::Scalar;
  if (const char* env = std::getenv("CASIMIR_KERNELS")) {
    const std::string_view requested(env);
    if (requested == "scalar") {
      return Backend::Scalar;
    }
    if (requested == "avx2") {
      return best;
    }
  }
  return best;
}

void require_same_size(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw PreconditionError(std::string(what) + ": input and output spans differ in length");
  }
}

Backend usable(Backend b) noexcept { return (b == Backend::Avx2 && !avx2_available()) ? Backend::Scalar : b; }

}  // namespace

bool avx2_available() noexcept {
#if defined(CASIMIR_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") != 0;
  return supported;
#else
  return false;
#endif
}

Backend active_backend() noexcept {
  static const Backend backend = detect();
  return backend;
}

std::string_view backend_name(Backend b) noexcept { return b == Backend::Avx2 ? "avx2" : "scalar"; }

#if defined(CASIMIR_HAVE_AVX2)
#define CASIMIR_DISPATCH(b, fn, ...)     \
  do {                                   \
    if (usable(b) == Backend::Avx2) {    \
      avx2::fn(__VA_ARGS__);             \
    } else {                             \
      scalar::fn(__VA_ARGS__);           \
    }                                    \
  } while (false)
#else
#define CASIMIR_DISPATCH(b, fn, ...) scalar::fn(__VA_ARGS__)
#endif

void scalar_zeta_densities(Backend b, double length, std::span<const double> sin_theta,
                           std::span<double> electric, std::span<double> magnetic) {
  require_same_size(sin_theta.size(), electric.size(), "scalar_zeta_densities");
  require_same_size(sin_theta.size(), magnetic.size(), "scalar_zeta_densities");
  const ZetaConstants k(length);
  CASIMIR_DISPATCH(b, zeta_densities, k, sin_theta.data(), electric.data(), magnetic.data(), sin_theta.size());
}

void scalar_cutoff_densities(Backend b, double length, double eps, std::span<const double> sin_theta,
                             std::span<double> electric, std::span<double> magnetic) {
  require_same_size(sin_theta.size(), electric.size(), "scalar_cutoff_densities");
  require_same_size(sin_theta.size(), magnetic.size(), "scalar_cutoff_densities");
  const CutoffConstants k(length, eps);
  CASIMIR_DISPATCH(b, cutoff_densities, k, sin_theta.data(), electric.data(), magnetic.data(), sin_theta.size());
}

void em_correlators(Backend b, double length, std::span<const double> sin_theta, std::span<double> e2,
                    std::span<double> b2) {
  require_same_size(sin_theta.size(), e2.size(), "em_correlators");
  require_same_size(sin_theta.size(), b2.size(), "em_correlators");
  const EmConstants k(length);
  CASIMIR_DISPATCH(b, em_correlators, k, sin_theta.data(), e2.data(), b2.data(), sin_theta.size());
}

void eh_correction(Backend b, double length, double alpha, double mass, std::span<const double> sin_theta,
                   std::span<double> out) {
  require_same_size(sin_theta.size(), out.size(), "eh_correction");
  const EhConstants k(length, alpha, mass);
  CASIMIR_DISPATCH(b, eh_correction, k, sin_theta.data(), out.data(), sin_theta.size());
}

void interacting_correction(Backend b, double length, double alpha, double mass,
                            std::span<const double> sin_theta, std::span<double> out) {
  require_same_size(sin_theta.size(), out.size(), "interacting_correction");
  const InteractingConstants k(length, alpha, mass);
  CASIMIR_DISPATCH(b, interacting_correction, k, sin_theta.data(), out.data(), sin_theta.size());
}

void cutoff_mode_sums(Backend b, double eps, std::int64_t modes, std::span<const double> theta,
                      std::span<double> sin_sum, std::span<double> cos_weighted) {
  require_same_size(theta.size(), sin_sum.size(), "cutoff_mode_sums");
  require_same_size(theta.size(), cos_weighted.size(), "cutoff_mode_sums");
  if (!(eps > 0.0) || modes < 0) {
    throw DomainError("cutoff_mode_sums: need eps > 0 and a non-negative mode count");
  }
  CASIMIR_DISPATCH(b, cutoff_mode_sums, eps, modes, theta.data(), sin_sum.data(), cos_weighted.data(),
                   theta.size());
}

#undef CASIMIR_DISPATCH

}  // namespace casimir::kernels
