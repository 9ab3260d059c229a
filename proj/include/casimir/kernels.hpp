#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Batch evaluation of the closed-form densities over a grid of angles.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant chosen at runtime. Both variants perform the same IEEE operations in
// the same order (no FMA contraction), so their outputs are bit-identical.
//
// Inputs are sin(theta) values rather than theta; callers compute them once
// with the standard library. All spans of one call must have equal length.
namespace casimir::kernels {

enum class Backend { Scalar, Avx2 };

/// True if the AVX2 variant was compiled in and the CPU supports it.
bool avx2_available() noexcept;

/// The backend used by the dispatching entry points. Defaults to the best
/// available; the environment variable CASIMIR_KERNELS=scalar|avx2 overrides
/// (an unavailable request falls back to scalar).
Backend active_backend() noexcept;

std::string_view backend_name(Backend b) noexcept;

/// Scalar-field densities, zeta scheme:
///   electric = -pi/48L^2 + (pi/16L^2)/sin^2,  magnetic = -pi/48L^2 - (pi/16L^2)/sin^2.
void scalar_zeta_densities(Backend b, double length, std::span<const double> sin_theta,
                           std::span<double> electric, std::span<double> magnetic);

/// Scalar-field densities, exponential cutoff eps (bulk term at its zeta value).
void scalar_cutoff_densities(Backend b, double length, double eps, std::span<const double> sin_theta,
                             std::span<double> electric, std::span<double> magnetic);

/// <E^2> and <B^2> between plates.
void em_correlators(Backend b, double length, std::span<const double> sin_theta, std::span<double> e2,
                    std::span<double> b2);

/// Full Euler-Heisenberg correction density (constant plus 9F^2 part).
void eh_correction(Backend b, double length, double alpha, double mass, std::span<const double> sin_theta,
                   std::span<double> out);

/// alpha-dependent part of the interacting scalar density.
void interacting_correction(Backend b, double length, double alpha, double mass,
                            std::span<const double> sin_theta, std::span<double> out);

/// Truncated cutoff mode sums, one per angle:
///   sin_sum[i]      = sum_{n=1}^{modes} e^{-eps n} sin(2 n theta_i)
///   cos_weighted[i] = sum_{n=1}^{modes} n e^{-eps n} cos(2 n theta_i)
/// The phase is advanced by complex rotation and re-anchored to libm values
/// every 64 modes.
void cutoff_mode_sums(Backend b, double eps, std::int64_t modes, std::span<const double> theta,
                      std::span<double> sin_sum, std::span<double> cos_weighted);

}  // namespace casimir::kernels
