#pragma once

#include <numbers>

namespace casimir {

/// Plate separation or interval length L in natural units (hbar = c = 1).
class Geometry {
 public:
  explicit Geometry(double length);

  double length() const noexcept { return length_; }

 private:
  double length_;
};

/// A point between the boundaries, held as both the physical coordinate z in
/// [0, L] and the scaled angle theta = pi z / L in [0, pi].
class Position {
 public:
  static Position from_z(double z, const Geometry& g);
  static Position from_theta(double theta, const Geometry& g);

  double z() const noexcept { return z_; }
  double theta() const noexcept { return theta_; }

  /// True when theta is strictly inside (0, pi).
  bool interior() const noexcept { return theta_ > 0.0 && theta_ < std::numbers::pi; }

 private:
  Position(double z, double theta) : z_(z), theta_(theta) {}

  double z_;
  double theta_;
};

}  // namespace casimir
