#include "casimir/geometry.hpp"

#include <cmath>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {

Geometry::Geometry(double length) : length_(length) {
  if (!std::isfinite(length) || length <= 0.0) {
    throw DomainError("geometry: length must be positive and finite, got " + std::to_string(length));
  }
}

Position Position::from_z(double z, const Geometry& g) {
  const double L = g.length();
  if (!std::isfinite(z) || z < 0.0 || z > L) {
    throw DomainError("position: z = " + std::to_string(z) + " outside [0, L]");
  }
  // Snap the far end so that theta == pi exactly when z == L.
  const double theta = (z == L) ? std::numbers::pi : std::numbers::pi * z / L;
  return Position(z, theta);
}

Position Position::from_theta(double theta, const Geometry& g) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
    throw DomainError("position: theta = " + std::to_string(theta) + " outside [0, pi]");
  }
  const double z = (theta == std::numbers::pi) ? g.length() : theta * g.length() / std::numbers::pi;
  return Position(z, theta);
}

}  // namespace casimir
