#include "rodsphere/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace rodsphere {

namespace {
constexpr double half_pi = std::numbers::pi / 2.0;
} // namespace

const char* to_string(EnvelopeLimit limit) {
  return limit == EnvelopeLimit::ExtensionSpeed ? "extension_speed" : "max_length";
}

double pole_extension_at(double zeta, double radius) {
  detail::require(std::isfinite(radius) && radius > 0.0,
                  "pole_extension_at: radius must be > 0");
  detail::require(std::isfinite(zeta) && zeta >= 0.0 && zeta < half_pi,
                  "pole_extension_at: zeta must be in [0, pi/2)");
  return radius * (1.0 / std::cos(zeta) - 1.0);
}

double max_reach_angle(double max_extension, double radius) {
  detail::require(std::isfinite(max_extension) && max_extension > 0.0,
                  "max_reach_angle: max_extension must be > 0");
  detail::require(std::isfinite(radius) && radius > 0.0,
                  "max_reach_angle: radius must be > 0");
  return std::acos(radius / (radius + max_extension));
}

double max_angular_rate(double zeta, double max_extension_speed, double radius) {
  detail::require(std::isfinite(max_extension_speed) && max_extension_speed > 0.0,
                  "max_angular_rate: max_extension_speed must be > 0");
  detail::require(std::isfinite(radius) && radius > 0.0,
                  "max_angular_rate: radius must be > 0");
  detail::require(std::isfinite(zeta) && zeta > 0.0 && zeta < half_pi,
                  "max_angular_rate: zeta must be in (0, pi/2)");
  const double c = std::cos(zeta);
  return max_extension_speed * c * c / (radius * std::sin(zeta));
}

std::vector<EnvelopePoint> geometric_envelope(const PoleParams& pole,
                                              const SphereParams& sphere,
                                              std::span<const double> zeta_grid) {
  const double reach = max_reach_angle(pole.max_extension, sphere.radius);
  std::vector<EnvelopePoint> envelope;
  envelope.reserve(zeta_grid.size());
  double prev = -std::numeric_limits<double>::infinity();
  for (double zeta : zeta_grid) {
    if (!(zeta >= prev))
      throw std::invalid_argument("geometric_envelope: grid must be sorted ascending");
    detail::require(std::isfinite(zeta) && zeta >= 0.0 && zeta < half_pi,
                    "geometric_envelope: grid angles must be in [0, pi/2)");
    prev = zeta;

    EnvelopePoint p;
    p.zeta = zeta;
    if (zeta > reach) {
      p.zeta_dot_max = 0.0;
      p.limited_by = EnvelopeLimit::MaxLength;
    } else {
      p.zeta_dot_max = zeta == 0.0
                           ? std::numeric_limits<double>::infinity()
                           : max_angular_rate(zeta, pole.max_extension_speed, sphere.radius);
      p.limited_by = EnvelopeLimit::ExtensionSpeed;
    }
    envelope.push_back(p);
  }
  return envelope;
}

} // namespace rodsphere
