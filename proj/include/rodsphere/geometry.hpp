#pragma once
// Pole-extension geometry: how far the pole must extend to touch the
// ground at a contact angle zeta, how large zeta can get before the pole
// runs out of length, and how fast zeta can change given a bounded
// extension speed. Independent of forces.

#include <span>
#include <vector>

#include "rodsphere/types.hpp"

namespace rodsphere {

enum class EnvelopeLimit { ExtensionSpeed, MaxLength };

const char* to_string(EnvelopeLimit limit);

/// One point of the geometric feasibility envelope.
struct EnvelopePoint {
  double zeta = 0.0;         ///< contact angle [rad]
  double zeta_dot_max = 0.0; ///< fastest achievable angular rate [rad/s]
  EnvelopeLimit limited_by = EnvelopeLimit::ExtensionSpeed;
};

/// Extension l(zeta) = r (1/cos(zeta) - 1) needed for ground contact at
/// angle zeta, measured from the shell surface along the pole axis.
/// Domain [0, pi/2); the required length diverges at pi/2.
double pole_extension_at(double zeta, double radius);

/// Largest contact angle reachable with extension l: acos(r / (r + l)).
/// Inverse of pole_extension_at.
double max_reach_angle(double max_extension, double radius);

/// Fastest angular rate sustainable at angle zeta when the extension
/// speed is bounded: zeta_dot = l_dot_max cos^2(zeta) / (r sin(zeta)).
/// Domain (0, pi/2); the rate is unbounded as zeta -> 0, which is treated
/// as a domain error so every returned value is finite.
double max_angular_rate(double zeta, double max_extension_speed, double radius);

/// Envelope over an ascending grid of angles in [0, pi/2). Points beyond
/// the reach limit carry zeta_dot_max = 0 tagged MaxLength; points inside
/// carry the extension-speed limit. At zeta = 0 the extension-speed limit
/// is +infinity.
std::vector<EnvelopePoint> geometric_envelope(const PoleParams& pole,
                                              const SphereParams& sphere,
                                              std::span<const double> zeta_grid);

} // namespace rodsphere
