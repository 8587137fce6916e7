#pragma once
// Leverage-regime dynamics: rods extended on the travel side reduce to a
// point mass at distance lever_arm from the center, and gravity on that
// mass rolls the sphere. Valid for zeta in (pi, 2 pi), the half turn on
// which the lever mass sits ahead of the contact point.

#include "rodsphere/types.hpp"

namespace rodsphere {

/// Torque balance of the leverage regime. tau_r = tau_n - tau_fr2 holds
/// exactly by construction.
struct LeverageTorques {
  double tau_n = 0.0;   ///< driving torque from the lever mass [N m]
  double tau_fr2 = 0.0; ///< counter-torque from ground friction [N m]
  double tau_r = 0.0;   ///< resulting torque [N m]
};

/// Gravity on the lever mass split relative to the lever axis:
/// radial = -F_g cos(zeta), tangential = -F_g sin(zeta).
ForceSplit split_gravity(double gravity_force, double zeta);

/// tau_n = lever_arm (-sin(zeta)) F_g,
/// tau_fr2 = r mu_rs sin(zeta) cos(zeta) F_g, with F_g = lever_mass g.
/// tau_r is positive on the whole domain whenever lever_arm > r.
LeverageTorques leverage_torques(double zeta, double lever_mass,
                                 const SphereParams& sphere,
                                 const PoleParams& pole, double mu_rs);

/// Full leverage system:
///   a_v = 0
///   omega_dot = -sin(zeta) F_g / I (lever_arm + r mu_rs cos(zeta))
///   a_h = sin(zeta) cos(zeta) g (mu_rs - 1) lever_mass / mass
///         + mu_rs 2 pi omega_dot
/// a_h > 0 means acceleration in the intended rolling direction.
AccelTriple leverage_accels(double zeta, const SphereParams& sphere,
                            const PoleParams& pole, double mu_rs);

/// Whether a_h points in the intended direction at this angle:
///   mu_rs 2 pi / I (lever_arm + r mu_rs cos(zeta)) >= cos(zeta) (mu_rs - 1) / m.
/// Accepts zeta in [pi, 2 pi); zeta = pi is the worst case of the
/// condition and is included so the threshold itself can be checked.
bool forward_guarantee(double zeta, double mu_rs, const SphereParams& sphere,
                       const PoleParams& pole);

/// Smallest mu_rs in [0, 1] for which forward_guarantee holds at the
/// worst-case angle zeta = pi, found by bisection to 1e-9. The result
/// depends only on the geometry, inertia and robot mass; gravity and the
/// lever mass cancel.
/// Throws std::runtime_error if no coefficient in [0, 1] suffices.
double min_friction_for_forward(const SphereParams& sphere, const PoleParams& pole);

} // namespace rodsphere
