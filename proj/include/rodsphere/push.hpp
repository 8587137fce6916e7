#pragma once
// Pushing-regime dynamics. Three contact models for a pole pushing
// against the ground behind the direction of travel:
//
//   obstacle  - the pole tip is blocked and cannot slip; ground grip is
//               parameterized by mu_rs alone.
//   full slip - frictionless ground, the pole tip slides freely; the
//               push can only spin the sphere, never translate it.
//   friction  - variable friction at both the pole tip (mu_s_pole) and
//               the sphere-ground contact (mu_rs); reduces to the two
//               cases above at the coefficient extremes.
//
// All pushing operations take zeta in [0, pi/2): zeta = 0 is a vertical
// pole, and ground contact is geometrically impossible at pi/2.

#include <variant>

#include "rodsphere/types.hpp"

namespace rodsphere {

/// Reaction split when the pole tip is blocked by an obstacle:
/// radial = F sin(zeta), tangential = F cos(zeta).
ForceSplit split_obstacle_reaction(double push_force, double zeta);

/// Free-tip split of the push force: radial (into the ground)
/// = F cos(zeta), tangential (slip direction) = F sin(zeta).
ForceSplit split_push_force(double push_force, double zeta);

/// Accelerations for the blocked-tip regime. The ground contact drives
/// rotation through mu_rs; the remainder slides.
/// omega_dot = r mu_rs sin(zeta) F / I
/// a_h = sin(zeta) F (1 - mu_rs) / m + 2 pi r^2 mu_rs sin(zeta) F / I
/// a_v = 0 (this regime has no vertical branch).
AccelTriple obstacle_accels(double zeta, double push_force,
                            const SphereParams& sphere, double mu_rs);

/// Accelerations on a frictionless surface: no translation at all, only
/// the lever torque (arm r / cos(zeta)) spinning the sphere.
AccelTriple full_slip_accels(double zeta, double push_force,
                             const SphereParams& sphere);

/// Friction force at the pole tip: F_f = mu_s_pole sin(zeta) F.
double pole_friction(double push_force, double zeta, double mu_s_pole);

/// Residual lever force perpendicular to the pole after tip friction:
/// F_e = cos(zeta) sin(zeta) F (1 - mu_s_pole).
double lever_force(double push_force, double zeta, double mu_s_pole);

/// Accelerations for the variable-friction regime, the combination of
/// the obstacle and full-slip systems.
///
/// The vertical branch is shared by both conventions:
///   a_v = step(cos(zeta) F / m - g) * (cos(zeta) F / m - g), step(0) = 0.
///
/// Consistent uses the lever arm r / cos(zeta) for the lever torque:
///   tau = r sin(zeta) F (mu_rs mu_s_pole + 1 - mu_s_pole)
///   omega_dot = tau / I
///   a_h = mu_rs 2 pi r omega_dot + (1 - mu_rs) mu_s_pole sin(zeta) F / m
/// which reduces exactly to the obstacle system at (1, 1) and the
/// full-slip system at (0, 0).
///
/// Verbatim keeps the combined-torque line with lever arm cos(zeta) / r:
///   omega_dot = sin(zeta) F / I (mu_rs mu_s_pole r + cos^2(zeta) (1 - mu_s_pole) / r)
///   a_h = sin(zeta) F / I (2 pi mu_rs (mu_rs mu_s_pole r^2 + cos^2(zeta) (1 - mu_s_pole)))
///         + (1 - mu_rs) mu_s_pole sin(zeta) F / m
/// in which the (0, 0) reduction does NOT recover the full-slip system;
/// the deviation is surfaced by analysis::verify_reductions.
AccelTriple friction_push_accels(double zeta, double push_force,
                                 const SphereParams& sphere,
                                 const FrictionParams& friction,
                                 LeverArmConvention convention);

struct ObstaclePush {
  double mu_rs = 1.0;
};
struct FullSlipPush {};
struct FrictionPush {
  FrictionParams friction;
};

/// Regime selector bundling the contact mode with the lever-arm
/// convention, dispatching to the three acceleration operations above.
struct PushRegime {
  std::variant<ObstaclePush, FullSlipPush, FrictionPush> mode;
  LeverArmConvention convention = LeverArmConvention::Consistent;

  AccelTriple accels(double zeta, double push_force, const SphereParams& sphere) const;
};

} // namespace rodsphere
