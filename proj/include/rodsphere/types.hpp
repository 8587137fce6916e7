#pragma once
// Shared parameter, state and result types for the rod-driven sphere
// dynamics library. All angles are radians, all quantities SI.

#include <cmath>
#include <stdexcept>

namespace rodsphere {

inline constexpr double earth_gravity = 9.81; // m/s^2
inline constexpr double moon_gravity = 1.62;  // m/s^2

/// Moment of inertia of a homogeneous solid sphere about an axis through
/// its center, (2/5) m r^2. Throws std::domain_error on non-positive input.
double solid_sphere_inertia(double mass, double radius);

/// Shell geometry and mass properties of the robot.
///
/// The moment of inertia is kept scalar (rolling axis only); values are
/// treated as immutable once constructed. The constructor rejects
/// non-positive or non-finite fields.
struct SphereParams {
  double radius;  ///< shell radius [m]
  double mass;    ///< total robot mass [kg]
  double inertia; ///< moment of inertia about the rolling axis [kg m^2]
  double gravity; ///< gravitational acceleration [m/s^2]

  SphereParams(double radius, double mass, double inertia,
               double gravity = earth_gravity);

  /// Same, with the inertia of a homogeneous solid sphere.
  static SphereParams solid(double radius, double mass,
                            double gravity = earth_gravity);
};

/// Telescopic pole actuator parameters.
///
/// lever_arm is the distance from the sphere center to the point mass of
/// the extended poles; it must exceed the shell radius, which is checked
/// by the operations that use both parameter sets together.
struct PoleParams {
  double max_extension;       ///< maximum extension beyond the shell [m]
  double max_extension_speed; ///< maximum extension speed [m/s]
  double push_force;          ///< force magnitude applied by the pole [N]
  double lever_mass;          ///< point mass of the extended poles [kg]
  double lever_arm;           ///< center-to-pole-mass distance [m]

  PoleParams(double max_extension, double max_extension_speed,
             double push_force, double lever_mass, double lever_arm);
};

/// The two friction coefficients governing every contact regime.
struct FrictionParams {
  /// Combined sphere-ground friction plus rolling-resistance coefficient,
  /// in [0, 1]. 1 means full grip with no slip.
  double mu_rs;
  /// Static friction coefficient between pole tip and ground, in [0, 1].
  double mu_s_pole;

  FrictionParams(double mu_rs, double mu_s_pole);
};

/// Instantaneous kinematic state. zeta is the pole/contact angle, omega
/// its rate; (x, z) the planar position of the sphere center.
struct MotionState {
  double zeta = 0.0;  ///< pole angle [rad]
  double omega = 0.0; ///< angular velocity d(zeta)/dt [rad/s]
  double x = 0.0;     ///< horizontal position [m]
  double v_h = 0.0;   ///< horizontal velocity [m/s]
  double z = 0.0;     ///< vertical position [m]
  double v_v = 0.0;   ///< vertical velocity [m/s]
  double t = 0.0;     ///< time [s]

  bool is_finite() const;
};

/// Right-hand side of every regime's dynamic system.
struct AccelTriple {
  double a_v = 0.0;       ///< vertical acceleration [m/s^2]
  double a_h = 0.0;       ///< horizontal acceleration [m/s^2]
  double omega_dot = 0.0; ///< angular acceleration [rad/s^2]

  bool is_finite() const;
};

/// A force decomposed along/perpendicular to the pole axis. Which
/// physical direction "radial" and "tangential" map to depends on the
/// regime; every split preserves the input magnitude.
struct ForceSplit {
  double radial = 0.0;     // [N]
  double tangential = 0.0; // [N]

  double magnitude() const { return std::hypot(radial, tangential); }
};

/// Lever-arm bookkeeping used by the variable-friction pushing system.
///
/// Verbatim reproduces the combined-torque line exactly as printed in the
/// source model (lever torque with arm cos(zeta)/r_m). Consistent restores
/// the arm r_m/cos(zeta) used by the slip regime's torque equation, which
/// makes both friction-limit reductions hold exactly. Consistent is the
/// default.
enum class LeverArmConvention { Verbatim, Consistent };

const char* to_string(LeverArmConvention c);

namespace detail {
// throws std::domain_error when cond is false
void require(bool cond, const char* what);
} // namespace detail

} // namespace rodsphere
