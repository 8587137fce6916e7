#include "rodsphere/push.hpp"

#include <cmath>
#include <numbers>

namespace rodsphere {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double half_pi = std::numbers::pi / 2.0;

void check_push_domain(double push_force, double zeta) {
  detail::require(std::isfinite(push_force) && push_force >= 0.0,
                  "push: push_force must be >= 0");
  detail::require(std::isfinite(zeta) && zeta >= 0.0 && zeta < half_pi,
                  "push: zeta must be in [0, pi/2)");
}

void check_mu(double mu, const char* what) {
  detail::require(std::isfinite(mu) && mu >= 0.0 && mu <= 1.0, what);
}

} // namespace

ForceSplit split_obstacle_reaction(double push_force, double zeta) {
  check_push_domain(push_force, zeta);
  return {push_force * std::sin(zeta), push_force * std::cos(zeta)};
}

ForceSplit split_push_force(double push_force, double zeta) {
  check_push_domain(push_force, zeta);
  return {push_force * std::cos(zeta), push_force * std::sin(zeta)};
}

AccelTriple obstacle_accels(double zeta, double push_force,
                            const SphereParams& sphere, double mu_rs) {
  check_push_domain(push_force, zeta);
  check_mu(mu_rs, "obstacle_accels: mu_rs must be in [0, 1]");
  const double drive = std::sin(zeta) * push_force;
  const double omega_dot = sphere.radius * mu_rs * drive / sphere.inertia;
  const double a_direct = drive * (1.0 - mu_rs) / sphere.mass;
  const double a_rotation =
      two_pi * sphere.radius * sphere.radius * mu_rs * drive / sphere.inertia;
  return {0.0, a_direct + a_rotation, omega_dot};
}

AccelTriple full_slip_accels(double zeta, double push_force, const SphereParams& sphere) {
  check_push_domain(push_force, zeta);
  // F_e = cos(zeta) F_s, torque arm l(zeta) + r = r / cos(zeta)
  const double f_e = lever_force(push_force, zeta, 0.0);
  const double omega_dot = (sphere.radius / std::cos(zeta)) * f_e / sphere.inertia;
  return {0.0, 0.0, omega_dot};
}

double pole_friction(double push_force, double zeta, double mu_s_pole) {
  check_push_domain(push_force, zeta);
  check_mu(mu_s_pole, "pole_friction: mu_s_pole must be in [0, 1]");
  return mu_s_pole * std::sin(zeta) * push_force;
}

double lever_force(double push_force, double zeta, double mu_s_pole) {
  check_push_domain(push_force, zeta);
  check_mu(mu_s_pole, "lever_force: mu_s_pole must be in [0, 1]");
  return std::cos(zeta) * (std::sin(zeta) * push_force) * (1.0 - mu_s_pole);
}

AccelTriple friction_push_accels(double zeta, double push_force,
                                 const SphereParams& sphere,
                                 const FrictionParams& friction,
                                 LeverArmConvention convention) {
  check_push_domain(push_force, zeta);
  const double sin_z = std::sin(zeta);
  const double cos_z = std::cos(zeta);
  const double slip_force = sin_z * push_force; // F_s
  const double mu_rs = friction.mu_rs;
  const double mu_pole = friction.mu_s_pole;

  // vertical branch: only active when the push out-lifts gravity
  const double lift = cos_z * push_force / sphere.mass - sphere.gravity;
  const double a_v = lift > 0.0 ? lift : 0.0;

  double a_h = 0.0;
  double omega_dot = 0.0;
  if (convention == LeverArmConvention::Verbatim) {
    const double base = sin_z * push_force / sphere.inertia;
    omega_dot = base * (mu_rs * mu_pole * sphere.radius +
                        cos_z * cos_z * (1.0 - mu_pole) / sphere.radius);
    a_h = base * (two_pi * mu_rs *
                  (mu_rs * mu_pole * sphere.radius * sphere.radius +
                   cos_z * cos_z * (1.0 - mu_pole))) +
          (1.0 - mu_rs) * mu_pole * slip_force / sphere.mass;
  } else {
    // tip-friction torque (arm r) plus lever torque (arm r / cos(zeta))
    const double tau = sphere.radius * slip_force * (mu_rs * mu_pole + 1.0 - mu_pole);
    omega_dot = tau / sphere.inertia;
    a_h = mu_rs * two_pi * sphere.radius * omega_dot +
          (1.0 - mu_rs) * mu_pole * slip_force / sphere.mass;
  }
  return {a_v, a_h, omega_dot};
}

AccelTriple PushRegime::accels(double zeta, double push_force,
                               const SphereParams& sphere) const {
  const LeverArmConvention conv = convention;
  return std::visit(
      [&](const auto& m) -> AccelTriple {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ObstaclePush>)
          return obstacle_accels(zeta, push_force, sphere, m.mu_rs);
        else if constexpr (std::is_same_v<T, FullSlipPush>)
          return full_slip_accels(zeta, push_force, sphere);
        else
          return friction_push_accels(zeta, push_force, sphere, m.friction, conv);
      },
      mode);
}

} // namespace rodsphere
