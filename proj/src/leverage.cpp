#include "rodsphere/leverage.hpp"

#include <cmath>
#include <numbers>

namespace rodsphere {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

void check_leverage_zeta(double zeta) {
  detail::require(std::isfinite(zeta) && zeta > pi && zeta < two_pi,
                  "leverage: zeta must be in (pi, 2 pi)");
}

void check_mu(double mu) {
  detail::require(std::isfinite(mu) && mu >= 0.0 && mu <= 1.0,
                  "leverage: mu_rs must be in [0, 1]");
}

void check_lever_geometry(const SphereParams& sphere, const PoleParams& pole) {
  detail::require(pole.lever_arm > sphere.radius,
                  "leverage: lever_arm must exceed the shell radius");
}

} // namespace

ForceSplit split_gravity(double gravity_force, double zeta) {
  detail::require(std::isfinite(gravity_force) && gravity_force >= 0.0,
                  "split_gravity: gravity_force must be >= 0");
  check_leverage_zeta(zeta);
  return {gravity_force * -std::cos(zeta), gravity_force * -std::sin(zeta)};
}

LeverageTorques leverage_torques(double zeta, double lever_mass,
                                 const SphereParams& sphere,
                                 const PoleParams& pole, double mu_rs) {
  check_leverage_zeta(zeta);
  check_mu(mu_rs);
  check_lever_geometry(sphere, pole);
  detail::require(std::isfinite(lever_mass) && lever_mass >= 0.0,
                  "leverage_torques: lever_mass must be >= 0");
  const double f_g = lever_mass * sphere.gravity;
  const double sin_z = std::sin(zeta);
  const double cos_z = std::cos(zeta);
  LeverageTorques torques;
  torques.tau_n = pole.lever_arm * (-sin_z) * f_g;
  torques.tau_fr2 = sphere.radius * mu_rs * sin_z * cos_z * f_g;
  torques.tau_r = torques.tau_n - torques.tau_fr2;
  return torques;
}

AccelTriple leverage_accels(double zeta, const SphereParams& sphere,
                            const PoleParams& pole, double mu_rs) {
  check_leverage_zeta(zeta);
  check_mu(mu_rs);
  check_lever_geometry(sphere, pole);
  const double f_g = pole.lever_mass * sphere.gravity;
  const double sin_z = std::sin(zeta);
  const double cos_z = std::cos(zeta);
  const double arm = pole.lever_arm + sphere.radius * mu_rs * cos_z;
  const double omega_dot = -sin_z * f_g / sphere.inertia * arm;
  const double a_direct =
      sin_z * cos_z * sphere.gravity * (mu_rs - 1.0) * pole.lever_mass / sphere.mass;
  // rotation-induced translation, linear in the grip coefficient
  const double a_rotation = mu_rs * two_pi * omega_dot;
  return {0.0, a_direct + a_rotation, omega_dot};
}

bool forward_guarantee(double zeta, double mu_rs, const SphereParams& sphere,
                       const PoleParams& pole) {
  detail::require(std::isfinite(zeta) && zeta >= pi && zeta < two_pi,
                  "forward_guarantee: zeta must be in [pi, 2 pi)");
  check_mu(mu_rs);
  check_lever_geometry(sphere, pole);
  const double cos_z = std::cos(zeta);
  const double lhs =
      mu_rs * two_pi / sphere.inertia * (pole.lever_arm + sphere.radius * mu_rs * cos_z);
  const double rhs = cos_z * (mu_rs - 1.0) / sphere.mass;
  return lhs >= rhs;
}

double min_friction_for_forward(const SphereParams& sphere, const PoleParams& pole) {
  check_lever_geometry(sphere, pole);
  // margin of the forward condition at the worst case zeta = pi
  const auto margin = [&](double mu) {
    return mu * two_pi / sphere.inertia * (pole.lever_arm - sphere.radius * mu) -
           (1.0 - mu) / sphere.mass;
  };
  if (margin(0.0) >= 0.0)
    return 0.0;
  if (margin(1.0) < 0.0)
    throw std::runtime_error(
        "min_friction_for_forward: no coefficient in [0, 1] guarantees forward motion");
  double lo = 0.0; // margin < 0
  double hi = 1.0; // margin >= 0
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (margin(mid) >= 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace rodsphere
