#include "rodsphere/types.hpp"

#include <cmath>

namespace rodsphere {

namespace detail {

void require(bool cond, const char* what) {
  if (!cond)
    throw std::domain_error(what);
}

namespace {
bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }
bool finite_nonnegative(double v) { return std::isfinite(v) && v >= 0.0; }
} // namespace

} // namespace detail

double solid_sphere_inertia(double mass, double radius) {
  detail::require(detail::finite_positive(mass), "solid_sphere_inertia: mass must be > 0");
  detail::require(detail::finite_positive(radius), "solid_sphere_inertia: radius must be > 0");
  return 0.4 * mass * radius * radius;
}

SphereParams::SphereParams(double radius, double mass, double inertia, double gravity)
    : radius(radius), mass(mass), inertia(inertia), gravity(gravity) {
  detail::require(detail::finite_positive(radius), "SphereParams: radius must be > 0");
  detail::require(detail::finite_positive(mass), "SphereParams: mass must be > 0");
  detail::require(detail::finite_positive(inertia), "SphereParams: inertia must be > 0");
  detail::require(detail::finite_positive(gravity), "SphereParams: gravity must be > 0");
}

SphereParams SphereParams::solid(double radius, double mass, double gravity) {
  return SphereParams(radius, mass, solid_sphere_inertia(mass, radius), gravity);
}

PoleParams::PoleParams(double max_extension, double max_extension_speed,
                       double push_force, double lever_mass, double lever_arm)
    : max_extension(max_extension), max_extension_speed(max_extension_speed),
      push_force(push_force), lever_mass(lever_mass), lever_arm(lever_arm) {
  detail::require(detail::finite_positive(max_extension), "PoleParams: max_extension must be > 0");
  detail::require(detail::finite_positive(max_extension_speed),
                  "PoleParams: max_extension_speed must be > 0");
  detail::require(detail::finite_nonnegative(push_force), "PoleParams: push_force must be >= 0");
  detail::require(detail::finite_nonnegative(lever_mass), "PoleParams: lever_mass must be >= 0");
  detail::require(detail::finite_positive(lever_arm), "PoleParams: lever_arm must be > 0");
}

FrictionParams::FrictionParams(double mu_rs, double mu_s_pole)
    : mu_rs(mu_rs), mu_s_pole(mu_s_pole) {
  detail::require(std::isfinite(mu_rs) && mu_rs >= 0.0 && mu_rs <= 1.0,
                  "FrictionParams: mu_rs must be in [0, 1]");
  detail::require(std::isfinite(mu_s_pole) && mu_s_pole >= 0.0 && mu_s_pole <= 1.0,
                  "FrictionParams: mu_s_pole must be in [0, 1]");
}

bool MotionState::is_finite() const {
  return std::isfinite(zeta) && std::isfinite(omega) && std::isfinite(x) &&
         std::isfinite(v_h) && std::isfinite(z) && std::isfinite(v_v) &&
         std::isfinite(t);
}

bool AccelTriple::is_finite() const {
  return std::isfinite(a_v) && std::isfinite(a_h) && std::isfinite(omega_dot);
}

const char* to_string(LeverArmConvention c) {
  return c == LeverArmConvention::Verbatim ? "verbatim" : "consistent";
}

} // namespace rodsphere
