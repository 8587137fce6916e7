#include "rodsphere/integrate.hpp"

#include <algorithm>
#include <cmath>

namespace rodsphere {

const char* to_string(IntegrationMethod method) {
  return method == IntegrationMethod::RK4 ? "rk4" : "semi_implicit_euler";
}

IntegratorSettings::IntegratorSettings(double dt, double t_end, IntegrationMethod method)
    : dt(dt), t_end(t_end), method(method) {
  detail::require(std::isfinite(dt) && dt > 0.0, "IntegratorSettings: dt must be > 0");
  detail::require(std::isfinite(t_end) && t_end > 0.0, "IntegratorSettings: t_end must be > 0");
  detail::require(dt <= t_end, "IntegratorSettings: dt must not exceed t_end");
}

AccelTriple constant_A_rhs(double A, const MotionState& state) {
  detail::require(std::isfinite(A) && A >= 0.0, "constant_A_rhs: A must be >= 0");
  return {0.0, 0.0, A * std::sin(state.zeta)};
}

namespace {

struct Deriv {
  double zeta, omega, x, v_h, z, v_v;
};

Deriv eval(const RhsFn& rhs, const MotionState& s) {
  const AccelTriple acc = rhs(s);
  return {s.omega, acc.omega_dot, s.v_h, acc.a_h, s.v_v, acc.a_v};
}

MotionState shifted(const MotionState& s, const Deriv& d, double h, double t) {
  MotionState out;
  out.zeta = s.zeta + h * d.zeta;
  out.omega = s.omega + h * d.omega;
  out.x = s.x + h * d.x;
  out.v_h = s.v_h + h * d.v_h;
  out.z = s.z + h * d.z;
  out.v_v = s.v_v + h * d.v_v;
  out.t = t;
  return out;
}

MotionState rk4_step(const RhsFn& rhs, const MotionState& s, double dt) {
  const double t_mid = s.t + 0.5 * dt;
  const double t_next = s.t + dt;
  const Deriv k1 = eval(rhs, s);
  const Deriv k2 = eval(rhs, shifted(s, k1, 0.5 * dt, t_mid));
  const Deriv k3 = eval(rhs, shifted(s, k2, 0.5 * dt, t_mid));
  const Deriv k4 = eval(rhs, shifted(s, k3, dt, t_next));
  const double w = dt / 6.0;
  MotionState out;
  out.zeta = s.zeta + w * (k1.zeta + 2.0 * k2.zeta + 2.0 * k3.zeta + k4.zeta);
  out.omega = s.omega + w * (k1.omega + 2.0 * k2.omega + 2.0 * k3.omega + k4.omega);
  out.x = s.x + w * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
  out.v_h = s.v_h + w * (k1.v_h + 2.0 * k2.v_h + 2.0 * k3.v_h + k4.v_h);
  out.z = s.z + w * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
  out.v_v = s.v_v + w * (k1.v_v + 2.0 * k2.v_v + 2.0 * k3.v_v + k4.v_v);
  out.t = t_next;
  return out;
}

MotionState semi_implicit_euler_step(const RhsFn& rhs, const MotionState& s, double dt) {
  const AccelTriple acc = rhs(s);
  MotionState out = s;
  out.omega = s.omega + dt * acc.omega_dot;
  out.v_h = s.v_h + dt * acc.a_h;
  out.v_v = s.v_v + dt * acc.a_v;
  out.zeta = s.zeta + dt * out.omega;
  out.x = s.x + dt * out.v_h;
  out.z = s.z + dt * out.v_v;
  out.t = s.t + dt;
  return out;
}

} // namespace

IntegrationResult integrate(const RhsFn& rhs, const MotionState& initial,
                            const IntegratorSettings& settings) {
  detail::require(initial.is_finite(), "integrate: initial state must be finite");
  const auto steps =
      static_cast<std::size_t>(std::floor(settings.t_end / settings.dt + 1e-9));

  IntegrationResult result;
  result.trajectory.dt = settings.dt;
  result.trajectory.samples.reserve(steps + 1);
  result.trajectory.samples.push_back(initial);

  MotionState state = initial;
  for (std::size_t i = 0; i < steps; ++i) {
    MotionState next;
    try {
      next = settings.method == IntegrationMethod::RK4
                 ? rk4_step(rhs, state, settings.dt)
                 : semi_implicit_euler_step(rhs, state, settings.dt);
    } catch (const std::domain_error& e) {
      result.diverged = true;
      result.message = std::string("state left the regime domain at t=") +
                       std::to_string(state.t) + ": " + e.what();
      return result;
    }
    next.t = initial.t + static_cast<double>(i + 1) * settings.dt;
    if (!next.is_finite()) {
      result.diverged = true;
      result.message =
          "non-finite state encountered at t=" + std::to_string(next.t);
      return result;
    }
    state = next;
    result.trajectory.samples.push_back(state);
  }
  return result;
}

Trajectory clip_to_envelope(const Trajectory& trajectory,
                            std::span<const EnvelopePoint> envelope) {
  if (envelope.empty())
    throw std::invalid_argument("clip_to_envelope: empty envelope");
  for (std::size_t i = 1; i < envelope.size(); ++i)
    if (!(envelope[i].zeta >= envelope[i - 1].zeta))
      throw std::invalid_argument("clip_to_envelope: envelope must be sorted by zeta");

  Trajectory clipped;
  clipped.dt = trajectory.dt;
  clipped.samples.reserve(trajectory.samples.size());

  for (const MotionState& sample : trajectory.samples) {
    const double zeta = sample.zeta;
    if (zeta < envelope.front().zeta || zeta > envelope.back().zeta)
      throw std::invalid_argument(
          "clip_to_envelope: envelope does not cover the trajectory's zeta range");

    const auto right = std::lower_bound(
        envelope.begin(), envelope.end(), zeta,
        [](const EnvelopePoint& p, double value) { return p.zeta < value; });

    double cap = 0.0;
    bool beyond_reach = false;
    if (right->zeta == zeta) {
      cap = right->zeta_dot_max;
      beyond_reach = right->limited_by == EnvelopeLimit::MaxLength;
    } else {
      const auto left = right - 1;
      if (std::isinf(left->zeta_dot_max) || std::isinf(right->zeta_dot_max)) {
        // unbounded endpoint (zeta = 0); the finite end is the tighter cap
        cap = std::min(left->zeta_dot_max, right->zeta_dot_max);
      } else {
        const double span = right->zeta - left->zeta;
        const double frac = span > 0.0 ? (zeta - left->zeta) / span : 0.0;
        cap = left->zeta_dot_max + frac * (right->zeta_dot_max - left->zeta_dot_max);
      }
      beyond_reach = left->limited_by == EnvelopeLimit::MaxLength;
    }

    if (beyond_reach)
      break; // pole can no longer reach the ground at this angle

    MotionState capped = sample;
    if (std::abs(capped.omega) > cap)
      capped.omega = std::copysign(cap, capped.omega);
    clipped.samples.push_back(capped);
  }
  return clipped;
}

} // namespace rodsphere
