#pragma once
// Fixed-step time integration of any regime's dynamics, plus the
// constant-drive angular system zeta_dot_dot = A sin(zeta) obtained from
// the no-slip pushing model when r F / I is held constant.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rodsphere/geometry.hpp"
#include "rodsphere/types.hpp"

namespace rodsphere {

enum class IntegrationMethod { RK4, SemiImplicitEuler };

const char* to_string(IntegrationMethod method);

struct IntegratorSettings {
  double dt;    ///< step size [s]
  double t_end; ///< integration duration [s]
  IntegrationMethod method = IntegrationMethod::RK4;

  IntegratorSettings(double dt, double t_end,
                     IntegrationMethod method = IntegrationMethod::RK4);
};

/// Uniformly sampled motion history, strictly increasing in t.
struct Trajectory {
  std::vector<MotionState> samples;
  double dt = 0.0; ///< sample spacing [s]
};

/// Regime dynamics: accelerations as a function of the current state.
using RhsFn = std::function<AccelTriple(const MotionState&)>;

/// Angular drive of the constant-A system: omega_dot = A sin(zeta); no
/// translational components.
AccelTriple constant_A_rhs(double A, const MotionState& state);

struct IntegrationResult {
  Trajectory trajectory; ///< samples up to and including the last valid state
  bool diverged = false; ///< true when integration stopped early
  std::string message;   ///< reason when diverged

  bool ok() const { return !diverged; }
};

/// Integrates rhs from the initial state over floor(t_end / dt) steps,
/// returning floor(t_end / dt) + 1 samples including the initial one.
///
/// A step producing a non-finite state ends integration at the last valid
/// sample with diverged set; a rhs that throws std::domain_error (the
/// state left the regime's domain) is treated the same way.
IntegrationResult integrate(const RhsFn& rhs, const MotionState& initial,
                            const IntegratorSettings& settings);

/// Caps each sample's omega at the envelope value interpolated at its
/// zeta and truncates the trajectory once zeta passes the reach limit
/// (envelope points tagged MaxLength). Idempotent. The envelope must
/// cover the trajectory's zeta range; a gap is an error.
Trajectory clip_to_envelope(const Trajectory& trajectory,
                            std::span<const EnvelopePoint> envelope);

} // namespace rodsphere
