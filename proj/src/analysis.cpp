#include "rodsphere/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "rodsphere/push.hpp"

namespace rodsphere {

const char* to_string(BindingSide side) {
  return side == BindingSide::Force ? "force" : "geometry";
}

std::vector<ForceGeometryRow> force_vs_geometry(const Scenario& scenario,
                                                std::span<const double> zeta_grid) {
  if (scenario.regime == RegimeKind::Leverage)
    throw std::invalid_argument("force_vs_geometry: requires a pushing scenario");
  const double drive = drive_constant_of(scenario);
  const double zeta0 = scenario.initial.zeta;
  const double omega0 = scenario.initial.omega;
  const auto envelope = geometric_envelope(scenario.pole, scenario.sphere, zeta_grid);

  std::vector<ForceGeometryRow> rows;
  rows.reserve(envelope.size());
  for (const EnvelopePoint& point : envelope) {
    ForceGeometryRow row;
    row.zeta = point.zeta;
    const double energy = omega0 * omega0 + 2.0 * drive * (std::cos(zeta0) - std::cos(point.zeta));
    row.omega_force = energy > 0.0 ? std::sqrt(energy) : 0.0;
    row.omega_geom = point.zeta_dot_max;
    row.geom_limited_by = point.limited_by;
    row.binding = row.omega_geom < row.omega_force ? BindingSide::Geometry : BindingSide::Force;
    rows.push_back(row);
  }
  return rows;
}

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

// uniform draws built from raw generator bits, identical on every platform
class SampleRng {
public:
  explicit SampleRng(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

private:
  std::mt19937_64 rng_;
};

double rel_err(double actual, double expected) {
  const double scale = std::max({std::abs(actual), std::abs(expected), 1e-300});
  return std::abs(actual - expected) / scale;
}

std::string describe_sample(double zeta, double force, const SphereParams& sphere) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "zeta=%.17g force=%.17g radius=%.17g mass=%.17g inertia=%.17g",
                zeta, force, sphere.radius, sphere.mass, sphere.inertia);
  return buf;
}

SphereParams draw_sphere(SampleRng& rng) {
  const double radius = rng.uniform(0.05, 2.0);
  const double mass = rng.uniform(1.0, 100.0);
  const double inertia = solid_sphere_inertia(mass, radius) * rng.uniform(0.5, 5.0);
  const double gravity = rng.uniform(1.0, 20.0);
  return {radius, mass, inertia, gravity};
}

} // namespace

bool ReductionReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ReductionCheck& c) { return c.passed; });
}

std::string ReductionReport::to_text() const {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "reduction identities: convention=%s samples=%d seed=%llu\n",
                to_string(convention), samples, static_cast<unsigned long long>(seed));
  out += buf;
  for (const ReductionCheck& check : checks) {
    const char* status = check.passed
                             ? (check.known_discrepancy ? "KNOWN DISCREPANCY" : "ok")
                             : "FAILED";
    std::snprintf(buf, sizeof(buf), "  %-34s max rel error %.3e  [%s]\n", check.name.c_str(),
                  check.max_error, status);
    out += buf;
    if (!check.counterexample.empty()) {
      out += "    counterexample: ";
      out += check.counterexample;
      out += '\n';
    }
  }
  return out;
}

ReductionReport verify_reductions(int samples, std::uint64_t seed,
                                  LeverArmConvention convention) {
  detail::require(samples >= 1, "verify_reductions: samples must be >= 1");

  ReductionReport report;
  report.seed = seed;
  report.samples = samples;
  report.convention = convention;

  constexpr double tol = 1e-12;
  SampleRng rng(seed);

  ReductionCheck full_grip{"(1,1) matches blocked-tip system", 0.0, true, false, ""};
  ReductionCheck no_grip{"(0,0) matches full-slip system", 0.0, true, false, ""};
  ReductionCheck vertical{"zeta=0 is purely vertical", 0.0, true, false, ""};
  ReductionCheck quadratic{"rotation row quadratic in mu", 0.0, true, false, ""};
  no_grip.known_discrepancy = convention == LeverArmConvention::Verbatim;

  for (int i = 0; i < samples; ++i) {
    const SphereParams sphere = draw_sphere(rng);
    const double zeta = rng.uniform(0.0, half_pi - 0.02);
    const double force = rng.uniform(0.0, 100.0);

    // 1: full grip reduces to the blocked-tip (obstacle) system
    {
      const AccelTriple got =
          friction_push_accels(zeta, force, sphere, FrictionParams(1.0, 1.0), convention);
      const AccelTriple want = obstacle_accels(zeta, force, sphere, 1.0);
      const double err = std::max(rel_err(got.a_h, want.a_h),
                                  rel_err(got.omega_dot, want.omega_dot));
      if (err > full_grip.max_error) full_grip.max_error = err;
      if (err > tol && full_grip.passed) {
        full_grip.passed = false;
        full_grip.counterexample = describe_sample(zeta, force, sphere);
      }
    }

    // 2: no grip reduces to the full-slip system (verbatim: measured only)
    {
      const AccelTriple got =
          friction_push_accels(zeta, force, sphere, FrictionParams(0.0, 0.0), convention);
      const AccelTriple want = full_slip_accels(zeta, force, sphere);
      const double err = std::max(rel_err(got.a_h, want.a_h),
                                  rel_err(got.omega_dot, want.omega_dot));
      if (err > no_grip.max_error) no_grip.max_error = err;
      if (!no_grip.known_discrepancy && err > tol && no_grip.passed) {
        no_grip.passed = false;
        no_grip.counterexample = describe_sample(zeta, force, sphere);
      }
    }

    // 3: vertical push moves only vertically
    {
      const FrictionParams friction(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0));
      const AccelTriple got = friction_push_accels(0.0, force, sphere, friction, convention);
      const double lift = force / sphere.mass - sphere.gravity;
      const double want_v = lift > 0.0 ? lift : 0.0;
      const bool exact = got.a_h == 0.0 && got.omega_dot == 0.0;
      const double err = rel_err(got.a_v, want_v);
      if (err > vertical.max_error) vertical.max_error = err;
      if ((!exact || err > 1e-15) && vertical.passed) {
        vertical.passed = false;
        vertical.counterexample = describe_sample(0.0, force, sphere);
      }
    }

    // 4: omega_dot is a degree-2 polynomial in mu with a nonzero square term
    {
      const double zq = rng.uniform(0.05, 1.5);
      const double fq = rng.uniform(0.5, 100.0);
      const auto omega_dot_at = [&](double mu) {
        return friction_push_accels(zq, fq, sphere, FrictionParams(mu, mu), convention)
            .omega_dot;
      };
      const double y0 = omega_dot_at(0.0);
      const double y1 = omega_dot_at(0.5);
      const double y2 = omega_dot_at(1.0);
      const double probe = rng.uniform(0.0, 1.0);
      const double predicted = y0 * 2.0 * (probe - 0.5) * (probe - 1.0) -
                               y1 * 4.0 * probe * (probe - 1.0) +
                               y2 * 2.0 * probe * (probe - 0.5);
      const double err = rel_err(omega_dot_at(probe), predicted);
      const double square_coeff = 2.0 * y0 - 4.0 * y1 + 2.0 * y2;
      const double scale = std::max({std::abs(y0), std::abs(y1), std::abs(y2), 1e-300});
      const bool square_present = std::abs(square_coeff) > 1e-9 * scale;
      if (err > quadratic.max_error) quadratic.max_error = err;
      if ((err > tol || !square_present) && quadratic.passed) {
        quadratic.passed = false;
        quadratic.counterexample = describe_sample(zq, fq, sphere);
      }
    }
  }

  report.checks = {full_grip, no_grip, vertical, quadratic};
  return report;
}

namespace {

Scenario with_parameter(const Scenario& base, const std::string& name, double value) {
  Scenario sc = base;
  const PoleParams& p = base.pole;
  const SphereParams& s = base.sphere;
  if (name == "mu_rs")
    sc.friction = FrictionParams(value, base.friction.mu_s_pole);
  else if (name == "mu_s_pole")
    sc.friction = FrictionParams(base.friction.mu_rs, value);
  else if (name == "push_force")
    sc.pole = PoleParams(p.max_extension, p.max_extension_speed, value, p.lever_mass, p.lever_arm);
  else if (name == "lever_mass")
    sc.pole = PoleParams(p.max_extension, p.max_extension_speed, p.push_force, value, p.lever_arm);
  else if (name == "lever_arm")
    sc.pole = PoleParams(p.max_extension, p.max_extension_speed, p.push_force, p.lever_mass, value);
  else if (name == "max_extension")
    sc.pole = PoleParams(value, p.max_extension_speed, p.push_force, p.lever_mass, p.lever_arm);
  else if (name == "max_extension_speed")
    sc.pole = PoleParams(p.max_extension, value, p.push_force, p.lever_mass, p.lever_arm);
  else if (name == "radius")
    sc.sphere = SphereParams(value, s.mass, s.inertia, s.gravity);
  else if (name == "mass")
    sc.sphere = SphereParams(s.radius, value, s.inertia, s.gravity);
  else if (name == "inertia")
    sc.sphere = SphereParams(s.radius, s.mass, value, s.gravity);
  else if (name == "gravity")
    sc.sphere = SphereParams(s.radius, s.mass, s.inertia, value);
  else if (name == "zeta")
    sc.initial.zeta = value;
  else if (name == "A")
    sc.drive_constant = value;
  else
    throw std::invalid_argument("run_sweep: unknown parameter '" + name + "'");
  return sc;
}

constexpr const char* sweep_parameter_names[] = {
    "mu_rs",  "mu_s_pole", "push_force",    "lever_mass",
    "lever_arm", "max_extension", "max_extension_speed", "radius",
    "mass",   "inertia",   "gravity",       "zeta",
    "A"};

} // namespace

std::span<const char* const> sweep_parameters() { return sweep_parameter_names; }

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  detail::require(spec.count >= 2, "run_sweep: count must be >= 2");
  detail::require(std::isfinite(spec.start) && std::isfinite(spec.stop) &&
                      spec.start < spec.stop,
                  "run_sweep: start must be < stop");

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.count));
  const double step = (spec.stop - spec.start) / static_cast<double>(spec.count - 1);
  for (int i = 0; i < spec.count; ++i) {
    const double value =
        i == spec.count - 1 ? spec.stop : spec.start + static_cast<double>(i) * step;
    const Scenario sc = with_parameter(spec.scenario, spec.parameter, value);
    rows.push_back({value, regime_accels(sc, sc.initial.zeta)});
  }
  return rows;
}

} // namespace rodsphere
