// Python bindings for the dynamics library.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rodsphere/analysis.hpp"
#include "rodsphere/geometry.hpp"
#include "rodsphere/integrate.hpp"
#include "rodsphere/leverage.hpp"
#include "rodsphere/push.hpp"
#include "rodsphere/scenario.hpp"
#include "rodsphere/types.hpp"

namespace py = pybind11;
using namespace rodsphere;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dynamics of rod-driven spherical robot locomotion: pushing and "
            "leverage contact models, pole-extension geometry, trajectory "
            "integration and friction-threshold analysis.";
  m.attr("__version__") = "0.1.0";
  m.attr("EARTH_GRAVITY") = earth_gravity;
  m.attr("MOON_GRAVITY") = moon_gravity;

  // ---- enums ----
  py::enum_<LeverArmConvention>(m, "LeverArmConvention")
      .value("Verbatim", LeverArmConvention::Verbatim)
      .value("Consistent", LeverArmConvention::Consistent);
  py::enum_<EnvelopeLimit>(m, "EnvelopeLimit")
      .value("ExtensionSpeed", EnvelopeLimit::ExtensionSpeed)
      .value("MaxLength", EnvelopeLimit::MaxLength);
  py::enum_<IntegrationMethod>(m, "IntegrationMethod")
      .value("RK4", IntegrationMethod::RK4)
      .value("SemiImplicitEuler", IntegrationMethod::SemiImplicitEuler);
  py::enum_<RegimeKind>(m, "RegimeKind")
      .value("ObstaclePush", RegimeKind::ObstaclePush)
      .value("FullSlipPush", RegimeKind::FullSlipPush)
      .value("FrictionPush", RegimeKind::FrictionPush)
      .value("Leverage", RegimeKind::Leverage)
      .value("ConstantA", RegimeKind::ConstantA);
  py::enum_<BindingSide>(m, "BindingSide")
      .value("Force", BindingSide::Force)
      .value("Geometry", BindingSide::Geometry);

  // ---- parameter and state types ----
  py::class_<SphereParams>(m, "SphereParams")
      .def(py::init<double, double, double, double>(), py::arg("radius"), py::arg("mass"),
           py::arg("inertia"), py::arg("gravity") = earth_gravity)
      .def_static("solid", &SphereParams::solid, py::arg("radius"), py::arg("mass"),
                  py::arg("gravity") = earth_gravity)
      .def_readonly("radius", &SphereParams::radius)
      .def_readonly("mass", &SphereParams::mass)
      .def_readonly("inertia", &SphereParams::inertia)
      .def_readonly("gravity", &SphereParams::gravity);

  py::class_<PoleParams>(m, "PoleParams")
      .def(py::init<double, double, double, double, double>(), py::arg("max_extension"),
           py::arg("max_extension_speed"), py::arg("push_force"), py::arg("lever_mass"),
           py::arg("lever_arm"))
      .def_readonly("max_extension", &PoleParams::max_extension)
      .def_readonly("max_extension_speed", &PoleParams::max_extension_speed)
      .def_readonly("push_force", &PoleParams::push_force)
      .def_readonly("lever_mass", &PoleParams::lever_mass)
      .def_readonly("lever_arm", &PoleParams::lever_arm);

  py::class_<FrictionParams>(m, "FrictionParams")
      .def(py::init<double, double>(), py::arg("mu_rs"), py::arg("mu_s_pole"))
      .def_readonly("mu_rs", &FrictionParams::mu_rs)
      .def_readonly("mu_s_pole", &FrictionParams::mu_s_pole);

  py::class_<MotionState>(m, "MotionState")
      .def(py::init<>())
      .def_readwrite("zeta", &MotionState::zeta)
      .def_readwrite("omega", &MotionState::omega)
      .def_readwrite("x", &MotionState::x)
      .def_readwrite("v_h", &MotionState::v_h)
      .def_readwrite("z", &MotionState::z)
      .def_readwrite("v_v", &MotionState::v_v)
      .def_readwrite("t", &MotionState::t)
      .def("is_finite", &MotionState::is_finite);

  py::class_<AccelTriple>(m, "AccelTriple")
      .def(py::init<>())
      .def_readwrite("a_v", &AccelTriple::a_v)
      .def_readwrite("a_h", &AccelTriple::a_h)
      .def_readwrite("omega_dot", &AccelTriple::omega_dot)
      .def("is_finite", &AccelTriple::is_finite);

  py::class_<ForceSplit>(m, "ForceSplit")
      .def_readonly("radial", &ForceSplit::radial)
      .def_readonly("tangential", &ForceSplit::tangential)
      .def("magnitude", &ForceSplit::magnitude);

  py::class_<EnvelopePoint>(m, "EnvelopePoint")
      .def_readonly("zeta", &EnvelopePoint::zeta)
      .def_readonly("zeta_dot_max", &EnvelopePoint::zeta_dot_max)
      .def_readonly("limited_by", &EnvelopePoint::limited_by);

  py::class_<LeverageTorques>(m, "LeverageTorques")
      .def_readonly("tau_n", &LeverageTorques::tau_n)
      .def_readonly("tau_fr2", &LeverageTorques::tau_fr2)
      .def_readonly("tau_r", &LeverageTorques::tau_r);

  py::class_<IntegratorSettings>(m, "IntegratorSettings")
      .def(py::init<double, double, IntegrationMethod>(), py::arg("dt"), py::arg("t_end"),
           py::arg("method") = IntegrationMethod::RK4)
      .def_readonly("dt", &IntegratorSettings::dt)
      .def_readonly("t_end", &IntegratorSettings::t_end)
      .def_readonly("method", &IntegratorSettings::method);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("samples", &Trajectory::samples)
      .def_readonly("dt", &Trajectory::dt);

  py::class_<IntegrationResult>(m, "IntegrationResult")
      .def_readonly("trajectory", &IntegrationResult::trajectory)
      .def_readonly("diverged", &IntegrationResult::diverged)
      .def_readonly("message", &IntegrationResult::message)
      .def("ok", &IntegrationResult::ok);

  // ---- core operations ----
  m.def("solid_sphere_inertia", &solid_sphere_inertia, py::arg("mass"), py::arg("radius"));

  // ---- geometry ----
  m.def("pole_extension_at", &pole_extension_at, py::arg("zeta"), py::arg("radius"));
  m.def("max_reach_angle", &max_reach_angle, py::arg("max_extension"), py::arg("radius"));
  m.def("max_angular_rate", &max_angular_rate, py::arg("zeta"),
        py::arg("max_extension_speed"), py::arg("radius"));
  m.def(
      "geometric_envelope",
      [](const PoleParams& pole, const SphereParams& sphere, const std::vector<double>& grid) {
        return geometric_envelope(pole, sphere, grid);
      },
      py::arg("pole"), py::arg("sphere"), py::arg("zeta_grid"));

  // ---- pushing ----
  m.def("split_obstacle_reaction", &split_obstacle_reaction, py::arg("push_force"),
        py::arg("zeta"));
  m.def("split_push_force", &split_push_force, py::arg("push_force"), py::arg("zeta"));
  m.def("obstacle_accels", &obstacle_accels, py::arg("zeta"), py::arg("push_force"),
        py::arg("sphere"), py::arg("mu_rs"));
  m.def("full_slip_accels", &full_slip_accels, py::arg("zeta"), py::arg("push_force"),
        py::arg("sphere"));
  m.def("pole_friction", &pole_friction, py::arg("push_force"), py::arg("zeta"),
        py::arg("mu_s_pole"));
  m.def("lever_force", &lever_force, py::arg("push_force"), py::arg("zeta"),
        py::arg("mu_s_pole"));
  m.def("friction_push_accels", &friction_push_accels, py::arg("zeta"), py::arg("push_force"),
        py::arg("sphere"), py::arg("friction"),
        py::arg("convention") = LeverArmConvention::Consistent);

  // ---- leverage ----
  m.def("split_gravity", &split_gravity, py::arg("gravity_force"), py::arg("zeta"));
  m.def("leverage_torques", &leverage_torques, py::arg("zeta"), py::arg("lever_mass"),
        py::arg("sphere"), py::arg("pole"), py::arg("mu_rs"));
  m.def("leverage_accels", &leverage_accels, py::arg("zeta"), py::arg("sphere"),
        py::arg("pole"), py::arg("mu_rs"));
  m.def("forward_guarantee", &forward_guarantee, py::arg("zeta"), py::arg("mu_rs"),
        py::arg("sphere"), py::arg("pole"));
  m.def("min_friction_for_forward", &min_friction_for_forward, py::arg("sphere"),
        py::arg("pole"));

  // ---- integration ----
  m.def("constant_A_rhs", &constant_A_rhs, py::arg("A"), py::arg("state"));
  m.def("integrate", &integrate, py::arg("rhs"), py::arg("initial"), py::arg("settings"));
  m.def(
      "clip_to_envelope",
      [](const Trajectory& trajectory, const std::vector<EnvelopePoint>& envelope) {
        return clip_to_envelope(trajectory, envelope);
      },
      py::arg("trajectory"), py::arg("envelope"));

  // ---- scenarios ----
  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<>())
      .def_readwrite("start", &GridSpec::start)
      .def_readwrite("stop", &GridSpec::stop)
      .def_readwrite("count", &GridSpec::count);

  py::class_<SweepRange>(m, "SweepRange")
      .def(py::init<>())
      .def_readwrite("parameter", &SweepRange::parameter)
      .def_readwrite("start", &SweepRange::start)
      .def_readwrite("stop", &SweepRange::stop)
      .def_readwrite("count", &SweepRange::count);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<>())
      .def_readwrite("regime", &Scenario::regime)
      .def_readwrite("convention", &Scenario::convention)
      .def_readwrite("sphere", &Scenario::sphere)
      .def_readwrite("pole", &Scenario::pole)
      .def_readwrite("friction", &Scenario::friction)
      .def_readwrite("initial", &Scenario::initial)
      .def_readwrite("settings", &Scenario::settings)
      .def_readwrite("drive_constant", &Scenario::drive_constant)
      .def_readwrite("grid", &Scenario::grid)
      .def_readwrite("sweep", &Scenario::sweep)
      .def_readwrite("output_path", &Scenario::output_path);

  m.def("load_scenario", &load_scenario, py::arg("path"));
  m.def(
      "parse_scenario",
      [](const std::string& text) {
        std::istringstream in(text);
        return parse_scenario(in);
      },
      py::arg("text"));
  m.def("regime_accels", &regime_accels, py::arg("scenario"), py::arg("zeta"));
  m.def("make_rhs", &make_rhs, py::arg("scenario"));
  m.def("drive_constant_of", &drive_constant_of, py::arg("scenario"));
  m.def("make_grid", &make_grid, py::arg("grid"));

  // ---- analysis ----
  py::class_<ForceGeometryRow>(m, "ForceGeometryRow")
      .def_readonly("zeta", &ForceGeometryRow::zeta)
      .def_readonly("omega_force", &ForceGeometryRow::omega_force)
      .def_readonly("omega_geom", &ForceGeometryRow::omega_geom)
      .def_readonly("geom_limited_by", &ForceGeometryRow::geom_limited_by)
      .def_readonly("binding", &ForceGeometryRow::binding);

  py::class_<ReductionCheck>(m, "ReductionCheck")
      .def_readonly("name", &ReductionCheck::name)
      .def_readonly("max_error", &ReductionCheck::max_error)
      .def_readonly("passed", &ReductionCheck::passed)
      .def_readonly("known_discrepancy", &ReductionCheck::known_discrepancy)
      .def_readonly("counterexample", &ReductionCheck::counterexample);

  py::class_<ReductionReport>(m, "ReductionReport")
      .def_readonly("seed", &ReductionReport::seed)
      .def_readonly("samples", &ReductionReport::samples)
      .def_readonly("convention", &ReductionReport::convention)
      .def_readonly("checks", &ReductionReport::checks)
      .def("all_passed", &ReductionReport::all_passed)
      .def("to_text", &ReductionReport::to_text);

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("parameter", &SweepSpec::parameter)
      .def_readwrite("start", &SweepSpec::start)
      .def_readwrite("stop", &SweepSpec::stop)
      .def_readwrite("count", &SweepSpec::count)
      .def_readwrite("scenario", &SweepSpec::scenario);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("value", &SweepRow::value)
      .def_readonly("accel", &SweepRow::accel);

  m.def(
      "force_vs_geometry",
      [](const Scenario& scenario, const std::vector<double>& grid) {
        return force_vs_geometry(scenario, grid);
      },
      py::arg("scenario"), py::arg("zeta_grid"));
  m.def("verify_reductions", &verify_reductions, py::arg("samples"), py::arg("seed"),
        py::arg("convention") = LeverArmConvention::Consistent);
  m.def("run_sweep", &run_sweep, py::arg("spec"));
}
