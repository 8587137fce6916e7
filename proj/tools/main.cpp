// Command-line simulator: scenario files in, CSV out.
//
// Exit codes: 0 success, 2 usage or scenario errors, 3 numeric failures.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rodsphere/analysis.hpp"
#include "rodsphere/leverage.hpp"
#include "rodsphere/scenario.hpp"

namespace {

constexpr int exit_usage = 2;
constexpr int exit_numeric = 3;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_metadata(std::ostream& out, const rodsphere::Scenario& sc) {
  using rodsphere::to_string;
  out << "# regime = " << to_string(sc.regime) << "\n"
      << "# convention = " << to_string(sc.convention) << "\n"
      << "# sphere.radius = " << fmt(sc.sphere.radius) << "\n"
      << "# sphere.mass = " << fmt(sc.sphere.mass) << "\n"
      << "# sphere.inertia = " << fmt(sc.sphere.inertia) << "\n"
      << "# sphere.gravity = " << fmt(sc.sphere.gravity) << "\n"
      << "# pole.max_extension = " << fmt(sc.pole.max_extension) << "\n"
      << "# pole.max_extension_speed = " << fmt(sc.pole.max_extension_speed) << "\n"
      << "# pole.push_force = " << fmt(sc.pole.push_force) << "\n"
      << "# pole.lever_mass = " << fmt(sc.pole.lever_mass) << "\n"
      << "# pole.lever_arm = " << fmt(sc.pole.lever_arm) << "\n"
      << "# friction.mu_rs = " << fmt(sc.friction.mu_rs) << "\n"
      << "# friction.mu_s_pole = " << fmt(sc.friction.mu_s_pole) << "\n"
      << "# A = " << fmt(sc.drive_constant) << "\n"
      << "# initial.zeta = " << fmt(sc.initial.zeta) << "\n"
      << "# initial.omega = " << fmt(sc.initial.omega) << "\n"
      << "# integrator.dt = " << fmt(sc.settings.dt) << "\n"
      << "# integrator.t_end = " << fmt(sc.settings.t_end) << "\n"
      << "# integrator.method = " << to_string(sc.settings.method) << "\n";
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary); // LF line endings on every platform
  if (!out)
    throw std::invalid_argument("cannot open output file: " + path);
  return out;
}

rodsphere::Scenario load(const std::string& path,
                         const std::optional<std::string>& convention) {
  rodsphere::Scenario sc = rodsphere::load_scenario(path);
  if (convention)
    sc.convention = *convention == "verbatim" ? rodsphere::LeverArmConvention::Verbatim
                                              : rodsphere::LeverArmConvention::Consistent;
  return sc;
}

int cmd_simulate(const rodsphere::Scenario& sc, const std::string& out_path) {
  const rodsphere::RhsFn rhs = rodsphere::make_rhs(sc);
  const rodsphere::IntegrationResult result =
      rodsphere::integrate(rhs, sc.initial, sc.settings);

  std::ofstream out = open_output(out_path);
  write_metadata(out, sc);
  out << "t,zeta,omega,x,v_h,z,v_v,a_v,a_h,omega_dot\n";
  for (const rodsphere::MotionState& s : result.trajectory.samples) {
    rodsphere::AccelTriple acc;
    bool have_acc = true;
    try {
      acc = rhs(s);
    } catch (const std::domain_error&) {
      have_acc = false; // the final sample of an aborted run may sit on the domain edge
    }
    out << fmt(s.t) << ',' << fmt(s.zeta) << ',' << fmt(s.omega) << ',' << fmt(s.x) << ','
        << fmt(s.v_h) << ',' << fmt(s.z) << ',' << fmt(s.v_v) << ',';
    if (have_acc)
      out << fmt(acc.a_v) << ',' << fmt(acc.a_h) << ',' << fmt(acc.omega_dot) << '\n';
    else
      out << "nan,nan,nan\n";
  }
  if (result.diverged) {
    std::cerr << "simulate: " << result.message << " (partial trajectory written)\n";
    return exit_numeric;
  }
  std::cout << "wrote " << result.trajectory.samples.size() << " samples to " << out_path
            << "\n";
  return 0;
}

int cmd_min_friction(const rodsphere::Scenario& sc) {
  const double mu = rodsphere::min_friction_for_forward(sc.sphere, sc.pole);
  std::printf("%.6f\n", mu);
  return 0;
}

int cmd_envelope(const rodsphere::Scenario& sc, const std::string& out_path) {
  const std::vector<double> grid = rodsphere::make_grid(sc.grid);
  const auto rows = rodsphere::force_vs_geometry(sc, grid);
  std::ofstream out = open_output(out_path);
  write_metadata(out, sc);
  out << "zeta,omega_force,zeta_dot_geom,limited_by,binding\n";
  for (const rodsphere::ForceGeometryRow& row : rows)
    out << fmt(row.zeta) << ',' << fmt(row.omega_force) << ',' << fmt(row.omega_geom) << ','
        << to_string(row.geom_limited_by) << ',' << to_string(row.binding) << '\n';
  std::cout << "wrote " << rows.size() << " grid points to " << out_path << "\n";
  return 0;
}

int cmd_verify(std::uint64_t seed, int samples, const std::string& convention) {
  const auto conv = convention == "verbatim" ? rodsphere::LeverArmConvention::Verbatim
                                             : rodsphere::LeverArmConvention::Consistent;
  const rodsphere::ReductionReport report = rodsphere::verify_reductions(samples, seed, conv);
  std::cout << report.to_text();
  return report.all_passed() ? 0 : exit_numeric;
}

int cmd_sweep(const rodsphere::Scenario& sc, const std::string& out_path) {
  rodsphere::SweepSpec spec;
  spec.parameter = sc.sweep.parameter;
  spec.start = sc.sweep.start;
  spec.stop = sc.sweep.stop;
  spec.count = sc.sweep.count;
  spec.scenario = sc;
  const auto rows = rodsphere::run_sweep(spec);
  std::ofstream out = open_output(out_path);
  write_metadata(out, sc);
  out << "# sweep.parameter = " << spec.parameter << "\n";
  out << spec.parameter << ",a_v,a_h,omega_dot\n";
  for (const rodsphere::SweepRow& row : rows)
    out << fmt(row.value) << ',' << fmt(row.accel.a_v) << ',' << fmt(row.accel.a_h) << ','
        << fmt(row.accel.omega_dot) << '\n';
  std::cout << "wrote " << rows.size() << " sweep rows to " << out_path << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"rod-driven spherical robot dynamics simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  std::optional<std::string> convention;
  std::uint64_t seed = 1;
  int samples = 1000;
  std::string verify_convention = "consistent";

  const auto add_scenario = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenario_path, "scenario file")->required();
  };
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output CSV path (default from the scenario file)");
  };
  const auto add_convention = [&](CLI::App* cmd) {
    cmd->add_option("--convention", convention, "lever-arm convention override")
        ->check(CLI::IsMember({"verbatim", "consistent"}));
  };

  CLI::App* simulate = app.add_subcommand("simulate", "integrate a scenario, write the trajectory");
  add_scenario(simulate);
  add_out(simulate);
  add_convention(simulate);

  CLI::App* min_friction =
      app.add_subcommand("min-friction", "smallest mu_rs guaranteeing forward leverage motion");
  add_scenario(min_friction);

  CLI::App* envelope =
      app.add_subcommand("envelope", "force-achievable vs geometrically possible angular rates");
  add_scenario(envelope);
  add_out(envelope);

  CLI::App* verify = app.add_subcommand("verify", "check the friction-limit reduction identities");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--samples", samples, "number of random samples")
      ->check(CLI::PositiveNumber);
  verify->add_option("--convention", verify_convention, "lever-arm convention")
      ->check(CLI::IsMember({"verbatim", "consistent"}));

  CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter, tabulate accelerations");
  add_scenario(sweep);
  add_out(sweep);
  add_convention(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    if (verify->parsed())
      return cmd_verify(seed, samples, verify_convention);

    const rodsphere::Scenario sc = load(scenario_path, convention);
    const std::string out = out_path.empty() ? sc.output_path : out_path;
    if (simulate->parsed())
      return cmd_simulate(sc, out);
    if (min_friction->parsed())
      return cmd_min_friction(sc);
    if (envelope->parsed())
      return cmd_envelope(sc, out);
    if (sweep->parsed())
      return cmd_sweep(sc, out);
  } catch (const rodsphere::ScenarioParseError& e) {
    std::cerr << scenario_path << ": " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return exit_numeric;
  }
  return exit_usage;
}
