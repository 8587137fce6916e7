#include "rodsphere/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

namespace rodsphere {

const char* to_string(RegimeKind regime) {
  switch (regime) {
  case RegimeKind::ObstaclePush:
    return "obstacle_push";
  case RegimeKind::FullSlipPush:
    return "full_slip_push";
  case RegimeKind::FrictionPush:
    return "friction_push";
  case RegimeKind::Leverage:
    return "leverage";
  case RegimeKind::ConstantA:
    return "constant_a";
  }
  return "?";
}

ScenarioParseError::ScenarioParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view value, int line, int column) {
  std::string_view v = value;
  if (!v.empty() && v.front() == '+')
    v.remove_prefix(1);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ScenarioParseError(line, column,
                             "expected a number, got '" + std::string(value) + "'");
  return out;
}

int parse_count(std::string_view value, int line, int column) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw ScenarioParseError(line, column,
                             "expected an integer, got '" + std::string(value) + "'");
  return out;
}

// raw fields; validated types are constructed once the whole file is read
struct Builder {
  Scenario scenario; // carries all defaults

  double radius = 0.4;
  double mass = 25.0;
  std::string inertia = "solid";
  std::string gravity = "earth";
  double max_extension = 0.1;
  double max_extension_speed = 0.05;
  double push_force = 0.6;
  double lever_mass = 0.1;
  double lever_arm = 0.9;
  double mu_rs = 1.0;
  double mu_s_pole = 1.0;
  double dt = 1e-3;
  double t_end = 10.0;
  IntegrationMethod method = IntegrationMethod::RK4;
};

void apply_key(Builder& b, const std::string& section, std::string_view key,
               std::string_view value, int line, int key_col, int value_col) {
  const std::string v(value);
  const auto unknown_key = [&]() -> ScenarioParseError {
    return {line, key_col,
            "unknown key '" + std::string(key) + "' in section [" + section + "]"};
  };
  const auto num = [&]() { return parse_number(value, line, value_col); };
  const auto count = [&]() { return parse_count(value, line, value_col); };

  if (section == "scenario") {
    if (key == "regime") {
      if (v == "obstacle_push")
        b.scenario.regime = RegimeKind::ObstaclePush;
      else if (v == "full_slip_push")
        b.scenario.regime = RegimeKind::FullSlipPush;
      else if (v == "friction_push")
        b.scenario.regime = RegimeKind::FrictionPush;
      else if (v == "leverage")
        b.scenario.regime = RegimeKind::Leverage;
      else if (v == "constant_a")
        b.scenario.regime = RegimeKind::ConstantA;
      else
        throw ScenarioParseError(line, value_col, "unknown regime '" + v + "'");
    } else if (key == "convention") {
      if (v == "verbatim")
        b.scenario.convention = LeverArmConvention::Verbatim;
      else if (v == "consistent")
        b.scenario.convention = LeverArmConvention::Consistent;
      else
        throw ScenarioParseError(line, value_col, "unknown convention '" + v + "'");
    } else if (key == "A") {
      b.scenario.drive_constant = num();
    } else {
      throw unknown_key();
    }
  } else if (section == "sphere") {
    if (key == "radius")
      b.radius = num();
    else if (key == "mass")
      b.mass = num();
    else if (key == "inertia")
      b.inertia = v; // 'solid' or a number, resolved at build time
    else if (key == "gravity")
      b.gravity = v; // 'earth', 'moon' or a number
    else
      throw unknown_key();
    if (key == "inertia" && v != "solid")
      parse_number(value, line, value_col);
    if (key == "gravity" && v != "earth" && v != "moon")
      parse_number(value, line, value_col);
  } else if (section == "pole") {
    if (key == "max_extension")
      b.max_extension = num();
    else if (key == "max_extension_speed")
      b.max_extension_speed = num();
    else if (key == "push_force")
      b.push_force = num();
    else if (key == "lever_mass")
      b.lever_mass = num();
    else if (key == "lever_arm")
      b.lever_arm = num();
    else
      throw unknown_key();
  } else if (section == "friction") {
    if (key == "mu_rs")
      b.mu_rs = num();
    else if (key == "mu_s_pole")
      b.mu_s_pole = num();
    else
      throw unknown_key();
  } else if (section == "initial") {
    if (key == "zeta")
      b.scenario.initial.zeta = num();
    else if (key == "omega")
      b.scenario.initial.omega = num();
    else if (key == "x")
      b.scenario.initial.x = num();
    else if (key == "v_h")
      b.scenario.initial.v_h = num();
    else if (key == "z")
      b.scenario.initial.z = num();
    else if (key == "v_v")
      b.scenario.initial.v_v = num();
    else if (key == "t")
      b.scenario.initial.t = num();
    else
      throw unknown_key();
  } else if (section == "integrator") {
    if (key == "dt")
      b.dt = num();
    else if (key == "t_end")
      b.t_end = num();
    else if (key == "method") {
      if (v == "rk4")
        b.method = IntegrationMethod::RK4;
      else if (v == "semi_implicit_euler")
        b.method = IntegrationMethod::SemiImplicitEuler;
      else
        throw ScenarioParseError(line, value_col, "unknown method '" + v + "'");
    } else
      throw unknown_key();
  } else if (section == "envelope") {
    if (key == "start")
      b.scenario.grid.start = num();
    else if (key == "stop")
      b.scenario.grid.stop = num();
    else if (key == "count")
      b.scenario.grid.count = count();
    else
      throw unknown_key();
  } else if (section == "sweep") {
    if (key == "parameter")
      b.scenario.sweep.parameter = v;
    else if (key == "start")
      b.scenario.sweep.start = num();
    else if (key == "stop")
      b.scenario.sweep.stop = num();
    else if (key == "count")
      b.scenario.sweep.count = count();
    else
      throw unknown_key();
  } else if (section == "output") {
    if (key == "path")
      b.scenario.output_path = v;
    else
      throw unknown_key();
  } else {
    throw ScenarioParseError(line, key_col, "unknown section [" + section + "]");
  }
}

Scenario build(Builder& b) {
  double gravity = earth_gravity;
  if (b.gravity == "earth")
    gravity = earth_gravity;
  else if (b.gravity == "moon")
    gravity = moon_gravity;
  else
    gravity = parse_number(b.gravity, 0, 0);

  Scenario sc = b.scenario;
  if (b.inertia == "solid")
    sc.sphere = SphereParams::solid(b.radius, b.mass, gravity);
  else
    sc.sphere = SphereParams(b.radius, b.mass, parse_number(b.inertia, 0, 0), gravity);
  sc.pole = PoleParams(b.max_extension, b.max_extension_speed, b.push_force,
                       b.lever_mass, b.lever_arm);
  sc.friction = FrictionParams(b.mu_rs, b.mu_s_pole);
  sc.settings = IntegratorSettings(b.dt, b.t_end, b.method);

  detail::require(sc.pole.lever_arm > sc.sphere.radius,
                  "scenario: lever_arm must exceed the sphere radius");
  detail::require(std::isfinite(sc.drive_constant) && sc.drive_constant >= 0.0,
                  "scenario: A must be >= 0");
  detail::require(sc.grid.count >= 1, "scenario: envelope count must be >= 1");
  detail::require(std::isfinite(sc.grid.start) && std::isfinite(sc.grid.stop) &&
                      sc.grid.start <= sc.grid.stop,
                  "scenario: envelope grid must satisfy start <= stop");
  detail::require(sc.initial.is_finite(), "scenario: initial state must be finite");
  return sc;
}

} // namespace

Scenario parse_scenario(std::istream& in) {
  Builder builder;
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r')
      raw.pop_back();
    const std::string_view line = raw;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos)
      continue;
    if (line[first] == '#' || line[first] == ';')
      continue;
    const std::string_view body = trim(line);
    const int body_col = static_cast<int>(first) + 1;

    if (body.front() == '[') {
      if (body.back() != ']')
        throw ScenarioParseError(line_no, body_col, "unterminated section header");
      section = std::string(trim(body.substr(1, body.size() - 2)));
      static const char* known[] = {"scenario", "sphere",    "pole",  "friction", "initial",
                                    "integrator", "envelope", "sweep", "output"};
      bool ok = false;
      for (const char* s : known)
        ok = ok || section == s;
      if (!ok)
        throw ScenarioParseError(line_no, body_col, "unknown section [" + section + "]");
      continue;
    }

    const auto eq = line.find('=', first);
    if (eq == std::string_view::npos)
      throw ScenarioParseError(line_no, body_col, "expected 'key = value'");
    const std::string_view key = trim(line.substr(first, eq - first));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ScenarioParseError(line_no, body_col, "missing key before '='");
    if (value.empty())
      throw ScenarioParseError(line_no, static_cast<int>(eq) + 2, "missing value after '='");
    if (section.empty())
      throw ScenarioParseError(line_no, body_col, "key outside of any [section]");
    const int value_col =
        static_cast<int>(line.find_first_not_of(" \t", eq + 1)) + 1;
    apply_key(builder, section, key, value, line_no, body_col, value_col);
  }
  return build(builder);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open scenario file: " + path);
  return parse_scenario(in);
}

AccelTriple regime_accels(const Scenario& scenario, double zeta) {
  switch (scenario.regime) {
  case RegimeKind::ObstaclePush:
    return obstacle_accels(zeta, scenario.pole.push_force, scenario.sphere,
                           scenario.friction.mu_rs);
  case RegimeKind::FullSlipPush:
    return full_slip_accels(zeta, scenario.pole.push_force, scenario.sphere);
  case RegimeKind::FrictionPush:
    return friction_push_accels(zeta, scenario.pole.push_force, scenario.sphere,
                                scenario.friction, scenario.convention);
  case RegimeKind::Leverage:
    return leverage_accels(zeta, scenario.sphere, scenario.pole, scenario.friction.mu_rs);
  case RegimeKind::ConstantA: {
    MotionState s;
    s.zeta = zeta;
    return constant_A_rhs(scenario.drive_constant, s);
  }
  }
  throw std::logic_error("regime_accels: unhandled regime");
}

RhsFn make_rhs(const Scenario& scenario) {
  const Scenario sc = scenario; // regime parameters frozen per run
  return [sc](const MotionState& state) { return regime_accels(sc, state.zeta); };
}

double drive_constant_of(const Scenario& scenario) {
  if (scenario.regime == RegimeKind::ConstantA)
    return scenario.drive_constant;
  return scenario.sphere.radius * scenario.pole.push_force / scenario.sphere.inertia;
}

std::vector<double> make_grid(const GridSpec& grid) {
  detail::require(grid.count >= 1, "make_grid: count must be >= 1");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(grid.count));
  if (grid.count == 1) {
    values.push_back(grid.start);
    return values;
  }
  const double step = (grid.stop - grid.start) / static_cast<double>(grid.count - 1);
  for (int i = 0; i < grid.count - 1; ++i)
    values.push_back(grid.start + static_cast<double>(i) * step);
  values.push_back(grid.stop);
  return values;
}

} // namespace rodsphere
