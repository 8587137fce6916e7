#pragma once
// Scenario model and the plain-text scenario file format.
//
// A scenario bundles one regime with every parameter set, the initial
// state and the integrator settings. Files use '[section]' headers and
// 'key = value' lines; '#' starts a full-line comment. Unknown sections
// and keys are rejected with the offending line and column.

#include <iosfwd>
#include <string>
#include <vector>

#include "rodsphere/integrate.hpp"
#include "rodsphere/leverage.hpp"
#include "rodsphere/push.hpp"
#include "rodsphere/types.hpp"

namespace rodsphere {

enum class RegimeKind { ObstaclePush, FullSlipPush, FrictionPush, Leverage, ConstantA };

const char* to_string(RegimeKind regime);

/// Inclusive linear grid specification.
struct GridSpec {
  double start = 0.0;
  double stop = 1.0;
  int count = 200;
};

/// Parameter sweep request: which scalar to vary and over what grid.
struct SweepRange {
  std::string parameter;
  double start = 0.0;
  double stop = 1.0;
  int count = 2;
};

/// Complete simulation description. Defaults are the prototype-scale
/// configuration: a 0.4 m, 25 kg solid-inertia sphere with 0.1 m poles.
struct Scenario {
  RegimeKind regime = RegimeKind::ConstantA;
  LeverArmConvention convention = LeverArmConvention::Consistent;
  SphereParams sphere = SphereParams::solid(0.4, 25.0);
  PoleParams pole{0.1, 0.05, 0.6, 0.1, 0.9};
  FrictionParams friction{1.0, 1.0};
  MotionState initial{};
  IntegratorSettings settings{1e-3, 10.0};
  double drive_constant = 0.15; ///< A of the constant-drive system [1/s^2]
  GridSpec grid;                ///< angle grid for envelope studies
  SweepRange sweep;
  std::string output_path = "out.csv";
};

/// Parse failure with 1-based location in the scenario text.
class ScenarioParseError : public std::runtime_error {
public:
  ScenarioParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Parses scenario text. Throws ScenarioParseError on malformed input and
/// std::domain_error when a parsed value violates a parameter invariant.
Scenario parse_scenario(std::istream& in);

/// Loads a scenario file from disk.
Scenario load_scenario(const std::string& path);

/// The regime's accelerations at the given angle, everything else taken
/// from the scenario.
AccelTriple regime_accels(const Scenario& scenario, double zeta);

/// The regime dynamics as an integrable right-hand side.
RhsFn make_rhs(const Scenario& scenario);

/// Drive constant of the angular system: the configured A for the
/// constant-drive regime, r * push_force / I otherwise.
double drive_constant_of(const Scenario& scenario);

/// Inclusive grid of grid.count values from grid.start to grid.stop.
std::vector<double> make_grid(const GridSpec& grid);

} // namespace rodsphere
