#include <doctest.h>

#include <limits>

#include "rodsphere/types.hpp"

using namespace rodsphere;

TEST_CASE("solid sphere inertia") {
  // (2/5) * 25 * 0.4^2 = 1.6
  CHECK(solid_sphere_inertia(25.0, 0.4) == doctest::Approx(1.6).epsilon(1e-12));
  CHECK(solid_sphere_inertia(1.0, 1.0) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK_THROWS_AS(solid_sphere_inertia(0.0, 0.4), std::domain_error);
  CHECK_THROWS_AS(solid_sphere_inertia(-2.0, 0.4), std::domain_error);
  CHECK_THROWS_AS(solid_sphere_inertia(25.0, 0.0), std::domain_error);

  // the factory and the free function agree bit for bit
  const SphereParams s = SphereParams::solid(0.4, 25.0);
  CHECK(s.inertia == solid_sphere_inertia(25.0, 0.4));
  CHECK(s.gravity == earth_gravity);
}

TEST_CASE("sphere parameter validation") {
  CHECK_NOTHROW(SphereParams(0.4, 25.0, 1.6));
  CHECK_THROWS_AS(SphereParams(0.0, 25.0, 1.6), std::domain_error);
  CHECK_THROWS_AS(SphereParams(0.4, -1.0, 1.6), std::domain_error);
  CHECK_THROWS_AS(SphereParams(0.4, 25.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(SphereParams(0.4, 25.0, 1.6, 0.0), std::domain_error);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(SphereParams(nan, 25.0, 1.6), std::domain_error);
}

TEST_CASE("pole parameter validation") {
  CHECK_NOTHROW(PoleParams(0.1, 0.05, 0.6, 0.1, 0.9));
  CHECK_THROWS_AS(PoleParams(0.0, 0.05, 0.6, 0.1, 0.9), std::domain_error);
  CHECK_THROWS_AS(PoleParams(0.1, 0.0, 0.6, 0.1, 0.9), std::domain_error);
  CHECK_THROWS_AS(PoleParams(0.1, 0.05, -0.1, 0.1, 0.9), std::domain_error);
  CHECK_THROWS_AS(PoleParams(0.1, 0.05, 0.6, -0.1, 0.9), std::domain_error);
  CHECK_THROWS_AS(PoleParams(0.1, 0.05, 0.6, 0.1, 0.0), std::domain_error);
  // zero push force and zero lever mass are allowed
  CHECK_NOTHROW(PoleParams(0.1, 0.05, 0.0, 0.0, 0.9));
}

TEST_CASE("friction coefficients bounded to [0, 1]") {
  CHECK_NOTHROW(FrictionParams(0.0, 0.0));
  CHECK_NOTHROW(FrictionParams(1.0, 1.0));
  CHECK_THROWS_AS(FrictionParams(-0.01, 0.5), std::domain_error);
  CHECK_THROWS_AS(FrictionParams(1.01, 0.5), std::domain_error);
  CHECK_THROWS_AS(FrictionParams(0.5, -0.01), std::domain_error);
  CHECK_THROWS_AS(FrictionParams(0.5, 1.01), std::domain_error);
}

TEST_CASE("gravity presets") {
  CHECK(earth_gravity == 9.81);
  CHECK(moon_gravity == 1.62);
  const SphereParams lunar = SphereParams::solid(0.4, 25.0, moon_gravity);
  CHECK(lunar.gravity == 1.62);
}

TEST_CASE("state finiteness checks") {
  MotionState s;
  CHECK(s.is_finite());
  s.omega = std::numeric_limits<double>::infinity();
  CHECK_FALSE(s.is_finite());

  AccelTriple a;
  CHECK(a.is_finite());
  a.a_h = std::numeric_limits<double>::quiet_NaN();
  CHECK_FALSE(a.is_finite());
}
