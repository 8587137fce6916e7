"""Smoke tests for the python bindings."""

import math

import pytest

import rodsphere as rs


def test_module_surface():
    assert rs.__version__
    assert rs.EARTH_GRAVITY == pytest.approx(9.81)
    assert rs.MOON_GRAVITY == pytest.approx(1.62)


def test_solid_sphere_inertia():
    assert rs.solid_sphere_inertia(25.0, 0.4) == pytest.approx(1.6, rel=1e-12)
    with pytest.raises(ValueError):
        rs.solid_sphere_inertia(0.0, 0.4)


def test_parameter_validation_maps_to_value_error():
    with pytest.raises(ValueError):
        rs.FrictionParams(1.5, 0.0)
    with pytest.raises(ValueError):
        rs.SphereParams(-0.4, 25.0, 1.6)


def test_geometry_roundtrip():
    length = rs.pole_extension_at(0.5, 0.4)
    assert rs.max_reach_angle(length, 0.4) == pytest.approx(0.5, abs=1e-10)
    assert rs.pole_extension_at(math.acos(0.8), 0.4) == pytest.approx(0.1, rel=1e-12)


def test_min_friction_threshold():
    sphere = rs.SphereParams(0.4, 25.0, 1.6)
    pole = rs.PoleParams(0.1, 0.05, 0.6, 0.1, 0.9)
    mu = rs.min_friction_for_forward(sphere, pole)
    assert abs(mu - 0.012) < 1e-3
    assert rs.forward_guarantee(math.pi, mu, sphere, pole)
    assert not rs.forward_guarantee(math.pi, mu - 1e-4, sphere, pole)


def test_push_reduction_identity():
    sphere = rs.SphereParams.solid(0.4, 25.0)
    acc = rs.friction_push_accels(0.5, 10.0, sphere, rs.FrictionParams(1.0, 1.0))
    ref = rs.obstacle_accels(0.5, 10.0, sphere, 1.0)
    assert acc.a_h == pytest.approx(ref.a_h, rel=1e-12)
    assert acc.omega_dot == pytest.approx(ref.omega_dot, rel=1e-12)


def test_integrate_constant_drive():
    init = rs.MotionState()
    init.zeta = 0.01
    result = rs.integrate(
        lambda s: rs.constant_A_rhs(10.0, s), init, rs.IntegratorSettings(1e-3, 1.0)
    )
    assert result.ok()
    samples = result.trajectory.samples
    assert len(samples) == 1001
    assert samples[-1].omega > samples[0].omega


def test_scenario_text_and_sweep():
    sc = rs.parse_scenario("[scenario]\nregime = leverage\n\n[initial]\nzeta = 4.0\n")
    assert sc.regime == rs.RegimeKind.Leverage
    acc = rs.regime_accels(sc, 1.5 * math.pi)
    assert acc.omega_dot == pytest.approx(
        sc.pole.lever_mass * sc.sphere.gravity * sc.pole.lever_arm / sc.sphere.inertia,
        rel=1e-12,
    )

    spec = rs.SweepSpec()
    spec.parameter = "mu_rs"
    spec.start = 0.0
    spec.stop = 1.0
    spec.count = 5
    spec.scenario = sc
    rows = rs.run_sweep(spec)
    assert [row.value for row in rows] == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])


def test_verify_reductions_report():
    report = rs.verify_reductions(200, 3, rs.LeverArmConvention.Consistent)
    assert report.all_passed()
    assert "seed=3" in report.to_text()


def test_force_vs_geometry_binding():
    sc = rs.Scenario()
    sc.regime = rs.RegimeKind.ConstantA
    sc.drive_constant = 0.15
    sc.initial.zeta = 0.01
    grid = rs.make_grid(rs.GridSpec())
    rows = rs.force_vs_geometry(sc, grid[1:])  # skip zeta = 0
    assert any(r.binding == rs.BindingSide.Geometry for r in rows)
    assert any(r.geom_limited_by == rs.EnvelopeLimit.MaxLength for r in rows)
