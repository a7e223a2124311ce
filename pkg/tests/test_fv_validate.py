"""Finite-volume harness: scheme sanity, front tracking, spike growth."""

import numpy as np
import pytest

from chromashock.errors import DomainError, NoFront
from chromashock.model_core import State
from chromashock.riemann import solve
from chromashock.fv_validate import (
    Grid1D,
    SimConfig,
    l1_error_vs_exact,
    measure_front_speed,
    simulate,
    spike_excess,
)
from chromashock.wave_curves import Curve, CurveKind, eval_curve

UL0 = State(1.0, -3.0)
UR6 = State(8.0, -5.66)


def _two_shock_datum():
    UR = State(2.0, eval_curve(Curve(CurveKind.S2, UL0), 2.0))
    return UL0, UR


def test_grid_and_config_validation():
    with pytest.raises(DomainError):
        Grid1D(0.0, 1.0, 8)
    with pytest.raises(DomainError):
        Grid1D(1.0, 0.0, 100)
    with pytest.raises(DomainError):
        SimConfig(cfl=0.6)
    with pytest.raises(DomainError):
        SimConfig(scheme="upwind")


def test_constant_state_is_a_fixed_point():
    grid = Grid1D(-1.0, 1.0, 64)
    for scheme in ("LxF", "LLxF"):
        snaps = simulate(UL0, UL0, grid, SimConfig(t_end=0.2, scheme=scheme))
        final = snaps[-1]
        np.testing.assert_allclose(final.v, UL0.v, rtol=0, atol=1e-13)
        np.testing.assert_allclose(final.y, UL0.y, rtol=0, atol=1e-13)


def test_snapshots_at_requested_times():
    grid = Grid1D(-1.0, 1.0, 64)
    times = [0.05, 0.1, 0.15]
    snaps = simulate(UL0, UL0, grid, SimConfig(t_end=0.2),
                     snapshot_times=times)
    got = [s.t for s in snaps]
    np.testing.assert_allclose(got[:3], times, atol=1e-12)
    assert got[-1] == pytest.approx(0.2, abs=1e-12)


def test_two_shock_front_speed_coarse():
    UL, UR = _two_shock_datum()
    sol = solve(UL, UR)
    exact = sol.waves[-1].speed
    grid = Grid1D(-1.0, 2.0, 400)
    snaps = simulate(UL, UR, grid, SimConfig(t_end=1.0),
                     snapshot_times=[0.4, 0.6, 0.8, 1.0])
    measured = measure_front_speed(snaps)
    assert measured == pytest.approx(exact, rel=0.05)


def test_l1_error_decreases_under_refinement():
    UL, UR = _two_shock_datum()
    sol = solve(UL, UR)
    errs = []
    for n in (200, 800):
        grid = Grid1D(-1.0, 2.0, n)
        snaps = simulate(UL, UR, grid, SimConfig(t_end=0.8))
        errs.append(l1_error_vs_exact(snaps[-1], sol))
    assert errs[1] < errs[0]


def test_no_front_on_constant_data():
    grid = Grid1D(-1.0, 1.0, 64)
    snaps = simulate(UL0, UL0, grid, SimConfig(t_end=0.2),
                     snapshot_times=[0.05, 0.1, 0.15])
    with pytest.raises(NoFront):
        measure_front_speed(snaps)


def test_singular_datum_grows_a_spike():
    grid = Grid1D(-1.0, 1.5, 800)
    snaps = simulate(UL0, UR6, grid, SimConfig(t_end=1.0))
    excess_yv, excess_vy = spike_excess(snaps[-1], UL0, UR6)
    assert excess_yv > 0.0
    assert excess_yv > excess_vy
    assert excess_vy <= 1e-8  # monotone scheme: no overshoot in v - y
