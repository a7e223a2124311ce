"""Fast-scale homoclinic orbit: integration, asymptotics, tail integrals."""

import math

import numpy as np
import pytest

from chromashock.errors import (
    DomainError,
    InsufficientTail,
    NonConvergent,
)
from chromashock.inner_orbit import (
    C_ASYMPT,
    D_ASYMPT,
    P_ASYMPT,
    PARABOLA_COEF,
    R_ASYMPT,
    InnerOrbit,
    deficit_limit,
    fit_asymptotics,
    integrate_homoclinic,
    rhs_inner,
    tail_scaling,
)


@pytest.fixture(scope="module")
def orbit():
    return integrate_homoclinic((1.0, 1.0))


def test_rhs_rejects_nonpositive():
    with pytest.raises(DomainError):
        rhs_inner((0.0, 1.0))
    with pytest.raises(DomainError):
        rhs_inner((1.0, -0.5))


def test_parabola_is_invariant_for_the_field():
    # On y2 = coef * y1**(11/15) the field must be tangent to the curve:
    # dy2/deta - (11/15) coef y1**(-4/15) dy1/deta = 0.
    for y1 in np.logspace(-4, 1, 40):
        y2 = PARABOLA_COEF * y1 ** (11.0 / 15.0)
        f1, f2 = rhs_inner((y1, y2))
        normal = f2 - (11.0 / 15.0) * PARABOLA_COEF * y1 ** (-4.0 / 15.0) * f1
        scale = max(1.0, abs(f1), abs(f2))
        assert abs(normal) <= 1e-8 * scale


def test_homoclinic_reaches_floor_both_ends(orbit):
    assert orbit.eta[0] < 0.0 < orbit.eta[-1]
    assert max(orbit.y1[0], orbit.y2[0]) <= 2.0 * orbit.floor
    assert max(orbit.y1[-1], orbit.y2[-1]) <= 2.0 * orbit.floor
    assert np.all(np.diff(orbit.eta) > 0.0)
    assert np.all(orbit.y1 > 0.0) and np.all(orbit.y2 > 0.0)


def test_forward_tail_hugs_the_parabola(orbit):
    tail = orbit.eta > orbit.eta[-1] / 10.0
    ratio = orbit.y2[tail] / (PARABOLA_COEF * orbit.y1[tail] ** (11.0 / 15.0))
    assert np.max(np.abs(ratio - 1.0)) <= 0.05


def test_fit_asymptotics_targets(orbit):
    fit = fit_asymptotics(orbit)
    assert fit.p == pytest.approx(P_ASYMPT, rel=0.02)
    assert fit.r == pytest.approx(R_ASYMPT, rel=0.02)
    assert fit.c == pytest.approx(C_ASYMPT, rel=0.05)
    assert fit.d == pytest.approx(D_ASYMPT, rel=0.05)


def test_fit_rejects_short_orbit():
    eta = np.linspace(0.0, 10.0, 50)
    stub = InnerOrbit(eta=eta, y1=np.exp(-eta), y2=np.exp(-eta), floor=1e-8)
    with pytest.raises(InsufficientTail):
        fit_asymptotics(stub)


@pytest.mark.parametrize("beta3", [5.25, 5.5, 5.75])
@pytest.mark.parametrize("beta2", [8.0, 10.0])
def test_tail_scaling_exponents(beta2, beta3):
    eps = np.logspace(-4, -2, 9)
    e1, e2 = tail_scaling(beta2, beta3, eps)
    assert e1 == pytest.approx(6.0 - beta3, abs=0.03)
    assert e2 == pytest.approx(5.0 - beta2 / 2.0, abs=0.03)


def test_tail_scaling_needs_two_decades():
    with pytest.raises(DomainError):
        tail_scaling(10.0, 5.5, [1e-3, 2e-3, 3e-3])


def test_deficit_limit_matches_closed_form(orbit):
    # The scaled-profile deficit has the closed-form limit
    # (3/4) d**2 / c**(16/15) for the fitted tail constants, with the
    # exact asymptotic constants giving 0.79370.
    kappa = deficit_limit(orbit, np.logspace(-3, -1, 7))
    exact = 0.75 * D_ASYMPT ** 2 / C_ASYMPT ** (16.0 / 15.0)
    assert kappa == pytest.approx(exact, rel=0.01)


def test_deficit_limit_diverges_without_tail_extension(orbit):
    with pytest.raises(NonConvergent):
        deficit_limit(orbit, np.logspace(-3, -1, 7), extend_tail=False)
