"""Inner fast-fast system: homoclinic orbits and deficit integrals.

The planar system

    dy1/deta = (5/2) (y1**(18/5)/y2**3 - 2 y1**(7/5)),
    dy2/deta = (5/2) y1**(13/5)/y2**2 - 4 y2 y1**(2/5),

has the origin as its unique equilibrium; orbits starting in the open
first quadrant are homoclinic to it.  The curve y2 = 2**(1/3) y1**(11/15)
is invariant, and forward tails decay like y1 ~ c eta**(-5/2),
y2 ~ d eta**(-11/6) with c = (2/3)**(5/2), d = 3**(1/3) (2/3)**(13/6).
The module also evaluates the two regularized tail integrals whose
epsilon-scalings produce the generalized Rankine-Hugoniot deficit, and
the deficit integral kappa itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad, solve_ivp

from .errors import (
    BlowUp,
    DomainError,
    InsufficientTail,
    NonConvergent,
    QuadratureFailure,
)

C_ASYMPT = (2.0 / 3.0) ** 2.5
D_ASYMPT = 3.0 ** (1.0 / 3.0) * (2.0 / 3.0) ** (13.0 / 6.0)
P_ASYMPT = 2.5
R_ASYMPT = 11.0 / 6.0
PARABOLA_COEF = 2.0 ** (1.0 / 3.0)   # y2 = coef * y1**(11/15) is invariant

FLOOR = 1e-8
BOX = 1e3


def rhs_inner(Y) -> np.ndarray:
    """Right-hand side of the inner system at (y1, y2)."""
    y1, y2 = float(Y[0]), float(Y[1])
    if y1 <= 0.0 or y2 <= 0.0:
        raise DomainError(f"inner RHS needs positive coordinates, got {Y}")
    return np.array([
        2.5 * (y1 ** 3.6 / y2 ** 3 - 2.0 * y1 ** 1.4),
        2.5 * y1 ** 2.6 / y2 ** 2 - 4.0 * y2 * y1 ** 0.4,
    ])


def _rhs_log(eta, L):
    # derivatives of (log y1, log y2); positivity is automatic here
    e1 = math.exp(2.6 * L[0] - 3.0 * L[1])
    e2 = math.exp(0.4 * L[0])
    return (2.5 * (e1 - 2.0 * e2), 2.5 * e1 - 4.0 * e2)


@dataclass(frozen=True)
class InnerOrbit:
    """Sampled homoclinic orbit; eta is strictly increasing."""

    eta: np.ndarray
    y1: np.ndarray
    y2: np.ndarray
    floor: float = FLOOR

    @property
    def n(self) -> int:
        return self.eta.size


def _integrate_leg(L0, t_end, tol):
    floor_log = math.log(FLOOR)
    box_log = math.log(BOX)

    def hit_floor(t, L):
        return max(L) - floor_log
    hit_floor.terminal = True
    hit_floor.direction = -1

    def hit_box(t, L):
        return max(L) - box_log
    hit_box.terminal = True
    hit_box.direction = 1

    sol = solve_ivp(_rhs_log, (0.0, t_end), L0, method="LSODA",
                    rtol=tol, atol=1e-12, events=(hit_floor, hit_box),
                    dense_output=False, max_step=abs(t_end) / 50.0)
    if not sol.success:
        raise BlowUp(f"integration failed: {sol.message}")
    if sol.t_events[1].size:
        raise BlowUp("trajectory left the bounding box")
    if not sol.t_events[0].size:
        raise BlowUp(
            f"origin floor not reached by eta = {t_end}; "
            "start may be off the homoclinic family"
        )
    return sol


def integrate_homoclinic(Y0, eta_span=(-60.0, 5e4),
                         tol: float = 1e-10) -> InnerOrbit:
    """Integrate forward and backward from Y0 until the origin floor.

    Both legs must reach max(y1, y2) < floor inside eta_span, confirming
    the orbit is homoclinic to the origin.  Integration runs in log
    coordinates, which enforces positivity exactly.
    """
    y1, y2 = float(Y0[0]), float(Y0[1])
    if y1 <= 0.0 or y2 <= 0.0:
        raise DomainError(f"start must be strictly positive, got {Y0}")
    L0 = (math.log(y1), math.log(y2))

    fwd = _integrate_leg(L0, eta_span[1], tol)
    bwd = _integrate_leg(L0, eta_span[0], tol)

    eta = np.concatenate([bwd.t[::-1][:-1], fwd.t])
    L = np.concatenate([bwd.y[:, ::-1][:, :-1], fwd.y], axis=1)
    return InnerOrbit(eta=eta, y1=np.exp(L[0]), y2=np.exp(L[1]))


@dataclass(frozen=True)
class AsymptoticFit:
    c: float
    d: float
    p: float
    r: float


def fit_asymptotics(orbit: InnerOrbit) -> AsymptoticFit:
    """Power-law fit of the forward tail over its final decade.

    Fits log y_i against log eta; requires at least two decades of
    decaying tail data (eta spanning a factor of 100 past eta = 1).
    """
    eta_max = orbit.eta[-1]
    if eta_max < 100.0:
        raise InsufficientTail(f"forward tail ends at eta = {eta_max}")
    mask = orbit.eta >= eta_max / 10.0
    if np.count_nonzero(mask) < 10:
        raise InsufficientTail("too few samples in the final decade")
    log_eta = np.log(orbit.eta[mask])
    slope1, icpt1 = np.polyfit(log_eta, np.log(orbit.y1[mask]), 1)
    slope2, icpt2 = np.polyfit(log_eta, np.log(orbit.y2[mask]), 1)
    return AsymptoticFit(
        c=math.exp(icpt1), d=math.exp(icpt2), p=-slope1, r=-slope2,
    )


def _tail_integral_pair(eps: float, beta2: float, beta3: float,
                        eta0: float = 1.0) -> tuple:
    """The two regularized tail integrals at a single epsilon.

    Both are integrated by parts; the remaining integrals are computed
    by quadrature after the trigonometric substitutions
    eta**(-5/3) = eps**beta3 tan(theta)**2 (first component) and
    eta**(-8/3) = eps**beta2 tan(theta)**2 (second).
    """
    g0 = eta0 ** (-11.0 / 6.0) * (eta0 ** (-5.0 / 3.0) + eps ** beta3) ** -1.5
    theta0 = math.atan(math.sqrt(eta0 ** (-5.0 / 3.0) / eps ** beta3))
    val1, err1 = quad(math.cos, 0.0, theta0)
    if err1 > 1e-10:
        raise QuadratureFailure(f"first tail integral error {err1}")
    I1 = eps ** 6 * eta0 * g0 \
        + eps ** (6.0 - beta3) * 1.2 * val1

    h0 = eta0 ** (-11.0 / 3.0) * (eta0 ** (-8.0 / 3.0) + eps ** beta2) ** -1.5
    theta1 = math.atan(math.sqrt(eta0 ** (-8.0 / 3.0) / eps ** beta2))
    val2, err2 = quad(math.sin, 0.0, theta1)
    if err2 > 1e-10:
        raise QuadratureFailure(f"second tail integral error {err2}")
    I2 = eps ** 5 * eta0 * h0 \
        + eps ** (5.0 - beta2 / 2.0) * 0.75 * val2
    return I1, I2


def tail_scaling(beta2: float, beta3: float, eps_grid) -> tuple:
    """Fitted epsilon-exponents (e1, e2) of the two tail integrals.

    Expected slopes are 6 - beta3 and 5 - beta2/2.
    """
    eps = np.asarray(eps_grid, dtype=float)
    if eps.size < 3 or eps.max() / eps.min() < 100.0:
        raise DomainError("eps_grid must span at least two decades")
    vals = np.array([_tail_integral_pair(e, beta2, beta3) for e in eps])
    log_eps = np.log(eps)
    e1 = np.polyfit(log_eps, np.log(vals[:, 0]), 1)[0]
    e2 = np.polyfit(log_eps, np.log(vals[:, 1]), 1)[0]
    return float(e1), float(e2)


def deficit_limit(orbit: InnerOrbit, eps_grid, beta2: float = 10.0,
                  extend_tail: bool = True, cauchy_tol: float = 1e-3) -> float:
    """Limit of kappa(eps) = eps**5 * int y2**2/(y1**(16/15)+eps**beta2)**(3/2).

    The sampled part of the orbit is integrated by the trapezoidal rule;
    beyond the forward floor the fitted power laws continue the
    integrand, for which the tail integral has a closed form.  The
    returned value is the Richardson extrapolant (corrections scale as
    eps**5); convergence is certified by a relative Cauchy criterion
    over the last three epsilon samples.
    """
    eps = np.sort(np.asarray(eps_grid, dtype=float))[::-1]
    if eps.size < 3:
        raise DomainError("need at least three epsilon samples")

    fit = fit_asymptotics(orbit)
    a_coef = fit.c ** (16.0 / 15.0)
    eta_f = orbit.eta[-1]
    w_f = eta_f ** (-4.0 / 3.0)

    kappas = np.empty(eps.size)
    for i, e in enumerate(eps):
        integrand = orbit.y2 ** 2 / (orbit.y1 ** (16.0 / 15.0) + e ** beta2) ** 1.5
        val = e ** 5 * np.trapezoid(integrand, orbit.eta)
        if extend_tail:
            # int_{eta_f}^inf d^2 eta^{-11/3} (a eta^{-8/3} + eps^b)^{-3/2}
            # = (3/4)(d^2/a) [eps^{-b/2} - (a w_f^2 + eps^b)^{-1/2}]
            val += e ** 5 * 0.75 * fit.d ** 2 / a_coef * (
                e ** (-beta2 / 2.0)
                - (a_coef * w_f ** 2 + e ** beta2) ** -0.5
            )
        kappas[i] = val

    # Richardson extrapolation in eps**5 over consecutive pairs
    extrap = []
    for i in range(1, eps.size):
        e0, e1 = eps[i - 1], eps[i]
        k0, k1 = kappas[i - 1], kappas[i]
        extrap.append((k1 * e0 ** 5 - k0 * e1 ** 5) / (e0 ** 5 - e1 ** 5))

    tail = kappas[-3:]
    diffs = np.abs(np.diff(tail)) / np.abs(tail[1:])
    if not np.all(diffs < math.sqrt(cauchy_tol)) or tail[-1] <= 0.0:
        raise NonConvergent(
            f"kappa(eps) not Cauchy over the last three samples: {tail}"
        )
    result = extrap[-1]
    if abs(result - extrap[-2]) > cauchy_tol * abs(result):
        raise NonConvergent(
            f"extrapolants not settled: {extrap[-2]} vs {result}"
        )
    return float(result)
