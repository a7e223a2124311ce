"""Riemann problem classification and exact solution.

A datum (U_L, U_R) falls into one of six regions: four classical
two-wave regions (shock/rarefaction combinations), a vacuum-path region
whose solution passes along the parabola y**2 = 4v, and a region with no
classical solution where the weak limit is a singular shock carrying a
growing delta function in the second component.

The construction exploits the fact that 2-family curves are level sets
of K(U) = sqrt(y**2 - 4v) - y, so the intermediate state sits on the
1-curve through U_L at the level K(U_R).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from scipy.optimize import brentq

from .errors import (
    DomainError,
    EqualV,
    InternalConsistencyError,
    NoIntermediate,
)
from .model_core import (
    DEFAULT_PARAMS,
    PhysParams,
    State,
    discriminant,
    flux,
    lambda1,
    lambda2,
)
from .wave_curves import Curve, CurveKind, anchor_k, eval_curve, shock_speed

_TIE_TOL = 1e-12
# Waves with relative strength below this snap to zero strength, so data
# quoted to single precision on a region boundary classify as the pure
# one-wave pattern instead of sprouting a spurious hairline wave.
_STRENGTH_TOL = 1e-7


@dataclass(frozen=True)
class Shock:
    family: int
    speed: float
    left: State
    right: State

    @property
    def xi_lo(self) -> float:
        return self.speed

    xi_hi = xi_lo


@dataclass(frozen=True)
class Rarefaction:
    family: int
    xi_lo: float
    xi_hi: float
    left: State
    right: State


@dataclass(frozen=True)
class ParabolaRarefaction:
    """Centred fan along the vacuum parabola y**2 = 4v, speed v**(-3/2)."""

    xi_lo: float
    xi_hi: float
    left: State
    right: State


@dataclass(frozen=True)
class SingularShock:
    speed: float
    deficit: float
    left: State
    right: State

    @property
    def xi_lo(self) -> float:
        return self.speed

    xi_hi = xi_lo


@dataclass(frozen=True)
class RiemannSolution:
    region: int
    waves: tuple
    states: tuple


@dataclass(frozen=True)
class SingularShockData:
    s: float
    k: float
    oc1: bool
    oc2: bool


@dataclass(frozen=True)
class DeltaReport:
    """Delta content at a point: mass in y grows linearly at rate k."""

    s: float
    k: float


def _span(wave) -> tuple:
    if isinstance(wave, (Shock, SingularShock)):
        return wave.speed, wave.speed
    return wave.xi_lo, wave.xi_hi


def singular_shock_data(UL: State, UR: State,
                        params: PhysParams = DEFAULT_PARAMS) -> SingularShockData:
    """Speed and deficit of the (generalized) single discontinuity.

    s satisfies the first Rankine-Hugoniot equation exactly; k is the
    residual of the second.  For U_R on either classical shock curve
    through U_L, k vanishes.
    """
    if UL.v == UR.v:
        raise EqualV("singular speed undefined for v_L = v_R")
    if discriminant(UL) < 0.0 or discriminant(UR) < 0.0:
        raise DomainError("both states must be hyperbolic")
    FL, FR = flux(UL, params), flux(UR, params)
    s = (FL[0] - FR[0]) / (UL.v - UR.v)
    k = FL[1] - FR[1] - s * (UL.y - UR.y)
    return SingularShockData(
        s=s, k=k, oc1=s < lambda1(UL), oc2=lambda2(UR) < s,
    )


def _intermediate_v(UL: State, K_target: float) -> float:
    """Root-find v_M on the 1-curve through U_L with K(U_M) = K_target.

    Along the 1-curve, K is monotone increasing in v above the parabola
    tangency, so a bisection-style bracketed solve is safe.  The closed
    form v_M = v_L K_target / K_L seeds the bracket.
    """
    KL = anchor_k(UL)
    curve = Curve(CurveKind.S1, UL)

    def g(v):
        return anchor_k(State(v, eval_curve(curve, v))) - K_target

    v_seed = UL.v * K_target / KL
    lo, hi = 0.5 * v_seed, 2.0 * v_seed
    if g(lo) > 0.0 or g(hi) < 0.0:
        raise NoIntermediate(
            f"failed to bracket intermediate state for K = {K_target}"
        )
    v_M = brentq(g, lo, hi, xtol=1e-13, rtol=1e-15)
    if abs(v_M - v_seed) > 1e-8 * max(1.0, v_seed):
        raise InternalConsistencyError(
            f"intermediate root {v_M} disagrees with closed form {v_seed}"
        )
    return v_M


def _classical_attempt(UL: State, UR: State):
    """Try the two-wave construction.  Returns (region, U_M) or None.

    Returns None when no admissible ordered construction exists (the
    datum then belongs to region 5 or 6).
    """
    KL = anchor_k(UL)
    KR = anchor_k(UR)
    K_G = 4.0 * UL.v / KL
    if KR < K_G - _TIE_TOL:
        return None  # 1-curve exhausted before reaching the level of U_R
    v_M = _intermediate_v(UL, KR)
    y_M = eval_curve(Curve(CurveKind.S1, UL), v_M)
    UM = State(v_M, y_M)

    one_shock = v_M > UL.v + _TIE_TOL
    two_shock = UR.v > v_M + _TIE_TOL
    strength1 = abs(v_M - UL.v) > _STRENGTH_TOL * max(1.0, UL.v)
    strength2 = abs(UR.v - v_M) > _STRENGTH_TOL * max(1.0, v_M)

    # fastest speed of wave 1 and slowest speed of wave 2 must be ordered
    hi1 = shock_speed(UL, v_M, 1) if one_shock else lambda1(UM)
    lo2 = shock_speed(UM, UR.v, 2) if two_shock else lambda2(UM)
    if strength1 and strength2 and hi1 >= lo2:
        return None

    # zero-strength waves count as shocks for region bookkeeping, so a
    # pure 2-shock datum lands in region 1
    eff1 = one_shock or not strength1
    eff2 = two_shock or not strength2
    region = 1 if (eff1 and eff2) else 2 if not (eff1 or eff2) \
        else 3 if eff2 else 4
    return region, UM


def classify_pair(UL: State, UR: State,
                  params: PhysParams = DEFAULT_PARAMS) -> int:
    """Region 1-6 of the Riemann datum.

    Regions 1-4 are the classical two-wave combinations, region 5 the
    vacuum-path solutions through the parabola, region 6 the complement
    (singular shocks).  A region-6 result that fails the overcompressive
    inequalities raises a warning rather than being reclassified.
    """
    if discriminant(UL) <= 0.0 or UL.y >= 0.0:
        raise DomainError(f"left state {UL} not strictly hyperbolic with y < 0")
    if discriminant(UR) < 0.0:
        raise DomainError(f"right state {UR} not hyperbolic")
    if UR.y >= 0.0:
        raise DomainError(f"right state {UR} not reachable (y >= 0)")
    if UR.isclose(UL):
        return 1

    attempt = _classical_attempt(UL, UR)
    if attempt is not None:
        return attempt[0]

    if anchor_k(UR) < 4.0 * UL.v / anchor_k(UL) - _TIE_TOL:
        return 5

    data = singular_shock_data(UL, UR, params)
    if not (data.k > 0.0 and data.oc1 and data.oc2):
        warnings.warn(
            "datum outside regions 1-5 fails the singular-shock "
            f"admissibility inequalities: {data}",
            RuntimeWarning,
        )
    return 6


def _rarefaction(family: int, left: State, right: State) -> Rarefaction:
    lam = lambda1 if family == 1 else lambda2
    return Rarefaction(family, lam(left), lam(right), left, right)


def _two_wave(UL: State, UM: State, UR: State) -> list:
    waves = []
    if not UM.isclose(UL, tol=_STRENGTH_TOL):
        if UM.v > UL.v:
            waves.append(Shock(1, shock_speed(UL, UM.v, 1), UL, UM))
        else:
            waves.append(_rarefaction(1, UL, UM))
    if not UR.isclose(UM, tol=_STRENGTH_TOL):
        if UR.v > UM.v:
            waves.append(Shock(2, shock_speed(UM, UR.v, 2), UM, UR))
        else:
            waves.append(_rarefaction(2, UM, UR))
    return waves


def solve(UL: State, UR: State,
          params: PhysParams = DEFAULT_PARAMS) -> RiemannSolution:
    """Construct the self-similar solution of the Riemann problem."""
    region = classify_pair(UL, UR, params)

    if UR.isclose(UL):
        return RiemannSolution(region=1, waves=(), states=(UL,))

    if region <= 4:
        _, UM = _classical_attempt(UL, UR)
        waves = _two_wave(UL, UM, UR)
        states = [UL] + [w.right for w in waves]
        return RiemannSolution(region, tuple(waves), tuple(states))

    if region == 5:
        KL = anchor_k(UL)
        KR = anchor_k(UR)
        y_G = -4.0 * UL.v / KL
        U_G = State(y_G * y_G / 4.0, y_G)
        U_AB = State(KR * KR / 4.0, -KR)
        waves = []
        if not U_G.isclose(UL):
            waves.append(_rarefaction(1, UL, U_G))
        waves.append(ParabolaRarefaction(
            U_G.v ** -1.5, U_AB.v ** -1.5, U_G, U_AB))
        if not UR.isclose(U_AB):
            waves.append(_rarefaction(2, U_AB, UR))
        states = [UL] + [w.right for w in waves]
        return RiemannSolution(5, tuple(waves), tuple(states))

    data = singular_shock_data(UL, UR, params)
    if not (data.k > 0.0 and data.oc1 and data.oc2):
        raise InternalConsistencyError(
            "no classical solution exists but the singular-shock "
            f"admissibility conditions fail: {data}"
        )
    wave = SingularShock(data.s, data.k, UL, UR)
    return RiemannSolution(6, (wave,), (UL, UR))


def _fan_state(wave, xi: float) -> State:
    """State inside a rarefaction fan at similarity coordinate xi."""
    if isinstance(wave, ParabolaRarefaction):
        v = xi ** (-2.0 / 3.0)
        return State(v, -2.0 * math.sqrt(v))
    kind = CurveKind.R1 if wave.family == 1 else CurveKind.R2
    curve = Curve(kind, wave.left)
    lam = lambda1 if wave.family == 1 else lambda2

    def g(v):
        return lam(State(v, eval_curve(curve, v))) - xi

    lo, hi = sorted((wave.left.v, wave.right.v))
    g_lo, g_hi = g(lo), g(hi)
    if g_lo * g_hi > 0.0:
        # xi lies in the fan's speed range by construction, so a same-sign
        # bracket only happens through endpoint rounding; clamp to the
        # nearer endpoint instead of failing.
        v = lo if abs(g_lo) <= abs(g_hi) else hi
    else:
        v = brentq(g, lo, hi, xtol=1e-13, rtol=1e-15)
    return State(v, eval_curve(curve, v))


def evaluate(sol: RiemannSolution, xi: float,
             params: PhysParams = DEFAULT_PARAMS):
    """Pointwise solution at x/t = xi.

    Returns (State, DeltaReport or None); the report is non-nil only at
    the position of a singular shock, where the second component carries
    a delta function growing at rate k.
    """
    report = None
    for wave in sol.waves:
        if isinstance(wave, SingularShock) and abs(xi - wave.speed) <= 1e-12:
            report = DeltaReport(wave.speed, wave.deficit)
    state = sol.states[0]
    for i, wave in enumerate(sol.waves):
        lo, hi = _span(wave)
        if xi < lo:
            return sol.states[i], report
        if xi <= hi and not isinstance(wave, (Shock, SingularShock)):
            return _fan_state(wave, xi), report
        state = sol.states[i + 1]
    return state, report
