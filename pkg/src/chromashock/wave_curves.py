"""Wave curves through a left state for the chromatography system.

All rarefaction and shock loci admit closed forms.  Writing
K_L = sqrt(y_L**2 - 4 v_L) - y_L (positive for y_L < 0), the rarefaction
relations

    R1:  sqrt(y**2 - 4v) - y = (v / v_L) * K_L,
    R2:  sqrt(y**2 - 4v) - y = K_L,

solve to y = -(4v + m**2) / (2m) with m the right-hand side, and the shock
loci S1, S2 are the affine curves obtained from the Rankine-Hugoniot
conditions.  Each family's shock and rarefaction loci coincide as point
sets (straight lines with second-order contact at the anchor); the curves
differ in which portion is admissible.  The module also provides the
singular-shock boundary curves J5 and J6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, InternalConsistencyError, NotOnCurve
from .model_core import (
    DEFAULT_PARAMS,
    PhysParams,
    State,
    Triangle,
    discriminant,
    lambda1,
    lambda2,
)


class CurveKind(Enum):
    R1 = "R1"
    R2 = "R2"
    S1 = "S1"
    S2 = "S2"
    J5 = "J5"
    J6 = "J6"
    PARABOLA_4V = "Parabola4v"
    PARABOLA_GN = "ParabolaGN"


def anchor_k(U: State) -> float:
    """K = sqrt(y**2 - 4v) - y, the level of the 2-family curve through U."""
    d = discriminant(U)
    if d < 0.0:
        raise DomainError(f"elliptic anchor {U}")
    return math.sqrt(d) - U.y


@dataclass(frozen=True)
class Curve:
    """A wave curve identified by kind and anchor state.

    The anchor is ignored for the two parabolas.  K_L is cached since it
    parametrizes both R-curves through the anchor.
    """

    kind: CurveKind
    base: State | None = None
    params: PhysParams = DEFAULT_PARAMS

    def __post_init__(self):
        if self.kind not in (CurveKind.PARABOLA_4V, CurveKind.PARABOLA_GN):
            if self.base is None:
                raise DomainError(f"{self.kind} requires an anchor state")
            if self.base.y >= 0.0:
                raise DomainError(f"anchor must have y < 0, got {self.base}")
            if discriminant(self.base) < 0.0:
                raise DomainError(f"elliptic anchor {self.base}")
            object.__setattr__(self, "_k", anchor_k(self.base))

    @property
    def k_anchor(self) -> float:
        return self._k

    def y(self, v: float) -> float:
        return eval_curve(self, v, self.params)


def _rarefaction_y(m: float, v: float) -> float:
    if m <= 0.0:
        raise DomainError(f"nonpositive curve parameter m = {m}")
    return -(4.0 * v + m * m) / (2.0 * m)


def _j6_y(UL: State, v: float) -> float:
    # The speed s on J6 solves s**2 v**2 (2v - v_L) + s (y_L / v_L) v**2 + 1 = 0
    # (take the upper branch); then y = v y_L / v_L + s v (v - v_L).
    vL, yL = UL.v, UL.y
    den = 2.0 * v * vL * (2.0 * v - vL)
    if den == 0.0:
        raise DomainError(f"J6 singular at v = {v} (v = v_L / 2)")
    radicand = v * v * yL * yL - 8.0 * v * vL * vL + 4.0 * vL**3
    if radicand < 0.0:
        raise DomainError(f"J6 has no real solution at v = {v}")
    s = (-yL * v + math.sqrt(radicand)) / den
    return v * yL / vL + s * v * (v - vL)


def singular_speed(UL: State, U: State) -> float:
    """Generalized RH speed (F1(U_L) - F1(U)) / (v_L - v)."""
    if U.v == UL.v:
        raise DomainError("singular speed undefined for equal v")
    return (UL.y / UL.v - U.y / U.v) / (UL.v - U.v)


def eval_curve(curve: Curve, v: float, params: PhysParams = DEFAULT_PARAMS) -> float:
    """Evaluate y(v) on the given curve.

    All anchored curves return exactly y_L at v = v_L (removable
    singularities in the closed forms are tied off there).
    """
    if v <= 0.0:
        raise DomainError(f"curve evaluation needs v > 0, got {v}")
    kind = curve.kind
    if kind is CurveKind.PARABOLA_4V:
        return -2.0 * math.sqrt(v)
    if kind is CurveKind.PARABOLA_GN:
        return -math.sqrt(16.0 * v / 3.0)

    UL = curve.base
    if v == UL.v:
        return UL.y
    K = curve.k_anchor
    vL, yL = UL.v, UL.y
    root = math.sqrt(discriminant(UL))

    if kind is CurveKind.R1:
        return _rarefaction_y(v * K / vL, v)
    if kind is CurveKind.R2:
        return _rarefaction_y(K, v)
    if kind is CurveKind.S1:
        return v * (yL - root) / (2.0 * vL) + (yL + root) / 2.0
    if kind is CurveKind.S2:
        return v * (yL + root) / (2.0 * vL) + (yL - root) / 2.0
    if kind is CurveKind.J5:
        return yL * v / vL + v * (v - vL) * lambda1(UL)
    if kind is CurveKind.J6:
        y = _j6_y(UL, v)
        # the closed form is intricate; verify against the defining
        # property s_singular(U_L, U) = lambda2(U)
        U = State(v, y)
        if discriminant(U) < 0.0:
            raise DomainError(f"J6 point {U} is elliptic")
        s = singular_speed(UL, U)
        if abs(s - lambda2(U)) > 1e-6 * max(1.0, abs(s)):
            raise InternalConsistencyError(
                f"J6 closed form disagrees with defining relation at v={v}: "
                f"s={s}, lambda2={lambda2(U)}"
            )
        return y
    raise DomainError(f"unknown curve kind {kind}")


def shock_speed(UL: State, v: float, family: int) -> float:
    """Shock speed along S_family(U_L) at abscissa v."""
    if v <= 0.0:
        raise DomainError(f"need v > 0, got {v}")
    d = discriminant(UL)
    if d < 0.0:
        raise DomainError(f"elliptic anchor {UL}")
    root = math.sqrt(d)
    if family == 1:
        return (-UL.y - root) / (2.0 * v * UL.v)
    if family == 2:
        return (-UL.y + root) / (2.0 * v * UL.v)
    raise DomainError(f"family must be 1 or 2, got {family}")


@dataclass(frozen=True)
class SpecialPoints:
    """Named intersection points of the wave curves through an anchor.

    U_G : tangency of R1 with the parabola y**2 = 4v
    U_H : intersection of R1/S1 with line OB
    U_C : intersection of R2/S2 with line OA
    U_D : tangency of R2/S2 with the parabola y**2 = 4v
    U_E : intersection of R2/S2 with line OB
    U_F : intersection of the R1 continuation with line OA
    """

    U_G: State
    U_H: State
    U_C: State
    U_D: State
    U_E: State
    U_F: State


def special_points(UL: State, params: PhysParams = DEFAULT_PARAMS) -> SpecialPoints:
    """Closed-form special points for an anchor inside the triangle."""
    K = anchor_k(UL)
    vL = UL.v
    a = params.alpha
    a1, a2 = params.alpha1, params.alpha2
    tri = Triangle(params)

    y_G = -4.0 * vL / K
    U_G = State(y_G * y_G / 4.0, y_G)

    U_D = State(K * K / 4.0, -K)

    den_H = a * a * K * K - 2.0 * a1 * vL * K
    den_C = 4.0 * a * a - 2.0 * a2 * K
    den_E = 4.0 * a * a - 2.0 * a1 * K
    den_F = a * a * K * K - 2.0 * a2 * vL * K
    for name, den in (("U_H", den_H), ("U_C", den_C), ("U_E", den_E), ("U_F", den_F)):
        if abs(den) < 1e-14:
            raise DomainError(f"vanishing denominator computing {name}")

    v_H = (-4.0 * a * a * vL * vL + 2.0 * a * a2 * vL * K) / den_H
    v_C = (2.0 * a * a1 - a * a * K) * K / den_C
    v_E = (2.0 * a * a2 - a * a * K) * K / den_E
    v_F = (-4.0 * a * a * vL * vL + 2.0 * a * a1 * vL * K) / den_F

    return SpecialPoints(
        U_G=U_G,
        U_H=State(v_H, tri.ob_y(v_H)),
        U_C=State(v_C, tri.oa_y(v_C)),
        U_D=U_D,
        U_E=State(v_E, tri.ob_y(v_E)),
        U_F=State(v_F, tri.oa_y(v_F)),
    )


def lax_admissible(UL: State, U: State, family: int,
                   membership_tol: float = 1e-8) -> bool:
    """Lax admissibility of the shock (U_L, U) in the given family.

    Requires U to sit on S_family(U_L) up to the membership tolerance;
    admissible shocks are exactly those with v > v_L.
    """
    kind = CurveKind.S1 if family == 1 else CurveKind.S2
    curve = Curve(kind, UL)
    y_curve = eval_curve(curve, U.v)
    if abs(U.y - y_curve) > membership_tol * max(1.0, abs(U.y)):
        raise NotOnCurve(
            f"{U} not on {kind.value}({UL}): residual {abs(U.y - y_curve)}"
        )
    if U.isclose(UL):
        return False
    if discriminant(U) < 0.0:
        return False
    s = shock_speed(UL, U.v, family)
    if family == 1:
        return lambda1(UL) > s > lambda1(U)
    return lambda2(UL) > s > lambda2(U)
