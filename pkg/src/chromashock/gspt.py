"""Blow-up chart machinery and frozen planar invariant regions.

Chart coordinates a = y2**(15/11)/y1, r = y2**(15/11), b = eps/y2**(15/11)
desingularize the flow near the origin of the inner system coupled to the
slow variables (w1, w2, xi).  On the invariant slice r = b = 0 the
dynamics reduce to da/dzeta = -(5/11) a (a**(11/5) - 2) with corner
equilibria a3 = 0 and a2 = 2**(5/11); the three transversal eigenvalues
at each are verified against a numeric Jacobian of the full field.

The frozen planar systems U' = F(U) - s U - W anchor the connecting
orbits; their invariant regions (bounded by explicit curves phi_i) are
checked by sampled sign tests of the boundary-normal flow component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, SingularDenominator
from .model_core import (
    DEFAULT_PARAMS,
    PhysParams,
    State,
    flux,
    lambda1,
    lambda2,
)
from .riemann import singular_shock_data

A2 = 2.0 ** (5.0 / 11.0)
A3 = 0.0


@dataclass(frozen=True)
class RegularizationExponents:
    beta1: float = 1.5
    beta2: float = 10.0
    beta3: float = 5.5
    beta4: float = 3.0

    def __post_init__(self):
        if not self.beta1 > 1.0:
            raise DomainError(f"beta1 must exceed 1, got {self.beta1}")
        if not self.beta4 > 41.0 / 15.0:
            raise DomainError(f"beta4 must exceed 41/15, got {self.beta4}")
        if not 5.0 < self.beta3 < 6.0:
            raise DomainError(f"beta3 must lie in (5,6), got {self.beta3}")
        if self.beta2 != 10.0:
            raise DomainError(f"beta2 must equal 10, got {self.beta2}")


DEFAULT_EXPONENTS = RegularizationExponents()


@dataclass(frozen=True)
class Chart2Point:
    a: float
    r: float
    w1: float
    w2: float
    xi: float
    b: float

    def as_array(self) -> np.ndarray:
        return np.array([self.a, self.r, self.w1, self.w2, self.xi, self.b])


def chart2_from_scaled(Y, eps: float, w1: float = 0.0, w2: float = 0.0,
                       xi: float = 0.0) -> Chart2Point:
    """Map scaled inner coordinates (y1, y2, eps) into the chart."""
    y1, y2 = float(Y[0]), float(Y[1])
    if y1 <= 0.0 or y2 <= 0.0:
        raise DomainError(f"chart map needs positive (y1, y2), got {Y}")
    if eps < 0.0:
        raise DomainError(f"eps must be nonnegative, got {eps}")
    r = y2 ** (15.0 / 11.0)
    return Chart2Point(a=r / y1, r=r, w1=w1, w2=w2, xi=xi, b=eps / r)


def chart2_to_scaled(P: Chart2Point) -> tuple:
    """Inverse map: (y1, y2, eps)."""
    if P.r <= 0.0 or P.a <= 0.0:
        raise DomainError("inverse map needs a > 0, r > 0")
    return P.r / P.a, P.r ** (11.0 / 15.0), P.b * P.r


def _div(num: float, den: float, name: str) -> float:
    # fractional-power terms vanish identically when their numerator
    # does, even in limits where the denominator vanishes too
    if num == 0.0:
        return 0.0
    if den == 0.0:
        raise SingularDenominator(name)
    return num / den


def rhs_chart2(P: Chart2Point,
               exps: RegularizationExponents = DEFAULT_EXPONENTS) -> np.ndarray:
    """Desingularized chart vector field, transcribed term by term.

    Component order (a, r, w1, w2, xi, b).  Guards name the vanishing
    denominator among 4F - 5G - 1, 1 - Theta, and the chart quotients.
    """
    a, r, w1, w2, xi, b = P.a, P.r, P.w1, P.w2, P.xi, P.b
    if a < 0.0 or r < 0.0 or b < 0.0:
        raise DomainError(f"chart point outside the closed region: {P}")
    b1, b4 = exps.beta1, exps.beta4

    F = r ** (exps.beta3 - 1.0) * r ** (1.0 / 3.0) * a ** (2.0 / 3.0) \
        * b ** exps.beta3
    G = r ** (134.0 / 15.0) * a ** (16.0 / 15.0) * b ** 10
    theta = _div(b ** (b4 - 2.0) * r ** (b4 - 2.0) * r ** (4.0 / 15.0)
                 * (1.0 + F) ** 1.5, a, "Theta quotient a")

    denom = 4.0 * F - 5.0 * G - 1.0
    if denom == 0.0:
        raise SingularDenominator("4F - 5G - 1")
    one_m_theta = 1.0 - theta
    if one_m_theta == 0.0:
        raise SingularDenominator("1 - Theta")

    Fp = 1.0 + F
    Gp = 1.0 + G

    term_a = (
        Fp ** 1.5 / one_m_theta
        - xi * r ** (39.0 / 15.0) * a ** 2.6 * b ** 3 / Gp ** 1.5
        - r ** (26.0 / 15.0) * a * b ** 2 * w2
        + r ** b1 * r ** (26.0 / 15.0) * a * b ** (2.0 + b1) * xi
    )
    term_b = (
        _div(a ** 0.6 * Fp ** 1.5, Gp ** 1.5 * one_m_theta, "1 - Theta")
        - r ** 2.6 * a * b ** 3 * xi * one_m_theta / Fp ** 1.5
        - r ** (13.0 / 15.0) * b * w1
        - _div(r ** (2.0 / 15.0) * r ** (b1 - 1.0) * b ** (b1 - 1.0)
               * Fp ** 1.5, a * one_m_theta, "term quotient a")
    )

    da = a / denom * (
        -75.0 / 22.0 * Gp ** 2.5 * term_a
        + 60.0 / 11.0 * a ** (24.0 / 15.0) * Fp ** 2.5 * term_b
        - 5.0 * a ** (33.0 / 15.0) * Fp ** 4 / (Gp ** 0.5 * one_m_theta)
        + 2.5 * xi * r ** (39.0 / 15.0) * a ** (39.0 / 15.0) * b ** 3 * Fp * Gp
        + 2.5 * Fp ** 2.5 * Gp ** 2.5
        - 5.0 * b ** (b4 + 1.0) * r ** (13.0 / 15.0) * r ** b4
        * a ** (24.0 / 25.0) * xi * Fp ** 2.5 * Gp
        + 5.0 * b * w1 * r ** (13.0 / 15.0) * a ** (24.0 / 15.0) * Fp ** 2.5 * Gp
        - 2.5 * w2 * r ** (26.0 / 15.0) * a * b ** 2 * Fp * Gp ** 2.5
        + 5.0 * r ** (b1 - 1.0) * r ** (2.0 / 15.0) * a ** 0.6
        * b ** (b1 - 1.0) * Fp ** 4 * Gp / one_m_theta
        + 2.5 * xi * r ** (b1 + 1.0) * r ** (11.0 / 15.0) * a
        * b ** (2.0 + b1) * Fp * Gp ** 2.5
    )
    dr = 15.0 * r / (11.0 * denom) * (
        -2.5 * Gp ** 2.5 * term_a
        + 4.0 * a ** (24.0 / 15.0) * Fp ** 2.5 * term_b
    )
    dw1 = -r ** (16.0 / 3.0) * a ** (54.0 / 15.0) * b ** 6 / Fp ** 1.5 \
        + a ** (39.0 / 15.0) * b ** (4.0 + b4) * r ** b4 * r ** (54.0 / 15.0)
    dw2 = a ** (39.0 / 15.0) * b ** (4.0 + b1) * r ** b1 * r ** (54.0 / 15.0) \
        - r ** (67.0 / 15.0) * a ** 4.2 * b ** 5 / Gp ** 1.5
    dxi = r ** 3.6 * a ** (39.0 / 15.0) * b ** 4
    db = 15.0 * b / (11.0 * denom) * (
        2.5 * Gp ** 2.5 * term_a
        - 4.0 * a ** (24.0 / 15.0) * Fp ** 2.5 * term_b
    )
    return np.array([da, dr, dw1, dw2, dxi, db])


def reduced_rhs_a(a: float) -> float:
    """a-dynamics on the invariant slice r = b = 0."""
    return -(5.0 / 11.0) * a * (a ** 2.2 - 2.0)


@dataclass(frozen=True)
class EquilibriumReport:
    a_value: float
    eigen_a: float
    eigen_r: float
    eigen_b: float
    stability: str


def _bisect_root(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    flo = f(lo)
    if flo == 0.0:
        return lo
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0 or hi - lo < tol:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def reduced_roots(lo: float = 0.0, hi: float = 3.0, n_scan: int = 300) -> list:
    """All roots of the reduced a-dynamics in [lo, hi], by scan + bisection."""
    grid = np.linspace(lo, hi, n_scan)
    vals = np.array([reduced_rhs_a(a) for a in grid])
    roots = []
    if vals[0] == 0.0:
        roots.append(grid[0])
    for i in range(1, n_scan):
        if vals[i] == 0.0:
            roots.append(grid[i])
        elif vals[i - 1] * vals[i] < 0.0:
            roots.append(_bisect_root(reduced_rhs_a, grid[i - 1], grid[i]))
    return roots


def _jac_column(point: np.ndarray, j: int, exps, h: float) -> np.ndarray:
    one_sided = point[j] - h < 0.0 and j in (0, 1, 5)
    if one_sided:
        # second-order forward difference keeps the closed region
        p1, p2 = point.copy(), point.copy()
        p1[j] += h
        p2[j] += 2.0 * h
        f0 = rhs_chart2(Chart2Point(*point), exps)
        f1 = rhs_chart2(Chart2Point(*p1), exps)
        f2 = rhs_chart2(Chart2Point(*p2), exps)
        return (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h)
    p1, p2 = point.copy(), point.copy()
    p1[j] += h
    p2[j] -= h
    return (rhs_chart2(Chart2Point(*p1), exps)
            - rhs_chart2(Chart2Point(*p2), exps)) / (2.0 * h)


def numeric_jacobian(P: Chart2Point,
                     exps: RegularizationExponents = DEFAULT_EXPONENTS,
                     h: float = 1e-6) -> np.ndarray:
    point = P.as_array()
    return np.column_stack(
        [_jac_column(point, j, exps, h) for j in range(6)]
    )


def equilibria_and_eigen(
        exps: RegularizationExponents = DEFAULT_EXPONENTS) -> tuple:
    """Corner equilibria of the reduced slice with transversal eigenvalues.

    Returns one report per root of the reduced dynamics found in [0, 3]
    (expected: 0 and 2**(5/11)).  Eigenvalues come from the numeric
    Jacobian of the full chart field at (a_j, 0, w, s, 0); the slow
    components carry a triple zero.
    """
    reports = []
    for a_j in reduced_roots():
        P = Chart2Point(a=a_j, r=0.0, w1=1.0, w2=1.0, xi=0.5, b=0.0)
        J = numeric_jacobian(P, exps)
        eig_a, eig_r, eig_b = J[0, 0], J[1, 1], J[5, 5]
        n_pos = sum(e > 0 for e in (eig_a, eig_r, eig_b))
        stability = f"{n_pos}-unstable/{3 - n_pos}-stable transversally"
        reports.append(EquilibriumReport(
            a_value=a_j, eigen_a=float(eig_a), eigen_r=float(eig_r),
            eigen_b=float(eig_b), stability=stability,
        ))
    return tuple(reports)


@dataclass(frozen=True)
class FrozenParams:
    s: float
    W: tuple


def frozen_from_pair(UL: State, UR: State,
                     params: PhysParams = DEFAULT_PARAMS) -> tuple:
    """(FrozenParams for U_L, FrozenParams for U_R, data) of a pair."""
    data = singular_shock_data(UL, UR, params)
    WL = flux(UL, params) - data.s * UL.as_array()
    WR = flux(UR, params) - data.s * UR.as_array()
    return (FrozenParams(data.s, tuple(WL)),
            FrozenParams(data.s, tuple(WR)), data)


def frozen_planar_rhs(U: State, fp: FrozenParams,
                      params: PhysParams = DEFAULT_PARAMS) -> np.ndarray:
    """F(U) - s U - W, the frozen travelling-frame planar field."""
    return flux(U, params) - fp.s * U.as_array() - np.asarray(fp.W)


@dataclass(frozen=True)
class QPoints:
    q_L: Chart2Point
    q_R: Chart2Point
    ybar2: float


def q_points(UL: State, UR: State,
             params: PhysParams = DEFAULT_PARAMS) -> QPoints:
    """Corner-equilibrium anchor points of the connecting orbit.

    q_L sits on the a3 = 0 family with W = W_L, q_R on the a2 family
    with W = W_R; ybar2 is the sphere-normalization root
    ybar2**2 + ybar2**(30/11)/a2**2 = 1.
    """
    fpL, fpR, data = frozen_from_pair(UL, UR, params)
    if not data.k > 0.0:
        raise DomainError(f"pair has nonpositive deficit: {data}")
    ybar2 = _bisect_root(
        lambda t: t * t + t ** (30.0 / 11.0) / A2 ** 2 - 1.0, 0.0, 1.0)
    q_L = Chart2Point(A3, 0.0, fpL.W[0], fpL.W[1], data.s, 0.0)
    q_R = Chart2Point(A2, 0.0, fpR.W[0], fpR.W[1], data.s, 0.0)
    return QPoints(q_L=q_L, q_R=q_R, ybar2=ybar2)


@dataclass(frozen=True)
class InvariantRegionSpec:
    """One invariant region of a frozen planar system.

    kind 'source' is the wedge left of the anchor bounded by the line
    phi1 and the hyperbola-like phi2 (negatively invariant); 'sink' the
    region right of the anchor between the line phi1 and the parabola
    phi2 (positively invariant); 'sink-left' the region left of the
    anchor under phi3 (negatively invariant).
    """

    anchor: State
    E: float
    s: float
    kind: str = "source"

    def phi1(self, v: float) -> float:
        return self.anchor.y - self.E * (v - self.anchor.v)

    def phi2(self, v: float) -> float:
        if self.kind == "sink":
            return self.s * v * (v - self.anchor.v) \
                + self.anchor.y / self.anchor.v * v
        return (1.0 / self.s) * (1.0 / v - 1.0 / self.anchor.v) + self.anchor.y

    def phi3(self, v: float) -> float:
        return (1.0 / self.s) * (1.0 / v - 1.0 / self.anchor.v) + self.anchor.y

    @property
    def e_window(self) -> tuple:
        return (self.anchor.v * lambda1(self.anchor),
                self.anchor.v * lambda2(self.anchor))

    @property
    def e_in_window(self) -> bool:
        lo, hi = self.e_window
        return lo < self.E < hi


@dataclass(frozen=True)
class RegionReport:
    kind: str
    e_in_window: bool
    invariant: bool
    curve_results: dict = field(default_factory=dict)


def _curve_sign_check(fp, curve, v_samples, required_sign, params):
    """Count samples where nu = G . (-phi', 1) has the required sign.

    nu is the upward component of the flow across the curve; the
    required sign encodes both which side the region lies on and
    whether the region is positively or negatively invariant.
    """
    h = 1e-7
    n_pass, failures = 0, []
    for v in v_samples:
        slope = (curve(v + h) - curve(v - h)) / (2.0 * h)
        G = frozen_planar_rhs(State(v, curve(v)), fp, params)
        nu = -slope * G[0] + G[1]
        if required_sign * nu >= -1e-12:
            n_pass += 1
        else:
            failures.append((float(v), float(nu)))
    return n_pass, failures


def invariant_region_check(spec: InvariantRegionSpec, fp: FrozenParams,
                           n_samples: int = 200,
                           params: PhysParams = DEFAULT_PARAMS) -> RegionReport:
    """Sampled sign test of boundary-normal flow on each phi curve.

    For the negatively invariant regions the flow must point outward on
    every boundary sample; for the positively invariant region, inward.
    """
    va = spec.anchor.v
    margin = 1e-4 * va

    def y_zero_cross(curve, lo, hi):
        # curves are monotone where we need the y=0 crossing
        return _bisect_root(curve, lo, hi) \
            if curve(lo) * curve(hi) < 0.0 else lo

    if spec.kind == "source":
        # wedge {phi1 <= y <= phi2, v < v_anchor}: outward flow means
        # up through phi2 (upper) and down through phi1 (lower)
        v_lo = y_zero_cross(spec.phi2, 1e-3 * va, va - margin) + margin
        vs = np.linspace(v_lo, va - margin, n_samples)
        checks = {"phi1": (spec.phi1, -1), "phi2": (spec.phi2, +1)}
    elif spec.kind == "sink":
        # {phi1 <= y <= phi2, v > v_anchor}: inward flow means down
        # through phi2 (upper) and up through phi1 (lower)
        v_hi = va - spec.anchor.y / (spec.s * va)
        vs = np.linspace(va + margin, v_hi - margin, n_samples)
        checks = {"phi1": (spec.phi1, +1), "phi2": (spec.phi2, -1)}
    elif spec.kind == "sink-left":
        # {y <= min(phi3, 0), 0 < v < v_anchor}: phi3 caps the region
        # from above, so outward flow points up through it
        v_lo = y_zero_cross(spec.phi3, 1e-3 * va, va - margin) + margin
        vs = np.linspace(v_lo, va - margin, n_samples)
        checks = {"phi3": (spec.phi3, +1)}
    else:
        raise DomainError(f"unknown region kind {spec.kind}")

    results = {
        name: _curve_sign_check(fp, curve, vs, sign, params)
        for name, (curve, sign) in checks.items()
    }
    invariant = all(n_pass == n_samples for n_pass, _ in results.values())
    return RegionReport(
        kind=spec.kind, e_in_window=spec.e_in_window,
        invariant=invariant, curve_results=results,
    )
