"""Core model definitions for the 2x2 chromatography conservation-law system.

The system is

    v_t + (y/v)_x = 0,
    y_t + (1/v)_x = 0,

with conserved state U = (v, y) and flux F(U) = (y/v, 1/v).  This module
holds the physical parameters (adsorption constants), the transforms between
physical concentrations and conserved variables, the flux/Jacobian and
eigenstructure, and the classification of state space (hyperbolic region,
genuine nonlinearity, and the curvilinear triangle of physically meaningful
states).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateState, DomainError

#: relative floor below which v counts as vacuum-degenerate
DEGENERACY_REL_FLOOR = 1e-12


@dataclass(frozen=True)
class PhysParams:
    """Adsorption constants alpha1 < alpha2 and the derived cube-root mean."""

    alpha1: float = 1.0
    alpha2: float = 2.0

    def __post_init__(self):
        if not (0.0 < self.alpha1 < self.alpha2):
            raise DomainError(
                f"need 0 < alpha1 < alpha2, got ({self.alpha1}, {self.alpha2})"
            )

    @property
    def alpha(self) -> float:
        return (self.alpha1 * self.alpha2) ** (1.0 / 3.0)

    @property
    def strictly_gn(self) -> bool:
        """True iff alpha2/3 < alpha1 < 3*alpha2 (strict-GN parameter window)."""
        return self.alpha2 / 3.0 < self.alpha1 < 3.0 * self.alpha2

    @property
    def v_floor(self) -> float:
        return DEGENERACY_REL_FLOOR * self.alpha


DEFAULT_PARAMS = PhysParams()


@dataclass(frozen=True)
class State:
    """A point (v, y) in conserved variables."""

    v: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.v) and math.isfinite(self.y)):
            raise DomainError(f"non-finite state ({self.v}, {self.y})")

    def as_array(self) -> np.ndarray:
        return np.array([self.v, self.y], dtype=float)

    def isclose(self, other: "State", tol: float = 1e-12) -> bool:
        scale = max(1.0, abs(self.v), abs(self.y))
        return abs(self.v - other.v) <= tol * scale and abs(self.y - other.y) <= tol * scale


@dataclass(frozen=True)
class PhysState:
    """Concentrations (u1, u2) of the two chemical components."""

    u1: float
    u2: float


@dataclass(frozen=True)
class CharField:
    """One characteristic family: index, speed, and eigenvector."""

    family: int
    lam: float
    eigvec: tuple


class Elliptic:
    """Marker returned by :func:`eigen` for states with y**2 < 4v."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Elliptic"


ELLIPTIC = Elliptic()


class Hyperbolicity(Enum):
    HYPERBOLIC = "hyperbolic"
    BOUNDARY = "boundary"
    ELLIPTIC = "elliptic"


class GNClass(Enum):
    GN = "gn"
    NOT_GN = "not_gn"
    ON_GN_CURVE = "on_gn_curve"


def flux(U: State, params: PhysParams = DEFAULT_PARAMS) -> np.ndarray:
    """Flux F(U) = (y/v, 1/v).  Raises DegenerateState near v = 0."""
    if abs(U.v) < params.v_floor:
        raise DegenerateState(f"v = {U.v} below degeneracy floor")
    return np.array([U.y / U.v, 1.0 / U.v])


def jacobian(U: State, params: PhysParams = DEFAULT_PARAMS) -> np.ndarray:
    """Jacobian dF/dU of the flux."""
    if abs(U.v) < params.v_floor:
        raise DegenerateState(f"v = {U.v} below degeneracy floor")
    v, y = U.v, U.y
    return np.array([[-y / v**2, 1.0 / v], [-1.0 / v**2, 0.0]])


def discriminant(U: State) -> float:
    """y**2 - 4v; positive in the strictly hyperbolic region."""
    return U.y * U.y - 4.0 * U.v


def lambda1(U: State) -> float:
    d = discriminant(U)
    if d < 0.0:
        raise DomainError(f"elliptic state {U}")
    return (-U.y - math.sqrt(d)) / (2.0 * U.v**2)


def lambda2(U: State) -> float:
    d = discriminant(U)
    if d < 0.0:
        raise DomainError(f"elliptic state {U}")
    return (-U.y + math.sqrt(d)) / (2.0 * U.v**2)


def eigen(U: State, params: PhysParams = DEFAULT_PARAMS):
    """Characteristic fields of the Jacobian at U.

    Returns a (CharField, CharField) pair with lam1 <= lam2 when strictly
    hyperbolic, a single coincident CharField on y**2 = 4v, and the ELLIPTIC
    marker when y**2 < 4v.
    """
    if abs(U.v) < params.v_floor:
        raise DegenerateState(f"v = {U.v} below degeneracy floor")
    v, y = U.v, U.y
    d = y * y - 4.0 * v
    if d < 0.0:
        return ELLIPTIC
    root = math.sqrt(d)
    if d == 0.0:
        lam = -y / (2.0 * v**2)
        return CharField(family=1, lam=lam, eigvec=(2.0 * v, y))
    f1 = CharField(family=1, lam=(-y - root) / (2.0 * v**2), eigvec=(2.0 * v, y - root))
    f2 = CharField(family=2, lam=(-y + root) / (2.0 * v**2), eigvec=(2.0 * v, y + root))
    return f1, f2


def classify_state(U: State) -> tuple:
    """Classify hyperbolicity (sign of y**2-4v) and genuine nonlinearity
    (sign of y**2 - 16v/3)."""
    d = discriminant(U)
    if d > 0.0:
        hyp = Hyperbolicity.HYPERBOLIC
    elif d == 0.0:
        hyp = Hyperbolicity.BOUNDARY
    else:
        hyp = Hyperbolicity.ELLIPTIC
    g = U.y * U.y - 16.0 * U.v / 3.0
    if g > 0.0:
        gn = GNClass.GN
    elif g == 0.0:
        gn = GNClass.ON_GN_CURVE
    else:
        gn = GNClass.NOT_GN
    return hyp, gn


# --- transforms u <-> omega <-> (v, y) ------------------------------------

def omegas(P: PhysState) -> tuple:
    """Intermediate variables omega_i = u_i / (1 - u1 + u2)."""
    den = 1.0 - P.u1 + P.u2
    if den <= 0.0:
        raise DegenerateState(f"1 - u1 + u2 = {den} <= 0")
    return P.u1 / den, P.u2 / den


def y_from_omegas(omega1: float, omega2: float, v: float,
                  params: PhysParams = DEFAULT_PARAMS) -> float:
    """y in terms of the omega variables.

    Uses the conservation-consistent form
    y = (alpha2*omega1 - alpha1*omega2 - (alpha1+alpha2)*v/alpha) / alpha,
    which agrees with the u-form identically.
    """
    a = params.alpha
    return (params.alpha2 * omega1 - params.alpha1 * omega2
            - (params.alpha1 + params.alpha2) * v / a) / a


def to_conserved(P: PhysState, params: PhysParams = DEFAULT_PARAMS) -> State:
    """Map physical concentrations to conserved variables (v, y)."""
    den = 1.0 - P.u1 + P.u2
    if den <= 0.0:
        raise DegenerateState(f"1 - u1 + u2 = {den} <= 0")
    a = params.alpha
    v = a / den
    y = (params.alpha2 * P.u1 - params.alpha1 * P.u2
         - (params.alpha1 + params.alpha2)) / (a * den)
    return State(v, y)


def from_conserved(U: State, params: PhysParams = DEFAULT_PARAMS) -> PhysState:
    """Invert :func:`to_conserved`.  Requires v > 0."""
    if U.v <= params.v_floor:
        raise DegenerateState(f"v = {U.v} not positive")
    a = params.alpha
    # alpha2*u1 - alpha1*u2 = A and u1 - u2 = B
    A = a * a * U.y / U.v + params.alpha1 + params.alpha2
    B = 1.0 - a / U.v
    u1 = (A - params.alpha1 * B) / (params.alpha2 - params.alpha1)
    return PhysState(u1, u1 - B)


# --- the curvilinear triangle OAB -----------------------------------------

@dataclass(frozen=True)
class Triangle:
    """Vertices of the physical triangle and its straight sides OA, OB.

    The third side is the arc of the parabola y**2 = 4v between A and B;
    OA and OB are tangent to that parabola at A and B respectively.
    """

    params: PhysParams

    @property
    def O(self) -> State:
        p = self.params
        return State(p.alpha, -(p.alpha1 + p.alpha2) / p.alpha)

    @property
    def A(self) -> State:
        p = self.params
        return State(p.alpha1 * p.alpha / p.alpha2, -2.0 * p.alpha1 / p.alpha)

    @property
    def B(self) -> State:
        p = self.params
        return State(p.alpha2 * p.alpha / p.alpha1, -2.0 * p.alpha2 / p.alpha)

    def oa_y(self, v: float) -> float:
        p = self.params
        return -p.alpha2 * v / p.alpha**2 - p.alpha1 / p.alpha

    def ob_y(self, v: float) -> float:
        p = self.params
        return -p.alpha1 * v / p.alpha**2 - p.alpha2 / p.alpha


def triangle(params: PhysParams = DEFAULT_PARAMS) -> Triangle:
    return Triangle(params)


def triangle_membership(U: State, params: PhysParams = DEFAULT_PARAMS,
                        tol: float = 1e-12) -> bool:
    """True iff U lies in the closed triangle bounded by OA, OB and the
    parabola arc AB."""
    if U.v <= 0.0:
        return False
    tri = Triangle(params)
    scale = max(1.0, abs(U.y))
    if U.v < tri.A.v - tol or U.v > tri.B.v + tol:
        return False
    if U.y < tri.oa_y(U.v) - tol * scale:
        return False
    if U.y < tri.ob_y(U.v) - tol * scale:
        return False
    # hyperbolic side: at or below the parabola
    return U.y <= -2.0 * math.sqrt(U.v) + tol * scale
