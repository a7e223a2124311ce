"""Shared generators for randomized solver tests.

Forward construction: draw a left state, walk along the exact wave curves
to build an intermediate and a right state, and record the wave pattern
implied by the construction.  The solver under test must then recover that
pattern from the endpoint data alone.
"""

import numpy as np

from chromashock.model_core import State, discriminant, lambda1, lambda2
from chromashock.wave_curves import (
    Curve,
    CurveKind,
    anchor_k,
    eval_curve,
    shock_speed,
)


def random_hyperbolic(rng, v_range=(0.2, 4.0), margin=(0.05, 1.5)) -> State:
    """A strictly hyperbolic state with y < 0 below the coincidence parabola."""
    v = rng.uniform(*v_range)
    y = -2.0 * np.sqrt(v) * (1.0 + rng.uniform(*margin))
    return State(float(v), float(y))


def forward_classical(rng):
    """Draw (U_L, U_M, U_R, region) with a valid two-wave construction.

    The wave types are chosen by coin flips; draws violating the direct
    speed-ordering check (or straying too close to the coincidence
    parabola) are resampled, so every returned datum is classically
    solvable by construction.
    """
    while True:
        UL = random_hyperbolic(rng, (0.4, 2.5), (0.1, 1.0))
        KL = anchor_k(UL)
        v_G = 4.0 * UL.v**2 / KL**2  # tangency abscissa of the 1-curve
        shock1 = rng.random() < 0.5
        if shock1:
            v_M = UL.v * rng.uniform(1.02, 1.35)
        else:
            lo = max(1.05 * v_G, 0.6 * UL.v)
            if lo >= 0.98 * UL.v:
                continue
            v_M = rng.uniform(lo, 0.98 * UL.v)
        UM = State(v_M, eval_curve(Curve(CurveKind.S1, UL), v_M))
        if discriminant(UM) < 1e-6:
            continue
        shock2 = rng.random() < 0.5
        v_R = UM.v * (rng.uniform(1.02, 1.35) if shock2
                      else rng.uniform(0.7, 0.98))
        UR = State(v_R, eval_curve(Curve(CurveKind.S2, UM), v_R))
        if discriminant(UR) < 1e-6 or UR.y >= 0.0:
            continue
        hi1 = shock_speed(UL, UM.v, 1) if shock1 else lambda1(UM)
        lo2 = shock_speed(UM, UR.v, 2) if shock2 else lambda2(UM)
        if hi1 >= lo2 - 1e-10:
            continue
        region = (1 if (shock1 and shock2)
                  else 2 if not (shock1 or shock2)
                  else 3 if shock2 else 4)
        return UL, UM, UR, region


def forward_vacuum_path(rng):
    """Draw (U_L, U_R) requiring the composite fan through the parabola."""
    while True:
        UL = random_hyperbolic(rng, (0.5, 2.0), (0.15, 0.8))
        K_G = 4.0 * UL.v / anchor_k(UL)
        K_R = K_G * rng.uniform(0.4, 0.92)
        U_AB = State(K_R**2 / 4.0, -K_R)
        v_R = U_AB.v * rng.uniform(0.5, 0.95)
        UR = State(v_R, eval_curve(Curve(CurveKind.R2, U_AB), v_R))
        if discriminant(UR) <= 1e-8 or UR.y >= 0.0:
            continue
        return UL, UR
