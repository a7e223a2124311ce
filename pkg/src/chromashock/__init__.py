"""Exact Riemann solver and singular-shock analysis toolkit.

The package studies the 2x2 conservation-law system

    v_t + (y/v)_x = 0,
    y_t + (1/v)_x = 0,

which arises as a change of variables of a two-component chromatography
model.  It provides:

- ``model_core``: states, flux, characteristic fields, hyperbolicity.
- ``wave_curves``: rarefaction/shock/composite curves and admissibility.
- ``riemann``: datum classification, exact wave patterns, singular-shock
  speed and Rankine-Hugoniot deficit.
- ``inner_orbit``: the fast-scale homoclinic orbit, its tail asymptotics,
  and the deficit produced by the regularized profile.
- ``gspt``: blow-up-chart equilibrium analysis and invariant-region checks
  for the traveling-profile problem.
- ``fv_validate``: a Lax-Friedrichs finite-volume harness that cross-checks
  wave speeds and the deficit growth rate.
- ``cli``: command-line entry point (``chromashock``).
"""

from .errors import (
    BlowUp,
    CFLCollapse,
    ChromaError,
    DegenerateState,
    DomainError,
    EqualV,
    InsufficientTail,
    InternalConsistencyError,
    NoFront,
    NoIntermediate,
    NonConvergent,
    NotOnCurve,
    QuadratureFailure,
    SingularDenominator,
    WindowEscape,
)
from .model_core import (
    DEFAULT_PARAMS,
    PhysParams,
    PhysState,
    State,
    classify_state,
    eigen,
    flux,
    jacobian,
    lambda1,
    lambda2,
    triangle,
    triangle_membership,
)
from .wave_curves import (
    Curve,
    CurveKind,
    SpecialPoints,
    eval_curve,
    lax_admissible,
    shock_speed,
    singular_speed,
    special_points,
)
from .riemann import (
    DeltaReport,
    ParabolaRarefaction,
    Rarefaction,
    RiemannSolution,
    Shock,
    SingularShock,
    SingularShockData,
    classify_pair,
    evaluate,
    singular_shock_data,
    solve,
)
from .inner_orbit import (
    AsymptoticFit,
    InnerOrbit,
    deficit_limit,
    fit_asymptotics,
    integrate_homoclinic,
    tail_scaling,
)
from .gspt import (
    Chart2Point,
    EquilibriumReport,
    RegularizationExponents,
    equilibria_and_eigen,
    invariant_region_check,
    q_points,
    reduced_roots,
    rhs_chart2,
)
from .fv_validate import (
    Grid1D,
    SimConfig,
    Snapshot,
    measure_deficit_rate,
    measure_front_speed,
    simulate,
    spike_excess,
)

__version__ = "0.1.0"
