"""Exception hierarchy shared by all chromashock modules."""


class ChromaError(Exception):
    """Base class for all chromashock errors."""


class DomainError(ChromaError):
    """Input is outside the mathematical domain of the operation."""


class DegenerateState(DomainError):
    """State too close to the vacuum singularity v = 0."""


class NotOnCurve(DomainError):
    """State fails the membership residual check for the requested curve."""


class NoIntermediate(ChromaError):
    """Intermediate-state root find failed to bracket (internal consistency)."""


class EqualV(DomainError):
    """Singular-shock speed is undefined when v_L = v_R."""


class BlowUp(ChromaError):
    """Trajectory exited the configured bounding box during integration."""


class InsufficientTail(ChromaError):
    """Orbit does not carry enough decades of tail data for a fit."""


class QuadratureFailure(ChromaError):
    """Numerical quadrature of a tail integral did not converge."""


class NonConvergent(ChromaError):
    """Deficit values fail the Cauchy criterion over the last epsilon samples."""


class SingularDenominator(DomainError):
    """A guarded denominator of the desingularized vector field vanished."""


class CFLCollapse(ChromaError):
    """Time step underflowed; runaway stiffness near vacuum."""


class NoFront(ChromaError):
    """No monotone front found in the requested component."""


class WindowEscape(ChromaError):
    """Co-moving measurement window left the computational domain."""


class InternalConsistencyError(ChromaError):
    """Two independent computations of the same quantity disagree."""
