"""Exception types raised by chiralwalk."""


class ChiralWalkError(ValueError):
    """Base class for all domain errors in this package."""


class NormalizationError(ChiralWalkError):
    """State or coin amplitudes are not normalized."""


class DomainError(ChiralWalkError):
    """A parameter lies outside the domain where a formula is defined."""


class InconsistentCoherenceError(ChiralWalkError):
    """A coherence value drove the chirality distribution outside [0, 1]."""


class InfeasibleCoherenceError(ChiralWalkError):
    """No valid stationary distribution exists for the given coherence."""


class NoValidPhaseError(ChiralWalkError):
    """The phase condition cos(delta) = tan(theta)/tan(2 alpha) has no solution."""


class InvalidDensityError(ChiralWalkError):
    """Reduced density data is not a valid 2x2 density matrix."""
