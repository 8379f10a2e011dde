"""Exception hierarchy shared by every module of the package."""


class AmpentError(Exception):
    """Base class for all errors raised by ampent."""


class NonSymmetric(AmpentError, ValueError):
    pass


class NotPositiveDefinite(AmpentError, ValueError):
    pass


class PairingFailure(AmpentError, ArithmeticError):
    """Eigenvalue magnitudes of iΩσ could not be grouped into pairs."""


class BadModeIndex(AmpentError, IndexError):
    pass


class NegativeEigenvalue(AmpentError, ValueError):
    pass


class WrongModeCount(AmpentError, ValueError):
    pass


class DimensionMismatch(AmpentError, ValueError):
    pass


class NegativeOccupation(AmpentError, ValueError):
    pass


class GainBelowUnity(AmpentError, ValueError):
    pass


class BadSelection(AmpentError, ValueError):
    pass


class NonPositiveSqueeze(AmpentError, ValueError):
    pass


class BracketFailure(AmpentError, ArithmeticError):
    pass


class InvalidBath(AmpentError, ValueError):
    pass


class StepTooLarge(AmpentError, ArithmeticError):
    """Halving the integration step changed the result beyond tolerance."""


class TruncationLeakage(AmpentError, ArithmeticError):
    """Fock truncation is too small for the evolved state."""

    def __init__(self, message: str, leakage: float) -> None:
        super().__init__(message)
        self.leakage = leakage


class NonHermitianDrift(AmpentError, ArithmeticError):
    pass


class NonPhysicalState(AmpentError, ValueError):
    """Covariance matrix violates the uncertainty relation."""
