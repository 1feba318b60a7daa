"""Exception hierarchy for the het3 engine."""


class Het3Error(Exception):
    """Base class for all engine errors."""


class AntisymmetryViolation(Het3Error):
    """Structure constants are not antisymmetric in the first two indices."""


class JacobiViolation(Het3Error):
    """Structure constants fail the Jacobi identity."""


class TraceMismatch(Het3Error):
    """Supplied scalar does not equal the trace of the supplied Ricci grid."""


class NonUnitAxis(Het3Error):
    """Distinguished axis xi is not of unit length."""


class NotSkewTorsion(Het3Error):
    """Operation requires a contorsion of the form alpha * g."""


class ScenarioValidationError(Het3Error):
    """Scenario violates a structural requirement (kappa, h, beta, phi)."""


class NonPositiveKappa(ScenarioValidationError):
    """The coupling constant kappa must be strictly positive."""


class NonNegativeScalar(Het3Error):
    """Constructor requires a strictly negative scalar curvature."""


class DegeneratesToSkew(Het3Error):
    """Generic-reducible parameters collapse to gamma = 0 (pure skew torsion)."""


class OutOfWindow(Het3Error):
    """kappa * s_g lies outside the admissible open interval (-24, 0)."""

    def __init__(self, kappa_s: float, window: tuple[float, float]):
        self.kappa_s = kappa_s
        self.window = window
        super().__init__(
            f"kappa*s_g = {kappa_s:g} outside the admissible window "
            f"({window[0]:g}, {window[1]:g})"
        )
