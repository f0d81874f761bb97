"""Exception types shared across the package.

Every numerical guard raises one of these instead of letting NaN/Inf leak
out of a public operation.
"""


class DiskNormsError(Exception):
    """Base class for all package errors."""


class NonFiniteValue(DiskNormsError):
    """A computation produced NaN or Inf."""


class DivisionBySingularSeries(DiskNormsError):
    """Series division/log/pow with a (near-)vanishing constant term."""


class OutsideGuardRadius(DiskNormsError):
    """Evaluation requested outside the allowed radius."""


class VanishingDerivative(DiskNormsError):
    """|f'(z)| fell below the local-univalence threshold."""


class ZeroValueEncountered(DiskNormsError):
    """A functional needed g(z) != 0 but |g(z)| was numerically zero."""


class PhiPoleEncountered(DiskNormsError):
    """Denominator of the self-map transform vanished (non-membership signal)."""


class MaxSubdivisions(DiskNormsError):
    """Adaptive quadrature hit its panel budget before reaching tolerance."""
