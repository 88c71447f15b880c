"""Exception hierarchy shared across the package."""


class SectlabError(Exception):
    """Base class for all package errors."""


class DomainError(SectlabError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class QuadratureError(SectlabError):
    """Adaptive quadrature failed to meet its tolerance."""


class GeometryError(SectlabError):
    """A contour is incompatible with the operator spectrum or the integrand."""


class SingularityError(SectlabError):
    """A resolvent was requested too close to the spectrum."""

    def __init__(self, message: str, distance: float):
        super().__init__(message)
        self.distance = distance


class NumericError(SectlabError):
    """An iterative or series computation did not converge."""


class DiscretizationError(SectlabError):
    """A grid discretization failed its own validation."""


class ConfigError(SectlabError, ValueError):
    """Invalid experiment configuration."""
