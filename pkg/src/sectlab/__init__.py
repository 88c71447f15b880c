"""Numerical companion for functional calculus bounds of sectorial operators.

Submodules: ``specfn`` (exponential integral, growth sums), ``bounds``
(closed-form estimates), ``calculus`` (contour-integral functional calculus),
``schauder`` (weighted trigonometric bases and multipliers) and
``experiments`` (reproducible sweeps behind the ``sectlab`` command).
"""

from .errors import (
    ConfigError,
    DiscretizationError,
    DomainError,
    GeometryError,
    NumericError,
    QuadratureError,
    SectlabError,
    SingularityError,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "DiscretizationError",
    "DomainError",
    "GeometryError",
    "NumericError",
    "QuadratureError",
    "SectlabError",
    "SingularityError",
    "__version__",
]
