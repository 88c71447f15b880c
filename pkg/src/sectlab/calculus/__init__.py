"""Finite-dimensional holomorphic functional calculus."""

from .core import (
    ContourResult,
    default_delta,
    default_path,
    default_radius,
    riesz_dunford,
    riesz_dunford_fixed,
    sectorality_constant,
    semigroup_apply,
)
from .functions import (
    PSI,
    HolFunction,
    bump,
    cayley,
    constant,
    exp_eps,
    power_exp,
    resolvent_at_minus_one,
    sqrt_exp,
    z_exp,
)
from .norms import metric_norm, operator_norm
from .operators import Kind, OperatorModel, dense_matrix, diagonal_onb, resolvent_apply, schauder_model
from .paths import Arc, Chord, ContourPath, Ray, Variant, build_keyhole_path
from .quadrature import QuadConfig

__all__ = [
    "Arc", "Chord", "ContourPath", "ContourResult", "HolFunction", "Kind", "OperatorModel", "PSI",
    "QuadConfig", "Ray", "Variant", "build_keyhole_path", "bump", "cayley", "constant",
    "default_delta", "default_path", "default_radius", "dense_matrix", "diagonal_onb", "exp_eps",
    "metric_norm", "operator_norm", "power_exp", "resolvent_apply", "resolvent_at_minus_one",
    "riesz_dunford", "riesz_dunford_fixed", "schauder_model", "sectorality_constant",
    "semigroup_apply", "sqrt_exp", "z_exp",
]
