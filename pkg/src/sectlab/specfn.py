"""Exponential integral, Gamma on (0, 2], and the lacunary growth sums.

``exp_int`` is the first-order exponential integral E1, written here as Ei as
in the rest of the package: Ei(x) = int_1^inf exp(-x t) / t dt.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

EULER_GAMMA = 0.57721566490153286060651209
_SERIES_SWITCH = 1.0
_MACH = np.finfo(float).eps


def _check_positive(x: float, name: str = "x") -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"{name} must be positive and finite, got {x!r}")
    return x


def _ei_series(x: float) -> float:
    # Ei(x) = -gamma - log x - sum_{k>=1} (-x)^k / (k k!)
    total = 0.0
    term = 1.0
    k = 0
    while True:
        k += 1
        term *= -x / k
        contrib = term / k
        total += contrib
        if abs(contrib) <= _MACH * abs(total) * 0.1:
            break
    return -EULER_GAMMA - math.log(x) - total


def _ei_continued_fraction(x: float) -> float:
    # modified Lentz evaluation of exp(x) Ei(x) = 1/(x+1- 1^2/(x+3- 2^2/(x+5- ...)))
    tiny = 1e-300
    b = x + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 10_000):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) <= _MACH:
            return h * math.exp(-x)
    raise ArithmeticError(f"continued fraction for Ei({x}) did not converge")


def _exp_int_scalar(x: float) -> float:
    x = _check_positive(x)
    if x < _SERIES_SWITCH:
        return _ei_series(x)
    return _ei_continued_fraction(x)


def exp_int(x):
    """Ei(x) for x > 0; accepts a scalar or an array."""
    if np.ndim(x) == 0:
        return _exp_int_scalar(x)
    arr = np.asarray(x, dtype=float)
    return np.array([_exp_int_scalar(v) for v in arr.ravel()]).reshape(arr.shape)


def gautschi_window(x: float) -> tuple[float, float]:
    """Lower and upper Gautschi bounds enclosing Ei(x)."""
    x = _check_positive(x)
    lower = 0.5 * math.exp(-x) * math.log1p(2.0 / x)
    upper = math.exp(-x) * math.log1p(1.0 / x)
    return lower, upper


def gamma_fn(a: float) -> float:
    """Gamma function restricted to (0, 2]."""
    a = float(a)
    if not (0.0 < a <= 2.0):
        raise DomainError(f"gamma_fn is defined on (0, 2], got {a!r}")
    return math.gamma(a)


def growth_sum_exact(gamma: float, b: float, eps: float, tol: float = 1e-15) -> float:
    """sum_{n>=1} n^gamma exp(-b^n eps) with a certified tail below ``tol``."""
    if gamma > 0:
        raise DomainError("gamma must be <= 0")
    if b <= 1:
        raise DomainError("b must exceed 1")
    eps = _check_positive(eps, "eps")
    if not tol > 0:
        raise DomainError("tol must be positive")
    total = 0.0
    n = 0
    while True:
        n += 1
        arg = b**n * eps
        total += n**gamma * math.exp(-arg)
        if arg > 50.0:
            # later terms shrink at least geometrically with ratio q
            nxt = b * arg
            q = math.exp(-(b - 1.0) * nxt)
            tail = math.exp(-nxt) / (1.0 - q)
            if tail <= tol:
                return total


def growth_bound_F(gamma: float, b: float, eps: float) -> float:
    """Closed-form comparison function of the growth sum, valid for eps < 1/b."""
    if gamma > 0:
        raise DomainError("gamma must be <= 0")
    if b <= 1:
        raise DomainError("b must exceed 1")
    eps = _check_positive(eps, "eps")
    if eps >= 1.0 / b:
        raise DomainError("growth_bound_F requires eps < 1/b")
    big, small = math.log(1.0 / eps), math.log(b)
    spread = math.log(big) - math.log(small)
    p = 1.0 + gamma
    if p == 0.0:
        return spread
    # (big^p - small^p) / (small^p p) without cancellation as p -> 0
    return math.expm1(p * spread) / p


def growth_sum_upper(gamma: float, b: float, eps: float) -> float:
    """Upper side of the growth sandwich: F + 1 + Ei(1)/log b."""
    return growth_bound_F(gamma, b, eps) + 1.0 + exp_int(1.0) / math.log(b)


def growth_sum_lower(gamma: float, b: float, eps: float) -> float:
    """Lower side of the growth sandwich: F / e."""
    return growth_bound_F(gamma, b, eps) / math.e


def growth_constant(gamma: float, b: float, eps_grid) -> float:
    """Smallest ratio F_gamma(eps, b) / log(1/eps)^(1+gamma) over a grid."""
    p = 1.0 + gamma
    return min(growth_bound_F(gamma, b, e) / math.log(1.0 / e) ** p for e in eps_grid)
