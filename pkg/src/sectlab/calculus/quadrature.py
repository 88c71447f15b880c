"""Globally adaptive Gauss-Legendre integration of vector-valued integrands."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ..errors import DomainError, QuadratureError
from ..gauss import gauss_legendre

_MACH = np.finfo(float).eps


@dataclass(frozen=True)
class QuadConfig:
    abs_tol: float = 1e-14
    rel_tol: float = 1e-10
    max_panel_depth: int = 40
    ray_truncation_tol: float = 1e-13
    order: int = 15
    max_panels: int = 200_000

    def __post_init__(self):
        if min(self.abs_tol, self.rel_tol, self.ray_truncation_tol) <= 0:
            raise DomainError("tolerances must be positive")
        if self.max_panel_depth < 1 or self.order < 2:
            raise DomainError("depth and order must be at least 1 and 2")


@dataclass
class Piece:
    """One parametrised segment: ``z(s)`` and ``dz/ds`` on [lo, hi], with orientation sign."""

    z: Callable[[np.ndarray], np.ndarray]
    dz: Callable[[np.ndarray, np.ndarray], np.ndarray]
    edges: np.ndarray
    sign: float = 1.0


@dataclass
class _Interval:
    piece: int
    a: float
    b: float
    depth: int
    whole: np.ndarray
    left: np.ndarray
    right: np.ndarray
    absval: np.ndarray

    @property
    def estimate(self) -> np.ndarray:
        return self.left + self.right

    @property
    def error(self) -> np.ndarray:
        return np.abs(self.whole - self.estimate)


@dataclass
class IntegrationReport:
    value: np.ndarray
    quad_error: float
    roundoff: float
    panels: int


def integrate_pieces(
    pieces: Sequence[Piece],
    integrand: Callable[[np.ndarray], np.ndarray],
    metric: Callable[[np.ndarray], float],
    q: QuadConfig,
    scale: float = 1.0,
) -> IntegrationReport:
    """Integrate ``integrand(z) dz`` over all pieces until ``scale * error`` meets the tolerance.

    ``integrand`` maps an array of points to an array of shape (len(z), m).
    The error of an interval is the difference between one rule on it and
    the sum of the same rule on its halves.
    """
    x, w = gauss_legendre(q.order)

    def rule(k: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
        p = pieces[k]
        half = 0.5 * (b - a)
        s = 0.5 * (a + b) + half * x
        z = p.z(s)
        vals = integrand(z) * (p.dz(s, z) * p.sign)[:, None]
        return half * (w @ vals), half * (w @ np.abs(vals))

    def make(k: int, a: float, b: float, depth: int, whole=None) -> _Interval:
        if whole is None:
            whole, _ = rule(k, a, b)
        m = 0.5 * (a + b)
        left, al = rule(k, a, m)
        right, ar = rule(k, m, b)
        return _Interval(k, a, b, depth, whole, left, right, al + ar)

    intervals = [
        make(k, float(a), float(b), 0)
        for k, p in enumerate(pieces)
        for a, b in zip(p.edges[:-1], p.edges[1:])
    ]
    while True:
        value = sum(iv.estimate for iv in intervals)
        err_vec = sum(iv.error for iv in intervals)
        abs_vec = sum(iv.absval for iv in intervals)
        quad_err = scale * metric(err_vec)
        roundoff = scale * 64.0 * _MACH * metric(abs_vec)
        target = max(q.abs_tol + q.rel_tol * scale * metric(np.abs(value)), roundoff)
        if quad_err <= target:
            return IntegrationReport(value, quad_err, roundoff, len(intervals))
        if len(intervals) > q.max_panels:
            raise QuadratureError(f"panel budget exhausted with error {quad_err:.3e} > {target:.3e}")
        errs = np.array([scale * metric(iv.error) for iv in intervals])
        cut = target / len(intervals)
        refined = []
        for iv, e in zip(intervals, errs):
            if e <= cut:
                refined.append(iv)
                continue
            if iv.depth >= q.max_panel_depth:
                raise QuadratureError(
                    f"maximum panel depth reached on [{iv.a:.6g}, {iv.b:.6g}] with error {e:.3e}"
                )
            m = 0.5 * (iv.a + iv.b)
            refined.append(make(iv.piece, iv.a, m, iv.depth + 1, iv.left))
            refined.append(make(iv.piece, m, iv.b, iv.depth + 1, iv.right))
        intervals = refined


def fixed_rule(
    pieces: Sequence[Piece], integrand: Callable[[np.ndarray], np.ndarray], order: int = 15, refine: int = 1
) -> np.ndarray:
    """Non-adaptive composite rule, each initial panel split into ``refine`` equal parts."""
    x, w = gauss_legendre(order)
    total = 0.0
    for p in pieces:
        for a, b in zip(p.edges[:-1], p.edges[1:]):
            sub = np.linspace(a, b, refine + 1)
            for c, d in zip(sub[:-1], sub[1:]):
                half = 0.5 * (d - c)
                s = 0.5 * (c + d) + half * x
                z = p.z(s)
                vals = integrand(z) * (p.dz(s, z) * p.sign)[:, None]
                total = total + half * (w @ vals)
    return total
