"""Riesz-Dunford integrals, semigroups and sectorality constants."""

from __future__ import annotations

import logging
import math
from typing import NamedTuple

import numpy as np

from ..errors import DomainError, GeometryError
from .functions import HolFunction, exp_eps
from .operators import Kind, OperatorModel, resolvent_diagonal, spectrum_distance, _guard
from .paths import Arc, Chord, ContourPath, Ray, Variant, build_keyhole_path
from .quadrature import Piece, QuadConfig, fixed_rule, integrate_pieces

log = logging.getLogger(__name__)

_TWO_PI = 2.0 * math.pi
_R_CAP = 1e300


class ContourResult(NamedTuple):
    matrix: np.ndarray
    error_estimate: float


# --- sectorality ----------------------------------------------------------------


def _diagonal_sectorality(lam: np.ndarray, delta: float) -> float:
    """sup over the complement of the closed sector of max_n |z|/|z - lam_n|.

    For one eigenvalue at angle a the sup over the ray at angle +-delta is
    1/sin(|+-delta - a|) when that angle difference is at most pi/2 and 1
    otherwise; sups over n and over z commute.
    """
    ang = np.angle(lam)
    best = 1.0
    for sgn in (1.0, -1.0):
        gap = np.abs(sgn * delta - ang)
        gap = np.minimum(gap, _TWO_PI - gap)
        inner = gap[gap <= math.pi / 2]
        if inner.size:
            best = max(best, float(np.max(1.0 / np.sin(inner))))
    return best


def _sampled_sectorality(A: OperatorModel, delta: float, points: int) -> float:
    mods = np.abs(A.spectrum())
    lo, hi = math.log10(mods.min()) - 6.0, math.log10(mods.max()) + 6.0
    rho = np.logspace(lo, hi, points)
    best = 1.0
    ident = np.eye(A.dim)
    for sgn in (1.0, -1.0):
        for r in rho:
            z = r * np.exp(1j * sgn * delta)
            if A.is_diagonal:
                mat = z / (z - A.eigenvalues)
            else:
                mat = z * np.linalg.solve(z * ident - A.matrix, ident)
            best = max(best, A.norm(mat))
    return best


def sectorality_constant(A: OperatorModel, delta: float, sampling: int | None = None) -> float:
    """M(A, delta) = sup ||z R(z, A)|| over z outside the closed sector of half-angle delta.

    Exact for orthonormal diagonal models; a sampled lower estimate on a
    log-radial grid over both boundary rays otherwise (the refinement trend
    between ``sampling`` and twice as many points is logged).
    """
    if not 0.0 < delta <= math.pi:
        raise DomainError("delta must lie in (0, pi]")
    if A.spectral_angle() >= delta:
        raise DomainError("spectrum is not contained in the sector")
    if A.kind is Kind.DIAGONAL:
        return _diagonal_sectorality(A.eigenvalues, delta)
    n = sampling or 241
    coarse = _sampled_sectorality(A, delta, n)
    fine = _sampled_sectorality(A, delta, 2 * n - 1)
    log.debug("sectorality estimate %.6g -> %.6g under refinement", coarse, fine)
    return max(coarse, fine)


def _tail_sectorality(A: OperatorModel, delta: float) -> float:
    """Constant used to certify truncated ray tails in working coordinates."""
    if A.is_diagonal:
        return _diagonal_sectorality(A.eigenvalues, delta)
    return 2.0 * sectorality_constant(A, delta)


# --- paths ----------------------------------------------------------------------


def default_delta(A: OperatorModel) -> float:
    return 0.5 * (A.spectral_angle() + math.pi / 2)


def default_radius(f: HolFunction) -> float:
    """min(r0/2, 1/(2 eps)) for f e_eps; half the holomorphy radius otherwise.

    Staying well inside r0 keeps the arc away from singularities on |z| = r0.
    """
    if f.eps is not None:
        r = 1.0 / (2.0 * f.eps)
        if math.isfinite(f.radius0):
            r = min(r, 0.5 * f.radius0)
        return r
    return 0.5 * f.radius0 if math.isfinite(f.radius0) else 1.0


def default_path(A: OperatorModel, f: HolFunction, delta: float | None = None) -> ContourPath:
    d = default_delta(A) if delta is None else delta
    if f.radius0 > 0:
        return build_keyhole_path(d, default_radius(f), Variant.BALL_UNION_SECTOR)
    if A.is_invertible():
        lam = A.spectrum()
        return build_keyhole_path(d, 0.5 * float(np.min(np.abs(lam))), Variant.BALL_COMPLEMENT_SECTOR)
    if f.head is not None:
        return build_keyhole_path(d, 0.0, Variant.SECTOR_BOUNDARY)
    raise GeometryError("no admissible contour: f is singular at 0 and A is not invertible")


def _check_geometry(A: OperatorModel, f: HolFunction, path: ContourPath) -> None:
    lam = A.spectrum()
    if A.spectral_angle() >= path.delta:
        raise GeometryError("spectrum leaves the sector enclosed by the path")
    v = path.variant
    if v is Variant.SECTOR_BOUNDARY and f.head is None:
        raise GeometryError(f"{f.name} does not decay at 0; the sector boundary is inadmissible")
    if v is Variant.BALL_UNION_SECTOR and path.r >= f.radius0:
        raise GeometryError(f"arc radius {path.r} exceeds the holomorphy radius {f.radius0} of {f.name}")
    if v is Variant.BALL_COMPLEMENT_SECTOR and np.min(np.abs(lam)) <= path.r:
        raise GeometryError("spectrum meets the excluded ball")
    if v is Variant.CHORD_KEYHOLE and np.min(lam.real) <= path.r * math.cos(path.delta):
        raise GeometryError("spectrum lies left of the chord")


def _ray_piece(ray: Ray, lo: float, hi: float) -> Piece:
    e = np.exp(1j * ray.angle)
    a, b = math.log(lo), math.log(hi)
    n = max(2, int(math.ceil(b - a)))
    return Piece(
        z=lambda s: np.exp(s) * e,
        dz=lambda s, z: z,
        edges=np.linspace(a, b, n + 1),
        sign=1.0 if ray.outward else -1.0,
    )


def _arc_piece(arc: Arc) -> Piece:
    r = arc.radius
    lo, hi = sorted((arc.from_angle, arc.to_angle))
    n = max(4, int(math.ceil(8.0 * (hi - lo) / math.pi)))
    return Piece(
        z=lambda s: r * np.exp(1j * s),
        dz=lambda s, z: 1j * z,
        edges=np.linspace(lo, hi, n + 1),
        sign=1.0 if arc.to_angle > arc.from_angle else -1.0,
    )


def _chord_piece(ch: Chord) -> Piece:
    p, d = ch.start_point, ch.end_point - ch.start_point
    return Piece(z=lambda s: p + s * d, dz=lambda s, z: np.full_like(z, d), edges=np.linspace(0.0, 1.0, 5))


def _truncate(
    path: ContourPath, f: HolFunction, M: float, tol: float, spectral_radius: float
) -> tuple[list[Piece], float]:
    """Turn infinite rays into finite pieces; return pieces and the certified tail total."""
    pieces: list[Piece] = []
    tails = 0.0
    for seg in path.segments:
        if isinstance(seg, Arc):
            pieces.append(_arc_piece(seg))
            continue
        if isinstance(seg, Chord):
            pieces.append(_chord_piece(seg))
            continue
        inner = min(seg.r_from, seg.r_to)
        R = max(1.0, 4.0 * inner)
        while M * f.tail(seg.angle, R) / _TWO_PI > tol:
            R *= 2.0
            if R > _R_CAP:
                raise GeometryError(f"{f.name} does not decay fast enough along the ray")
        tails += M * f.tail(seg.angle, R) / _TWO_PI
        if inner == 0.0:
            r = min(1.0, 0.5 * R, 0.5 * float(spectral_radius))
            while M * f.head(seg.angle, r) / _TWO_PI > tol:
                r *= 0.5
                if r < 1e-300:
                    raise GeometryError(f"{f.name} does not vanish fast enough at 0")
            tails += M * f.head(seg.angle, r) / _TWO_PI
            inner = r
        if R <= inner:
            R = 2.0 * inner
        outward = Ray(seg.angle, inner, R) if seg.outward else Ray(seg.angle, R, inner)
        pieces.append(_ray_piece(outward, inner, R))
    return pieces, tails


def _integrand(A: OperatorModel, f: HolFunction):
    if A.is_diagonal:
        def g(z):
            return f(z)[:, None] * resolvent_diagonal(A, z)
        return g
    n = A.dim
    eye = np.eye(n)

    def g(z):
        _guard(A, z)
        sys = z[:, None, None] * eye - A.matrix
        res = np.linalg.solve(sys, np.broadcast_to(eye, sys.shape).astype(complex))
        return (f(z)[:, None, None] * res).reshape(len(z), n * n)

    return g


def _metric(A: OperatorModel):
    if A.is_diagonal:
        return lambda v: float(np.max(np.abs(v)))
    return lambda v: float(np.linalg.norm(v))


def riesz_dunford(
    A: OperatorModel,
    f: HolFunction,
    path: ContourPath | None = None,
    q: QuadConfig | None = None,
) -> ContourResult:
    """f(A) = (1/2 pi i) int f(z) R(z, A) dz with an a-posteriori error estimate.

    The estimate adds the adaptive quadrature error, a roundoff floor
    proportional to the integral of |integrand|, and the certified bounds
    for the truncated ends of the rays.
    """
    q = q or QuadConfig()
    path = path or default_path(A, f)
    _check_geometry(A, f, path)
    M = _tail_sectorality(A, path.delta)
    rho = float(np.max(np.abs(A.spectrum())))
    pieces, tails = _truncate(path, f, M, q.ray_truncation_tol, rho)
    report = integrate_pieces(pieces, _integrand(A, f), _metric(A), q, scale=1.0 / _TWO_PI)
    value = report.value / (_TWO_PI * 1j)
    mat = np.diag(value) if A.is_diagonal else value.reshape(A.dim, A.dim)
    err = report.quad_error + report.roundoff + tails
    return ContourResult(mat, float(err))


def riesz_dunford_fixed(
    A: OperatorModel, f: HolFunction, path: ContourPath, refine: int, order: int = 15, q: QuadConfig | None = None
) -> np.ndarray:
    """Same integral on a fixed panel layout, each initial panel split into ``refine`` equal parts."""
    q = q or QuadConfig()
    _check_geometry(A, f, path)
    M = _tail_sectorality(A, path.delta)
    rho = float(np.max(np.abs(A.spectrum())))
    pieces, _ = _truncate(path, f, M, q.ray_truncation_tol, rho)
    value = fixed_rule(pieces, _integrand(A, f), order=order, refine=refine) / (_TWO_PI * 1j)
    return np.diag(value) if A.is_diagonal else value.reshape(A.dim, A.dim)


def semigroup_apply(A: OperatorModel, t: float, q: QuadConfig | None = None) -> np.ndarray:
    """e^{-tA} by the contour integral of e_t."""
    if not t > 0:
        raise DomainError("t must be positive")
    return riesz_dunford(A, exp_eps(t), q=q).matrix


def near_spectrum_distance(A: OperatorModel, path_points) -> float:
    return float(np.min(spectrum_distance(A, np.asarray(path_points))))
