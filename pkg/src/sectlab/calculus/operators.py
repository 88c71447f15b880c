"""Finite-dimensional sectorial operator models."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ..errors import DomainError, SingularityError
from .norms import metric_norm, operator_norm

#: relative distance to the spectrum below which resolvents are refused
NEAR_SPECTRUM = 1e-12


class Kind(str, enum.Enum):
    DIAGONAL = "DiagonalONB"
    SCHAUDER = "SchauderMultiplier"
    DENSE = "DenseMatrix"


@dataclass(frozen=True, eq=False)
class OperatorModel:
    """A sectorial operator on a finite-dimensional Hilbert space.

    Diagonal and Schauder models work in coefficient coordinates where the
    operator is ``diag(eigenvalues)``; what distinguishes them is the metric.
    A Schauder model carries two metric factors: ``span_factor`` realises the
    norm of the span of the basis (used for vectors and resolvents) and
    ``l2_factors`` realises the truncated operator on the whole grid space.
    """

    kind: Kind
    eigenvalues: np.ndarray | None = None
    matrix: np.ndarray | None = None
    basis: Any = None
    side: str = "primal"
    span_factor: np.ndarray | None = None
    span_factor_inv: np.ndarray | None = None
    l2_factors: tuple[np.ndarray, np.ndarray] | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        if self.kind is Kind.DENSE:
            return self.matrix.shape[0]
        return len(self.eigenvalues)

    @property
    def is_diagonal(self) -> bool:
        return self.kind is not Kind.DENSE

    def spectrum(self) -> np.ndarray:
        if self.is_diagonal:
            return self.eigenvalues
        if "spectrum" not in self._cache:
            self._cache["spectrum"] = np.linalg.eigvals(self.matrix)
        return self._cache["spectrum"]

    def spectral_angle(self) -> float:
        lam = self.spectrum()
        return float(np.max(np.abs(np.angle(lam)))) if lam.size else 0.0

    def is_invertible(self) -> bool:
        return bool(np.min(np.abs(self.spectrum())) > 0)

    def as_matrix(self) -> np.ndarray:
        if self.is_diagonal:
            return np.diag(self.eigenvalues.astype(complex))
        return self.matrix

    def inverse_norm(self) -> float:
        """||A^{-1}|| in the model's metric."""
        if self.kind is Kind.DIAGONAL:
            return float(np.max(1.0 / np.abs(self.eigenvalues)))
        if self.kind is Kind.DENSE:
            return operator_norm(np.linalg.inv(self.matrix))
        return self.norm(np.diag(1.0 / self.eigenvalues))

    def vector_norm(self, v) -> float:
        v = np.asarray(v)
        if self.kind is Kind.SCHAUDER:
            return float(np.linalg.norm(self.span_factor @ v))
        return float(np.linalg.norm(v))

    def norm(self, mat, space: str = "span") -> float:
        """Operator norm of a working-coordinate matrix.

        ``space='l2'`` is only meaningful for Schauder models: it measures the
        operator ``mat`` composed with the coefficient projection, acting on
        the full grid space instead of the span.
        """
        mat = np.asarray(mat)
        if self.kind is not Kind.SCHAUDER:
            if mat.ndim == 1:
                return float(np.max(np.abs(mat))) if mat.size else 0.0
            return operator_norm(mat)
        if mat.ndim == 1:
            mat = np.diag(mat)
        if space == "l2":
            R1, R2 = self.l2_factors
            return metric_norm(mat, R1, R2.conj().T)
        if space != "span":
            raise DomainError(f"unknown space {space!r}")
        return metric_norm(mat, self.span_factor, self.span_factor_inv)


def _as_complex_vector(values) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(values, dtype=complex))
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError("eigenvalues must be a nonempty 1-d sequence")
    if not np.all(np.isfinite(arr)):
        raise DomainError("eigenvalues must be finite")
    return arr


def diagonal_onb(eigenvalues) -> OperatorModel:
    """Diagonal operator in an orthonormal basis; spectrum must avoid (-inf, 0]."""
    lam = _as_complex_vector(eigenvalues)
    if np.any(np.abs(np.angle(lam)) >= np.pi / 2):
        raise DomainError("diagonal models need spectrum in the open right half-plane")
    if np.all(lam.imag == 0):
        lam = lam.real.astype(float) + 0j
    return OperatorModel(Kind.DIAGONAL, eigenvalues=lam)


def dense_matrix(entries) -> OperatorModel:
    A = np.asarray(entries, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DomainError("dense models must be square")
    return OperatorModel(Kind.DENSE, matrix=A)


def schauder_model(
    basis, multiplier, span_factor, l2_factors, side: str = "primal"
) -> OperatorModel:
    mu = _as_complex_vector(multiplier)
    if span_factor.shape != (mu.size, mu.size):
        raise DomainError("multiplier length must equal the basis truncation")
    return OperatorModel(
        Kind.SCHAUDER,
        eigenvalues=mu,
        basis=basis,
        side=side,
        span_factor=span_factor,
        span_factor_inv=np.linalg.inv(span_factor),
        l2_factors=l2_factors,
    )


def spectrum_distance(A: OperatorModel, z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    lam = A.spectrum()
    return np.min(np.abs(z[..., None] - lam), axis=-1)


def _guard(A: OperatorModel, z) -> None:
    dist = spectrum_distance(A, z)
    limit = NEAR_SPECTRUM * np.abs(np.asarray(z))
    bad = dist < np.maximum(limit, 1e-300)
    if np.any(bad):
        d = float(np.min(dist))
        raise SingularityError(f"resolvent requested at distance {d:.3e} from the spectrum", d)


def resolvent_apply(A: OperatorModel, z: complex) -> np.ndarray:
    """Matrix of (z - A)^{-1} in working coordinates."""
    z = complex(z)
    _guard(A, z)
    if A.is_diagonal:
        return np.diag(1.0 / (z - A.eigenvalues))
    n = A.dim
    return np.linalg.solve(z * np.eye(n) - A.matrix, np.eye(n, dtype=complex))


def resolvent_diagonal(A: OperatorModel, z: np.ndarray) -> np.ndarray:
    """Vectorised diagonal resolvent entries, shape ``z.shape + (dim,)``."""
    _guard(A, z)
    return 1.0 / (np.asarray(z)[..., None] - A.eigenvalues)
