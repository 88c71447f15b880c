"""Largest singular values by Krylov iteration on the Gram composition."""

from __future__ import annotations

import numpy as np

from ..errors import DomainError, NumericError

_SEED = 20240229


def operator_norm(mat, weights=None, tol: float = 1e-12, max_iter: int | None = None) -> float:
    """Spectral norm of ``mat``, optionally in the inner product <u, v>_w = sum w u conj(v).

    Runs Lanczos with full reorthogonalization on ``B^H B`` where
    ``B = W^{1/2} mat W^{-1/2}``. Power iteration is the one-vector special
    case of this recursion; keeping the whole Krylov basis removes its
    sensitivity to clustered singular values and terminates exactly once the
    basis spans the space.
    """
    B = np.asarray(mat)
    if B.ndim != 2:
        raise DomainError("operator_norm expects a matrix")
    if not np.all(np.isfinite(B)):
        raise DomainError("matrix has non-finite entries")
    if weights is not None:
        w = np.asarray(weights, dtype=float)
        if w.shape != (B.shape[1],) or B.shape[0] != B.shape[1] or np.any(w <= 0):
            raise DomainError("weights must be positive and match a square matrix")
        sw = np.sqrt(w)
        B = sw[:, None] * B / sw[None, :]
    m, n = B.shape
    if m == 0 or n == 0:
        return 0.0
    if n == 1 or m == 1:
        return float(np.linalg.norm(B))
    B = B.astype(complex) if not np.iscomplexobj(B) else B
    rng = np.random.default_rng(_SEED)
    q = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    q /= np.linalg.norm(q)
    k_max = n if max_iter is None else min(n, max_iter)
    Q = np.zeros((n, k_max + 1), dtype=complex)
    alpha = np.zeros(k_max)
    beta = np.zeros(k_max)
    Q[:, 0] = q
    theta = 0.0
    last_resid = np.inf
    for k in range(k_max):
        v = B.conj().T @ (B @ Q[:, k])
        alpha[k] = float(np.real(np.vdot(Q[:, k], v)))
        # two passes of classical Gram-Schmidt keep the basis orthonormal
        for _ in range(2):
            v -= Q[:, : k + 1] @ (Q[:, : k + 1].conj().T @ v)
        beta[k] = float(np.linalg.norm(v))
        T = np.diag(alpha[: k + 1]) + np.diag(beta[:k], 1) + np.diag(beta[:k], -1)
        evals, evecs = np.linalg.eigh(T)
        theta = float(evals[-1])
        last_resid = beta[k] * abs(evecs[-1, -1])
        scale = max(theta, np.finfo(float).tiny)
        if last_resid <= tol * scale or k == n - 1:
            return float(np.sqrt(max(theta, 0.0)))
        if beta[k] <= 1e-14 * max(abs(alpha[: k + 1]).max(), 1e-300):
            # invariant subspace; the Ritz values are exact eigenvalues
            return float(np.sqrt(max(theta, 0.0)))
        Q[:, k + 1] = v / beta[k]
    gap = np.nan
    if k_max > 1:
        ev = np.linalg.eigvalsh(T)
        gap = float(ev[-1] - ev[-2])
    raise NumericError(
        f"Lanczos did not converge in {k_max} steps (residual {last_resid:.3e}, Ritz gap {gap:.3e})"
    )


def metric_norm(mat, left=None, right=None, tol: float = 1e-12) -> float:
    """Norm of ``left @ mat @ right``; factors represent a change of inner product."""
    B = np.asarray(mat)
    if left is not None:
        B = left @ B
    if right is not None:
        B = B @ right
    return operator_norm(B, tol=tol)
