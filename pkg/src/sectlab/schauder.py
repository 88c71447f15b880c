"""Weighted trigonometric Schauder bases on L^2(-pi, pi) and their multipliers.

Indexing: basis index n = 1, 2, ... maps to frequency k(1) = 0, k(2j) = j,
k(2j+1) = -j, and the basis element is w(t) e^{i k(n) t}. The dual element is
e^{i k(n) t} / (2 pi w(t)).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np
from scipy import linalg as sla
from scipy import special

from .calculus import OperatorModel, QuadConfig, operator_norm, schauder_model
from .calculus.functions import PSI
from .calculus.operators import Kind
from .calculus.quadrature import Piece, integrate_pieces
from .errors import DiscretizationError, DomainError, NumericError
from .gauss import gauss_legendre, geometric_edges, panel_rule
from .specfn import exp_int


class WeightVariant(str, enum.Enum):
    TWO_SIDED = "TwoSidedWeight"
    PURE = "PureWeight"


_BETA_RANGE = {
    WeightVariant.TWO_SIDED: (0.25, 0.5),
    WeightVariant.PURE: (1.0 / 3.0, 0.5),
}


@dataclass(frozen=True)
class BasisSpec:
    """Weight exponent, weight variant, truncation size and grid density.

    ``beta = 0`` is accepted for either variant as the orthonormal control
    (pure exponentials). ``grid`` is the number of uniform panels per quarter
    of the period; by default it follows the largest frequency.
    """

    beta: float
    variant: WeightVariant = WeightVariant.TWO_SIDED
    N: int = 32
    grid: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "variant", WeightVariant(self.variant))
        lo, hi = _BETA_RANGE[self.variant]
        if self.beta != 0.0 and not lo < self.beta < hi:
            raise DomainError(f"beta={self.beta} outside ({lo:.4g}, {hi:.4g}) for {self.variant.value}")
        if self.N < 1:
            raise DomainError("N must be positive")
        if self.grid is not None and self.grid < 1:
            raise DomainError("grid must be positive")

    @property
    def kmax(self) -> int:
        return self.N // 2

    @property
    def panels(self) -> int:
        return self.grid if self.grid is not None else max(16, (self.kmax + 1) // 2 + 1)

    def with_N(self, N: int) -> "BasisSpec":
        return BasisSpec(self.beta, self.variant, N, self.grid)


def frequencies(N: int) -> np.ndarray:
    n = np.arange(1, N + 1)
    k = n // 2
    return np.where(n % 2 == 0, k, -k)


def weight(spec: BasisSpec, t, dist_pi=None) -> np.ndarray:
    """Weight at t; ``dist_pi`` optionally supplies pi - |t| to full precision."""
    t = np.abs(np.asarray(t, dtype=float))
    d = math.pi - t if dist_pi is None else np.asarray(dist_pi, dtype=float)
    b = spec.beta
    if spec.variant is WeightVariant.PURE:
        return t**b
    far = t >= math.pi / 2
    return np.where(far, np.where(far, d, 1.0) ** (-b), t**b)


# --- Fourier coefficients of |t|^alpha on (-pi/2, pi/2) ----------------------


def _check_alpha(alpha: float, lo: float = -1.0, hi: float = 1.0) -> None:
    if not lo < alpha < hi:
        raise DomainError(f"alpha must lie in ({lo}, {hi}), got {alpha!r}")


def fourier_coeff_c(n: int, alpha: float) -> float:
    """c_{n,alpha} = int_{-pi/2}^{pi/2} |t|^alpha e^{int} dt = 2 int_0^{pi/2} t^alpha cos(nt) dt."""
    _check_alpha(alpha)
    n = abs(int(n))
    half = math.pi / 2
    if n == 0:
        return 2.0 * half ** (alpha + 1.0) / (alpha + 1.0)
    a = min(half, 0.5 / n)
    # power series of cos on [0, a] where n a <= 1/2
    head, j, term = 0.0, 0, 1.0
    while True:
        p = alpha + 1.0 + 2 * j
        contrib = term * a**p / p
        head += contrib
        if abs(contrib) < 1e-18 * abs(head):
            break
        j += 1
        term *= -(n * n) / ((2 * j - 1) * (2 * j))
    if a >= half:
        return 2.0 * head
    edges = [a]
    while edges[-1] < min(half, 8.0 * a):
        edges.append(min(half, 2.0 * edges[-1]))
    if edges[-1] < half:
        count = max(1, math.ceil((half - edges[-1]) * n / 2.0))
        edges.extend(np.linspace(edges[-1], half, count + 1)[1:])
    t, w = panel_rule(np.asarray(edges), order=20)
    return 2.0 * (head + float(w @ (t**alpha * np.cos(n * t))))


def coefficient_asymptote(alpha: float) -> float:
    """Limit of c_{n,alpha} n^{1+alpha}: -2 sin(alpha pi/2) Gamma(alpha+1)."""
    _check_alpha(alpha, -1.0, 1.0)
    return -2.0 * math.sin(alpha * math.pi / 2) * math.gamma(alpha + 1.0)


def d_constant(k: int, alpha: float) -> float:
    """d_{k,alpha} = 2 int_0^{k pi/2} t^alpha cos t dt = k^{1+alpha} c_{k,alpha}."""
    _check_alpha(alpha, -1.0, 0.0 + 1e-300)
    if alpha > 0:
        raise DomainError("alpha must lie in (-1, 0]")
    if int(k) < 1:
        raise DomainError("k must be a positive integer")
    return k ** (1.0 + alpha) * fourier_coeff_c(k, alpha)


@dataclass(frozen=True)
class D3LowerBound:
    """Pieces of the elementary lower bound for int_0^{3pi/2} t^{-1/2} cos t dt."""

    head: float
    middle_exact: float
    middle_printed: float
    tail_integral: float

    @property
    def printed_total(self) -> float:
        return self.head + self.middle_printed + self.tail_integral

    @property
    def exact_total(self) -> float:
        return self.head + self.middle_exact + self.tail_integral


def d3_lower_bound_terms() -> D3LowerBound:
    """Split [0, 3pi/2] at 1 and pi/2; bound t^{-1/2} below on the first two pieces."""
    t, w = panel_rule(np.linspace(math.pi / 2, 1.5 * math.pi, 9), order=20)
    tail = float(w @ (np.cos(t) / np.sqrt(t)))
    return D3LowerBound(
        head=2.0 * math.cos(1.0),
        middle_exact=math.sqrt(2.0 / math.pi) * (1.0 - math.sin(1.0)),
        middle_printed=2.0 / math.pi * (1.0 - math.sin(1.0)),
        tail_integral=tail,
    )


# --- test vectors --------------------------------------------------------------


@dataclass(frozen=True)
class CoeffVector:
    values: np.ndarray
    norm_origin: str


def _x_head(spec: BasisSpec, t, dist_pi=None):
    t = np.abs(np.asarray(t, dtype=float))
    with np.errstate(divide="ignore"):
        return np.where(t < math.pi / 2, t ** (-spec.beta), 0.0)


def _y_tail(spec: BasisSpec, t, dist_pi=None):
    t = np.abs(np.asarray(t, dtype=float))
    d = math.pi - t if dist_pi is None else np.asarray(dist_pi, dtype=float)
    b = spec.beta
    inside = t > math.pi / 2
    with np.errstate(divide="ignore", invalid="ignore"):
        base = np.where(inside, d ** (-b), 0.0)
        if spec.variant is WeightVariant.PURE:
            base = np.where(inside, base * t ** (-b), 0.0)
    return base


def test_vector_function(spec: BasisSpec, which: str):
    """Callable ``f(t, dist_pi=None)`` for the head vector x or the tail vector y."""
    if which not in ("x_head", "y_tail"):
        raise DomainError(f"unknown test vector {which!r}")
    fn = _x_head if which == "x_head" else _y_tail
    return lambda t, dist_pi=None: fn(spec, t, dist_pi)


def test_vector_coeffs(spec: BasisSpec, which: str = "x_head") -> CoeffVector:
    """Exact coefficients of x (w.r.t. the basis) or y (w.r.t. the dual basis)."""
    k = np.abs(frequencies(spec.N))
    b = spec.beta
    if which == "x_head":
        vals = np.array([fourier_coeff_c(kk, -2.0 * b) for kk in k]) / (2.0 * math.pi)
        return CoeffVector(vals, "pairing with the dual basis")
    if which != "y_tail":
        raise DomainError(f"unknown test vector {which!r}")
    sign = np.where(k % 2 == 0, 1.0, -1.0)
    if spec.variant is WeightVariant.TWO_SIDED:
        vals = sign * np.array([fourier_coeff_c(kk, -2.0 * b) for kk in k])
    else:
        vals = sign * np.array([fourier_coeff_c(kk, -b) for kk in k])
    return CoeffVector(vals, "pairing with the basis")


def test_vector_norm(spec: BasisSpec, which: str) -> float:
    """L^2 norm of x or y; closed form where available, graded quadrature otherwise."""
    b = spec.beta
    closed = math.sqrt(2.0 * (math.pi / 2) ** (1.0 - 2.0 * b) / (1.0 - 2.0 * b))
    if which == "x_head" or spec.variant is WeightVariant.TWO_SIDED:
        return closed
    # int_{pi/2}^{pi} t^{-2b} (pi - t)^{-2b} dt is half a complete beta integral by symmetry
    half = math.pi ** (1.0 - 4.0 * b) * float(special.beta(1.0 - 2.0 * b, 1.0 - 2.0 * b)) / 2.0
    return math.sqrt(2.0 * half)


def _t_min(power: float, tol: float = 1e-13) -> float:
    """Distance from a |t|^{-power} singularity below which the integral is < tol."""
    if power <= 0:
        return 1e-3
    return (tol * (1.0 - power)) ** (1.0 / (1.0 - power))


# --- synthesis on the grid -----------------------------------------------------


@dataclass(frozen=True, eq=False)
class Synthesis:
    """Sampled basis and dual basis with quadrature weights.

    ``R1`` and ``R2`` are triangular factors of the weighted samples, so that
    ``R1^H R1`` and ``R2^H R2`` are the Gram matrices of the basis and the
    dual basis.
    """

    t: np.ndarray
    dist_pi: np.ndarray
    weights: np.ndarray
    S: np.ndarray
    Sdual: np.ndarray
    R1: np.ndarray
    R2: np.ndarray
    biorth_error: float

    def __iter__(self):
        return iter((self.S, self.Sdual, self.weights))

    @property
    def gram(self) -> np.ndarray:
        return self.R1.conj().T @ self.R1

    def analysis(self, values) -> np.ndarray:
        """Coefficients <x, phi*_n> of a grid function."""
        return self.Sdual.conj().T @ (self.weights * np.asarray(values))

    def dual_analysis(self, values) -> np.ndarray:
        """Coefficients <y, phi_n> of a grid function w.r.t. the dual basis."""
        return self.S.conj().T @ (self.weights * np.asarray(values))

    def sample(self, fn) -> np.ndarray:
        """Evaluate ``fn(t, dist_pi)`` on the grid."""
        return np.asarray(fn(self.t, self.dist_pi))

    def l2_norm(self, values) -> float:
        v = np.asarray(values)
        return float(math.sqrt(float(self.weights @ np.abs(v) ** 2)))


def _grid(spec: BasisSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Nodes, weights and exact distances pi - |t| on (-pi, pi).

    Breakpoints sit at 0, +-pi/2 and +-pi; panels are graded toward singular
    ends, and the outer quarter is built in the variable d = pi - |t| so that
    nodes near pi keep full relative accuracy.
    """
    quarter = math.pi / 2
    P = spec.panels
    t_min = _t_min(2.0 * spec.beta)
    h = quarter / P
    uniform = np.linspace(0.0, quarter, P + 1)

    def edges(singular: bool) -> np.ndarray:
        if not singular:
            return uniform
        return np.concatenate([geometric_edges(0.0, h, t_min, ratio=4.0)[1:], uniform[2:]])

    t_in, w_in = panel_rule(edges(spec.beta > 0), 16)
    # graded at pi for both variants: the tail test vector is singular there
    d_out, w_out = panel_rule(edges(spec.beta > 0), 16)
    t_half = np.concatenate([t_in, math.pi - d_out])
    d_half = np.concatenate([math.pi - t_in, d_out])
    w_half = np.concatenate([w_in, w_out])
    order = np.argsort(t_half)
    t_half, d_half, w_half = t_half[order], d_half[order], w_half[order]
    t = np.concatenate([-t_half[::-1], t_half])
    return t, np.concatenate([w_half[::-1], w_half]), np.concatenate([d_half[::-1], d_half])


@lru_cache(maxsize=8)
def synthesis_matrix(spec: BasisSpec, tol: float = 1e-6) -> Synthesis:
    """Sample basis and dual basis on a graded grid and validate biorthogonality."""
    t, wts, dpi = _grid(spec)
    k = frequencies(spec.N)
    wt = weight(spec, t, dpi)
    E = np.exp(1j * np.outer(t, k))
    S = wt[:, None] * E
    Sdual = E / (2.0 * math.pi * wt[:, None])
    sw = np.sqrt(wts)[:, None]
    R1 = sla.qr(sw * S, mode="r")[0][: spec.N]
    R2 = sla.qr(sw * Sdual, mode="r")[0][: spec.N]
    pair = Sdual.conj().T @ (wts[:, None] * S)
    err = float(np.max(np.abs(pair - np.eye(spec.N))))
    if err > tol:
        raise DiscretizationError(f"biorthogonality defect {err:.3e} exceeds {tol:.1e}; increase grid")
    return Synthesis(t, dpi, wts, S, Sdual, R1, R2, err)


# --- multipliers -----------------------------------------------------------------


def multiplier_operator(spec: BasisSpec, mu, side: str = "primal") -> OperatorModel:
    """Multiplier acting by mu_n on the n-th basis element (or dual element if ``side='dual'``)."""
    mu = np.asarray(mu, dtype=complex)
    if mu.shape != (spec.N,):
        raise DomainError("multiplier length must equal N")
    syn = synthesis_matrix(spec)
    if side == "primal":
        return schauder_model(spec, mu, syn.R1, (syn.R1, syn.R2), side)
    if side == "dual":
        return schauder_model(spec, mu, syn.R2, (syn.R2, syn.R1), side)
    raise DomainError("side must be 'primal' or 'dual'")


def multiplier_grid_matrix(spec: BasisSpec, mu) -> np.ndarray:
    """Grid matrix S diag(mu) Sdual^H W acting on sampled functions."""
    S, Sdual, w = synthesis_matrix(spec)
    return (S * np.asarray(mu)) @ (Sdual.conj().T * w)


def multiplier_norm(spec: BasisSpec, mu, space: str = "l2") -> float:
    return multiplier_operator(spec, mu).norm(np.asarray(mu, dtype=complex), space=space)


def lacunary_eigenvalues(N: int, c: float = 2.0) -> np.ndarray:
    return c ** np.arange(1, N + 1, dtype=float)


def alternating_signs(N: int) -> np.ndarray:
    """mu_n = (-1)^{|k(n)|}: equal on both elements of each frequency pair."""
    return np.where(np.abs(frequencies(N)) % 2 == 0, 1.0, -1.0)


# --- pairings ---------------------------------------------------------------------


def _dual_norm_sq(spec: BasisSpec) -> float:
    """||phi*_n||^2, independent of n."""
    b = spec.beta
    q = math.pi / 2
    inner = 2.0 * q ** (1.0 - 2.0 * b) / (1.0 - 2.0 * b)
    if spec.variant is WeightVariant.PURE:
        outer = 2.0 * (math.pi ** (1.0 - 2.0 * b) - q ** (1.0 - 2.0 * b)) / (1.0 - 2.0 * b)
    else:
        outer = 2.0 * q ** (1.0 + 2.0 * b) / (1.0 + 2.0 * b)
    return (inner + outer) / (4.0 * math.pi**2)


def _lacunary_series(term, c: float, eps: float, coeff_bound: float, rel: float = 1e-16) -> float:
    """sum_n e^{-c^n eps} term(n) with |term| <= coeff_bound; stops once the certified tail is negligible."""
    total = 0.0
    n = 0
    while True:
        n += 1
        decay = math.exp(-(c**n) * eps)
        total += decay * term(n)
        arg = c ** (n + 1) * eps
        if arg > 1.0:
            q = math.exp(-(c - 1.0) * arg)
            tail = coeff_bound * math.exp(-arg) / (1.0 - q)
            if tail <= rel * abs(total):
                return total
        if n > 4000:
            raise NumericError("lacunary series did not reach its tolerance")


@lru_cache(maxsize=256)
def _coeff_cached(k: int, alpha: float) -> float:
    return fourier_coeff_c(k, alpha)


def _frequency_of(n: int) -> int:
    return n // 2


def pairing_lower_bound(spec: BasisSpec, eps: float, c: float = 2.0) -> float:
    """2 pi sum_n e^{-c^n eps} x_n^2 / (||x|| ||y||), a lower bound for the alternating multiplier."""
    if spec.variant is not WeightVariant.TWO_SIDED:
        raise DomainError("the alternating pairing uses the two-sided weight")
    if eps <= 0 or c <= 1:
        raise DomainError("need eps > 0 and c > 1")
    alpha = -2.0 * spec.beta
    nx = test_vector_norm(spec, "x_head")
    bound = nx**2 * _dual_norm_sq(spec)
    series = _lacunary_series(
        lambda n: (_coeff_cached(_frequency_of(n), alpha) / (2.0 * math.pi)) ** 2, c, eps, bound
    )
    return 2.0 * math.pi * series / (nx * test_vector_norm(spec, "y_tail"))


def sqf_sharpness_pairing(spec: BasisSpec, eps: float, c: float = 2.0) -> float:
    """sum_n e^{-c^n eps} |x_n y_n| / (||x|| ||y||) for the pure-weight basis."""
    if spec.variant is not WeightVariant.PURE:
        raise DomainError("the square-function example uses the pure weight")
    if eps <= 0:
        raise DomainError("eps must be positive")
    b = spec.beta
    nx, ny = test_vector_norm(spec, "x_head"), test_vector_norm(spec, "y_tail")
    # |y_n| <= ||y|| ||psi_n|| with ||psi_n||^2 = 2 pi^{1+2b}/(1+2b)
    bound = nx * math.sqrt(_dual_norm_sq(spec)) * ny * math.sqrt(2.0 * math.pi ** (1 + 2 * b) / (1 + 2 * b))
    series = _lacunary_series(
        lambda n: abs(_coeff_cached(_frequency_of(n), -2.0 * b) / (2.0 * math.pi) * _coeff_cached(_frequency_of(n), -b)),
        c,
        eps,
        bound,
    )
    return series / (nx * ny)


# --- projection constants -------------------------------------------------------


@dataclass(frozen=True)
class ProjectionConstants:
    m: float
    kappa: float
    ub_lower: float
    ub_exact: bool
    kappa_exact: bool


def _projection_norm(L: np.ndarray, Linv: np.ndarray, idx) -> float:
    idx = np.asarray(idx)
    if idx.size == 1:
        i = int(idx[0])
        return float(np.linalg.norm(L[:, i]) * np.linalg.norm(Linv[i, :]))
    return operator_norm(L[:, idx] @ Linv[idx, :])


def projection_constants(
    spec: BasisSpec, mode: str = "exact_small", seed: int = 0, samples: int = 200
) -> ProjectionConstants:
    """Coordinate-projection constants of the first N basis elements in their span.

    ``exact_small`` enumerates all intervals and all subsets (N <= 12).
    ``sampled`` computes m exactly, kappa over all intervals when there are at
    most 2500 of them (prefix, suffix and random intervals otherwise) and a
    lower estimate of ub from the alternating pattern plus random subsets.
    """
    N = spec.N
    if mode == "exact_small" and N > 12:
        raise DomainError("exact subset enumeration is limited to N <= 12")
    if mode not in ("exact_small", "sampled"):
        raise DomainError(f"unknown mode {mode!r}")
    syn = synthesis_matrix(spec)
    L = syn.R1
    Linv = sla.solve_triangular(L, np.eye(N, dtype=complex))
    m = max(_projection_norm(L, Linv, [i]) for i in range(N))
    intervals = [(a, b) for a in range(N) for b in range(a, N)]
    kappa_exact = True
    if mode == "sampled" and len(intervals) > 2500:
        rng = np.random.default_rng(seed)
        pick = {(0, b) for b in range(N)} | {(a, N - 1) for a in range(N)}
        while len(pick) < 2 * N + samples:
            a, b = sorted(rng.integers(0, N, size=2))
            pick.add((int(a), int(b)))
        intervals = sorted(pick)
        kappa_exact = False
    kappa = max(_projection_norm(L, Linv, np.arange(a, b + 1)) for a, b in intervals)
    if mode == "exact_small":
        ub = max(
            _projection_norm(L, Linv, list(sub))
            for r in range(1, N + 1)
            for sub in combinations(range(N), r)
        )
        return ProjectionConstants(m, kappa, max(ub, kappa), True, True)
    rng = np.random.default_rng(seed + 1)
    plus = np.flatnonzero(alternating_signs(N) > 0)
    ub = _projection_norm(L, Linv, plus)
    for _ in range(samples):
        mask = rng.random(N) < 0.5
        if mask.any():
            ub = max(ub, _projection_norm(L, Linv, np.flatnonzero(mask)))
    return ProjectionConstants(m, kappa, max(ub, kappa), False, kappa_exact)


# --- square functions ------------------------------------------------------------


def _psi_modulus_integral(lam: np.ndarray, psi: str) -> np.ndarray:
    """int_0^inf |psi(t lam)|^2 dt/t per eigenvalue."""
    re = lam.real
    if np.any(re <= 0):
        raise DomainError("square functions need spectrum in the open right half-plane")
    if psi == "sqrt_z_exp":
        return np.abs(lam) / (2.0 * re)
    if psi == "z_exp":
        return np.abs(lam) ** 2 / (4.0 * re**2)
    raise DomainError(f"unknown psi {psi!r}")


def square_function_kernel(lam, psi: str) -> np.ndarray:
    """K_nm = int_0^inf conj(psi(t lam_n)) psi(t lam_m) dt/t."""
    lam = np.asarray(lam, dtype=complex)
    a, b = np.conj(lam)[:, None], lam[None, :]
    if psi == "sqrt_z_exp":
        return np.sqrt(a) * np.sqrt(b) / (a + b)
    if psi == "z_exp":
        return a * b / (a + b) ** 2
    raise DomainError(f"unknown psi {psi!r}")


def _coefficients(A: OperatorModel, x) -> np.ndarray:
    if isinstance(x, CoeffVector):
        x = x.values
    x = np.asarray(x, dtype=complex)
    if x.shape == (A.dim,):
        return x
    if A.kind is Kind.SCHAUDER:
        syn = synthesis_matrix(A.basis)
        if x.shape == syn.t.shape:
            return syn.analysis(x) if A.side == "primal" else syn.dual_analysis(x)
    raise DomainError("vector does not match the operator dimension or grid")


def square_function_integral(
    A: OperatorModel, psi: str, x, q: QuadConfig | None = None, method: str = "auto"
) -> float:
    """int_0^inf ||psi(tA) x||^2 dt/t by log-substitution quadrature.

    ``method='exact'`` uses the closed-form kernel instead; ``auto`` picks the
    closed form for orthonormal diagonal models.
    """
    if A.kind is Kind.DENSE:
        raise DomainError("square functions are implemented for diagonal and Schauder models")
    lam = A.eigenvalues
    if np.any(lam.real <= 0):
        raise DomainError("spectrum must lie in the open right half-plane")
    v = _coefficients(A, x)
    if method == "auto":
        method = "exact" if A.kind is Kind.DIAGONAL else "quadrature"
    if method == "exact":
        if A.kind is Kind.DIAGONAL:
            return float(np.sum(np.abs(v) ** 2 * _psi_modulus_integral(lam, psi)))
        G = A.span_factor.conj().T @ A.span_factor
        K = square_function_kernel(lam, psi)
        return float(np.real(np.conj(v) @ ((G * K) @ v)))
    if method != "quadrature":
        raise DomainError(f"unknown method {method!r}")
    q = q or QuadConfig(rel_tol=1e-12, abs_tol=1e-300)
    fpsi = PSI[psi]()
    factor = A.span_factor if A.kind is Kind.SCHAUDER else None
    lo = math.log(1e-18 / float(np.max(np.abs(lam))))
    hi = math.log(60.0 / float(np.min(lam.real)))
    n = int(math.ceil(hi - lo))

    def integrand(s):
        tt = np.exp(s.real)
        u = fpsi(np.outer(tt, lam)) * v
        if factor is not None:
            u = u @ factor.T
        return np.sum(np.abs(u) ** 2, axis=1)[:, None].astype(complex)

    piece = Piece(z=lambda s: s.astype(complex), dz=lambda s, z: np.ones_like(z), edges=np.linspace(lo, hi, n + 1))
    rep = integrate_pieces([piece], integrand, lambda e: float(np.max(np.abs(e))), q)
    return float(rep.value[0].real)


def square_function_constant(A: OperatorModel, psi: str) -> float:
    """Best K with int ||psi(tA)x||^2 dt/t <= K^2 ||x||^2 on the model."""
    if A.kind is Kind.DIAGONAL:
        return float(math.sqrt(np.max(_psi_modulus_integral(A.eigenvalues, psi))))
    G = A.span_factor.conj().T @ A.span_factor
    K = square_function_kernel(A.eigenvalues, psi)
    H = G * K
    H = 0.5 * (H + H.conj().T)
    top = sla.eigh(H, 0.5 * (G + G.conj().T), eigvals_only=True)[-1]
    return float(math.sqrt(top))


# --- Besselian coefficient estimates --------------------------------------------


def young_rhs_factor(beta: float, r: float) -> float:
    """||(n^{beta-1})||_q with 1/q = 1/2 + 1/r."""
    if not r > 2.0 / (1.0 - 2.0 * beta):
        raise DomainError("need r > 2/(1 - 2 beta)")
    q = 1.0 / (0.5 + 1.0 / r)
    return float(special.zeta(q * (1.0 - beta))) ** (1.0 / q)


def besselian_coeff_check(spec: BasisSpec, x, r: float) -> tuple[float, float]:
    """(||(x_n)||_r, ||x|| ||(n^{beta-1})||_q) for a grid vector x and the pure-weight basis."""
    if spec.variant is not WeightVariant.PURE:
        raise DomainError("the Besselian estimate concerns the pure-weight basis")
    factor = young_rhs_factor(spec.beta, r)
    syn = synthesis_matrix(spec)
    xn = syn.analysis(x)
    lhs = float(np.sum(np.abs(xn) ** r) ** (1.0 / r))
    return lhs, syn.l2_norm(x) * factor


def besselian_tail_constant(beta: float) -> float:
    """K_beta = ||(n^{beta-1})||_q with q = 4/(3 - 2 beta)."""
    q = 4.0 / (3.0 - 2.0 * beta)
    return float(special.zeta(q * (1.0 - beta))) ** (1.0 / q)


def weighted_tail_check(spec: BasisSpec, x, eps: float, c: float = 2.0) -> tuple[float, float]:
    """(||(e^{-c^{n-1} eps} x_n)||_2, K_beta Ei(eps)^{(1+2beta)/4} ||x||)."""
    syn = synthesis_matrix(spec)
    xn = syn.analysis(x)
    n = np.arange(1, spec.N + 1)
    lhs = float(np.linalg.norm(np.exp(-(c ** (n - 1.0)) * eps) * xn))
    rhs = besselian_tail_constant(spec.beta) * exp_int(eps) ** ((1 + 2 * spec.beta) / 4) * syn.l2_norm(x)
    return lhs, rhs


def random_grid_vectors(spec: BasisSpec, count: int, seed: int = 0) -> np.ndarray:
    """Random trigonometric polynomials plus random interval indicators, sampled on the grid."""
    syn = synthesis_matrix(spec)
    rng = np.random.default_rng(seed)
    K = max(4, spec.N)
    ks = np.arange(-K, K + 1)
    out = np.empty((count, syn.t.size), dtype=complex)
    for i in range(count):
        amp = (rng.standard_normal(ks.size) + 1j * rng.standard_normal(ks.size)) / (1.0 + np.abs(ks)) ** 0.6
        v = np.exp(1j * np.outer(syn.t, ks)) @ amp
        a, b = np.sort(rng.uniform(-math.pi, math.pi, size=2))
        v += rng.standard_normal() * ((syn.t > a) & (syn.t < b))
        out[i] = v
    return out
