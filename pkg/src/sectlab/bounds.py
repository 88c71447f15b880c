"""Closed-form norm bounds for functions of sectorial operators.

Every evaluator here is a pure function of scalars. Bounds that the theory only
states up to an unnamed constant take that constant as an explicit calibration
argument with a documented default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import DomainError
from .specfn import exp_int, gamma_fn

#: default calibration for the exponential-decay constant
C_KAPPA_DEFAULT = 2.0 * math.e**2 + 1.0
#: Nikolski exponent coefficient in ub <= 2 m N^(1 - 0.32/kappa^2)
NIKOLSKI_COEFF = 0.32


@dataclass(frozen=True)
class BoundQuery:
    """Parameter bundle consumed by the bound evaluators."""

    eps: float
    r0: float = math.inf
    R: float = 0.0
    phi: float = math.pi / 4
    kappa: float = 0.5
    M: float = 1.0
    sigma: float = 1.0
    delta: float = 1.0
    c: float = 2.0
    Kpsi: float = 1.0

    def __post_init__(self):
        if not self.eps > 0:
            raise DomainError("eps must be positive")
        if not 0.0 < self.phi < math.pi / 2:
            raise DomainError("phi must lie in (0, pi/2)")
        if not 0.0 <= self.kappa < 1.0:
            raise DomainError("kappa must lie in [0, 1)")
        if self.M < 1.0:
            raise DomainError("sectorality constants are at least 1")
        if self.r0 < 0 or self.R < 0:
            raise DomainError("radii must be nonnegative")
        if self.c <= 1.0:
            raise DomainError("lacunary ratio c must exceed 1")


def _check_phi(phi: float) -> None:
    if not 0.0 < phi < math.pi / 2:
        raise DomainError(f"phi must lie in (0, pi/2), got {phi!r}")


def _check_M(M: float) -> None:
    if M < 1.0:
        raise DomainError(f"M must be at least 1, got {M!r}")


def thm1_bound(eps: float, r0: float, phi: float) -> float:
    """Piecewise log-bound b(eps, r0, phi); multiply by M/pi and ||f||."""
    _check_phi(phi)
    if not (eps > 0 and r0 > 0):
        raise DomainError("eps and r0 must be positive")
    if 2.0 * eps * r0 <= 1.0:
        return exp_int(eps * r0 * math.cos(phi)) + math.exp(eps * r0) * (math.pi - phi)
    return exp_int(math.cos(phi) / 2.0) + math.sqrt(math.e) * (math.pi - phi)


def expstab_bound(eps: float, R: float, phi: float, kappa: float) -> float:
    """b_kappa(eps, R, phi) for invertible operators; multiply by M/pi."""
    _check_phi(phi)
    if R <= 0:
        raise DomainError("expstab_bound needs R > 0; use thm1_bound otherwise")
    if not 0.0 < kappa < 1.0:
        raise DomainError("kappa must lie in (0, 1)")
    if eps <= 0:
        raise DomainError("eps must be positive")
    x = eps * kappa * R * math.cos(phi)
    return exp_int(x) + kappa / (1.0 - kappa) * math.exp(-x)


def semigroup_bound(M: float) -> float:
    """Uniform bound (2M/pi)(log M + 5) on the semigroup for half-plane constant M."""
    _check_M(M)
    return 2.0 * M / math.pi * (math.log(M) + 5.0)


C1_ABS = 2.0 * math.exp(0.2) / math.pi * (math.log(10.0) + 2.0 * math.pi / 3.0)
C2_ABS = 2.0 * math.exp(0.2) / math.pi


@dataclass(frozen=True)
class SegmentBound:
    """Constants of the band-limited bound together with the competing ones."""

    C1: float
    C2: float
    C3: float
    bound: float
    bound_C3: float
    vitse: tuple[float, float, float] = field(default=(0.0, 0.0, 0.0))


def vitse_constants(M: float) -> tuple[float, float, float]:
    """Vitse's 30M^2/pi, 16M^3/pi and 30M^3/pi."""
    _check_M(M)
    return 30.0 * M**2 / math.pi, 16.0 * M**3 / math.pi, 30.0 * M**3 / math.pi


def hinf_segment_bound(eps: float, sigma: float, M: float) -> SegmentBound:
    """Bound C1 + C2 log(sigma/eps) <= C3 log(sigma e/eps) for spectra in [eps, sigma]."""
    _check_M(M)
    if not 0.0 < eps < sigma:
        raise DomainError("need 0 < eps < sigma")
    C1 = C1_ABS * M + C2_ABS * M * math.log(M)
    C2 = C2_ABS * M
    C3 = C1
    ratio = math.log(sigma / eps)
    return SegmentBound(
        C1=C1,
        C2=C2,
        C3=C3,
        bound=C1 + C2 * ratio,
        bound_C3=C3 * (ratio + 1.0),
        vitse=vitse_constants(M),
    )


def vitse_theta(M: float) -> float:
    """Sector angle arccos(1/(2M)) attained by half-plane operators with constant M."""
    _check_M(M)
    return math.acos(1.0 / (2.0 * M))


def exp_decay_bound(
    eps: float,
    R: float,
    phi: float,
    kappa: float,
    M: float = 1.0,
    C_kappa: float = C_KAPPA_DEFAULT,
) -> float:
    """C e^{-eps kappa R cos phi} with C = C_kappa M Ei(cos phi)."""
    _check_phi(phi)
    _check_M(M)
    if not 0.0 <= kappa < 1.0:
        raise DomainError("kappa must lie in [0, 1)")
    C = C_kappa * M * exp_int(math.cos(phi))
    return C * math.exp(-eps * kappa * R * math.cos(phi))


def frac_power_constant(alpha: float, kappa: float) -> float:
    """C_{alpha,kappa}: ray contribution plus the chord contribution at eta = sqrt(kappa)."""
    if not 0.0 < alpha <= 1.0:
        raise DomainError("alpha must lie in (0, 1]")
    if not 0.0 <= kappa < 1.0:
        raise DomainError("kappa must lie in [0, 1)")
    eta = math.sqrt(kappa)
    rays = 2.0 * gamma_fn(alpha) / math.pi
    chord = (2.0 * eta / (1.0 - eta)) * (alpha / (math.e * (1.0 - eta))) ** alpha / math.pi
    return rays + chord


def frac_power_bound(
    alpha: float, t: float, kappa: float, R: float, phi: float, M: float
) -> float:
    """Bound on ||A^alpha e^{-tA}||."""
    _check_phi(phi)
    _check_M(M)
    if t <= 0:
        raise DomainError("t must be positive")
    C = frac_power_constant(alpha, kappa) * M * math.cos(phi) ** (-alpha)
    return C * t ** (-alpha) * math.exp(-t * kappa * R * math.cos(phi))


def sqf_bound(
    eps: float,
    R: float,
    phi: float,
    kappa: float,
    Kpsi: float,
    M: float,
    K: float = 1.0,
) -> float:
    """Square-function bound C Kpsi sqrt(Ei(kappa eps R cos phi)); K is a calibration."""
    _check_phi(phi)
    _check_M(M)
    if R <= 0:
        raise DomainError("sqf_bound needs R > 0")
    if not 0.0 < kappa < 1.0:
        raise DomainError("kappa must lie in (0, 1)")
    if Kpsi <= 0:
        raise DomainError("Kpsi must be positive")
    C = K * frac_power_constant(0.5, kappa) * M / math.sqrt(math.cos(phi))
    return C * Kpsi * math.sqrt(exp_int(kappa * eps * R * math.cos(phi)))


def nikolski_ub_bound(N: int, m: float, kappa_basis: float) -> float:
    """2 m N^(1 - 0.32/kappa^2) for unconditional constants of N-term bases."""
    if N < 1:
        raise DomainError("N must be a positive integer")
    return 2.0 * m * N ** (1.0 - NIKOLSKI_COEFF / kappa_basis**2)


def haase_rozendaal_eta(delta: float, eps: float, c_abs: float = 1.0) -> float:
    """Comparison growth function: c|log(eps delta)| below the seam, 2c above."""
    if delta <= 0 or eps <= 0 or c_abs <= 0:
        raise DomainError("delta, eps and c_abs must be positive")
    if delta * eps <= 0.5:
        return c_abs * abs(math.log(eps * delta))
    return 2.0 * c_abs


# --- lacunary multiplier bound -------------------------------------------------


@lru_cache(maxsize=1)
def k_eps_constants(grid_points: int = 20001) -> tuple[float, float]:
    """(K0, K1): K0 = inf of (1+1/e)^{exp(-e)} e over a log grid, K1 = log(1 + 1/K0)."""
    e = np.logspace(-12.0, 3.0, grid_points)
    h = np.exp(np.exp(-e) * np.log1p(1.0 / e)) * e
    K0 = float(h.min())
    return K0, math.log1p(1.0 / K0)


def n_eps(eps: float, c: float) -> int:
    """Number of lacunary modes that survive the semigroup at time eps."""
    if c <= 1:
        raise DomainError("c must exceed 1")
    return int(math.floor(2.0 * exp_int(eps) / math.log(c)))


def eps_critical(c: float) -> float:
    """Threshold 1/(sqrt(c) - 1) separating the two regimes of k_eps."""
    return 1.0 / (math.sqrt(c) - 1.0)


def k_eps(eps: float, c: float, K0: float | None = None) -> float:
    if K0 is None:
        K0 = k_eps_constants()[0]
    if eps <= eps_critical(c):
        return K0
    return max(K0, c * eps)


def multiplier_upper_bound(
    eps: float,
    c: float,
    m_basis: float,
    ub_of_Neps: Callable[[int], float],
    k_eps_consts: tuple[float, float] | None = None,
) -> float:
    """pi ub_{N_eps} + m e^{-k_eps} (K1/log c + 1); the empty family has ub = 0."""
    if c <= 1:
        raise DomainError("c must exceed 1")
    K0, K1 = k_eps_consts if k_eps_consts is not None else k_eps_constants()
    N = n_eps(eps, c)
    head = math.pi * ub_of_Neps(N) if N > 0 else 0.0
    tail = m_basis * math.exp(-k_eps(eps, c, K0)) * (K1 / math.log(c) + 1.0)
    return head + tail


def banach_multiplier_bound(eps: float, c: float, m_basis: float, K2: float = 1.0) -> float:
    """(K2/log c + 1) m Ei(eps): general Banach-space rate."""
    return (K2 / math.log(c) + 1.0) * m_basis * exp_int(eps)


def hilbert_multiplier_bound(
    eps: float, c: float, m_basis: float, kappa_basis: float, K3: float = 1.0
) -> float:
    """(K3/log c + 1) m Ei(eps)^(1 - 0.32/kappa^2): Hilbert-space refinement."""
    exponent = 1.0 - NIKOLSKI_COEFF / kappa_basis**2
    return (K3 / math.log(c) + 1.0) * m_basis * exp_int(eps) ** exponent


# --- band-limited functions via entire extensions ------------------------------


def band_limited_bound(
    eps: float,
    sigma: float,
    sectorality: Callable[[float], float],
    omega: float = 0.0,
    phis=None,
    ks=range(1, 21),
) -> tuple[float, float, int]:
    """Grid infimum over (phi, k) of (M(phi)/pi) b(eps, 1/(k sigma), phi) e^{(sigma-eps)/(k sigma)}.

    Returns (value, phi, k) at the minimizer.
    """
    if not 0.0 < eps < sigma:
        raise DomainError("need 0 < eps < sigma")
    if phis is None:
        phis = np.linspace(omega, math.pi / 2, 42)[1:-1]
    best = (math.inf, math.nan, 0)
    for phi in phis:
        M = sectorality(float(phi))
        for k in ks:
            r0 = 1.0 / (k * sigma)
            val = M / math.pi * thm1_bound(eps, r0, phi) * math.exp((sigma - eps) / (k * sigma))
            if val < best[0]:
                best = (val, float(phi), int(k))
    return best


def phragmen_lindelof_bound(sup_on_axis: float, sigma: float, y: float) -> float:
    """Growth bound e^{sigma |y|} sup for entire functions of exponential type sigma."""
    return math.exp(sigma * abs(y)) * sup_on_axis


# --- Besov-type norm of exponential sums ---------------------------------------


def dyadic_partition(s, k: int) -> np.ndarray:
    """Triangular partition of unity on (0, inf): hat function centred at 2^k in log2 scale."""
    s = np.asarray(s, dtype=float)
    u = np.log2(np.maximum(s, 1e-300)) - k
    return np.clip(1.0 - np.abs(u), 0.0, None)


def besov_norm_exponential_sum(amplitudes, times, f_inf: complex = 0.0) -> float:
    """Upper evaluation of |f(inf)| + sum_k sup |f * phi_k| for f(z) = sum a_j exp(-t_j z).

    Each band piece is again an exponential sum whose sup over the right
    half-plane is bounded by the sum of moduli of its coefficients; for a
    single exponential this is exact.
    """
    a = np.asarray(amplitudes, dtype=complex)
    t = np.asarray(times, dtype=float)
    if np.any(t <= 0):
        raise DomainError("exponential times must be positive")
    kmin = int(math.floor(np.log2(t.min()))) - 1
    kmax = int(math.ceil(np.log2(t.max()))) + 1
    total = abs(f_inf)
    for k in range(kmin, kmax + 1):
        total += float(np.sum(np.abs(a) * dyadic_partition(t, k)))
    return total


def besov_calculus_bound(M: float, besov_norm: float, c_abs: float = 1.0) -> float:
    """c M (log M + 1) times the Besov-type norm."""
    _check_M(M)
    return c_abs * M * (math.log(M) + 1.0) * besov_norm
