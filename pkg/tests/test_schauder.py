import math

import numpy as np
import pytest
import scipy.linalg as sla
from hypothesis import given, settings
from hypothesis import strategies as st

from sectlab import bounds
from sectlab.calculus import diagonal_onb
from sectlab.errors import DomainError
from sectlab.schauder import (
    BasisSpec,
    WeightVariant,
    alternating_signs,
    besselian_coeff_check,
    coefficient_asymptote,
    d3_lower_bound_terms,
    d_constant,
    fourier_coeff_c,
    frequencies,
    lacunary_eigenvalues,
    multiplier_grid_matrix,
    multiplier_norm,
    multiplier_operator,
    pairing_lower_bound,
    projection_constants,
    random_grid_vectors,
    sqf_sharpness_pairing,
    square_function_constant,
    square_function_integral,
    synthesis_matrix,
    test_vector_coeffs as vector_coeffs,
    test_vector_function as vector_function,
    test_vector_norm as vector_norm,
    weighted_tail_check,
)
from tests import oracles

TWO = WeightVariant.TWO_SIDED
PURE = WeightVariant.PURE


# --- Fourier coefficients -------------------------------------------------------


@pytest.mark.parametrize("alpha", [-0.9, -0.5, -0.1, 0.0, 0.4])
@pytest.mark.parametrize("n", [0, 1, 2, 7, 64, 1000])
def test_coefficients_match_incomplete_gamma(n, alpha):
    assert fourier_coeff_c(n, alpha) == pytest.approx(oracles.fourier_c(n, alpha), rel=1e-11, abs=1e-13)


def test_coefficient_of_constant():
    assert fourier_coeff_c(1, 0.0) == pytest.approx(2.0, rel=1e-14)


@pytest.mark.parametrize("alpha", [-0.9, -0.8, -0.6])
def test_coefficients_approach_asymptote(alpha):
    target = coefficient_asymptote(alpha)
    drift = [abs(fourier_coeff_c(2**j, alpha) * (2**j) ** (1 + alpha) - target) * 2**j for j in range(3, 13)]
    assert max(drift) < 5.0


def test_d_constant_matches_oracle_and_brackets():
    for alpha in (-0.9, -0.5, -0.2, 0.0):
        d1, d3 = d_constant(1, alpha), d_constant(3, alpha)
        assert d1 == pytest.approx(2 * oracles.cos_power_integral(alpha, math.pi / 2), rel=1e-11)
        assert d3 == pytest.approx(2 * oracles.cos_power_integral(alpha, 1.5 * math.pi), rel=1e-11)
        for n in (1, 2, 3, 5, 16, 101, 1024):
            assert d3 - 1e-12 <= d_constant(n, alpha) <= d1 + 1e-12
    assert d_constant(3, -0.5) > 0
    with pytest.raises(DomainError):
        d_constant(2, 0.3)
    with pytest.raises(DomainError):
        d_constant(0, -0.5)


def test_d_tends_to_asymptote_for_large_n():
    alpha = -0.5
    assert d_constant(4097, alpha) == pytest.approx(coefficient_asymptote(alpha), abs=0.05)


def test_d3_chain():
    parts = d3_lower_bound_terms()
    assert parts.printed_total == pytest.approx(0.0314, abs=1e-3)
    assert 0 < parts.exact_total <= d_constant(3, -0.5)
    assert parts.tail_integral == pytest.approx(oracles.cos_power_integral(-0.5, 1.5 * math.pi)
                                                - oracles.cos_power_integral(-0.5, math.pi / 2), rel=1e-12)


def test_coefficient_domain():
    with pytest.raises(DomainError):
        fourier_coeff_c(3, -1.0)
    with pytest.raises(DomainError):
        BasisSpec(0.2, TWO)
    with pytest.raises(DomainError):
        BasisSpec(0.3, PURE)
    with pytest.raises(DomainError):
        BasisSpec(0.4, TWO, N=0)


# --- test vectors -------------------------------------------------------------


def test_head_vector_shape():
    spec = BasisSpec(0.45, TWO, N=64)
    x = vector_coeffs(spec, "x_head").values
    k = np.abs(frequencies(64))
    assert np.all(x > 0)
    assert np.allclose(x[1::2][:-1], x[2::2])  # +k and -k agree
    ks = np.array([2**j for j in range(3, 10)])
    vals = np.array([fourier_coeff_c(kk, -0.9) for kk in ks])
    slope = np.polyfit(np.log(ks), np.log(vals), 1)[0]
    assert slope == pytest.approx(-1 + 2 * 0.45, abs=0.03)
    assert k[0] == 0


@pytest.mark.parametrize("variant,beta", [(TWO, 0.4), (PURE, 0.4)])
def test_vector_coefficients_match_grid_analysis(variant, beta):
    spec = BasisSpec(beta, variant, N=16)
    syn = synthesis_matrix(spec)
    x = syn.sample(vector_function(spec, "x_head"))
    y = syn.sample(vector_function(spec, "y_tail"))
    assert np.allclose(syn.analysis(x), vector_coeffs(spec, "x_head").values, rtol=0, atol=1e-8)
    assert np.allclose(syn.dual_analysis(y), vector_coeffs(spec, "y_tail").values, rtol=0, atol=1e-7)
    assert syn.l2_norm(x) == pytest.approx(vector_norm(spec, "x_head"), rel=1e-6)


def test_tail_vector_relation_two_sided():
    spec = BasisSpec(0.4, TWO, N=12)
    x = vector_coeffs(spec, "x_head").values
    y = vector_coeffs(spec, "y_tail").values
    sign = np.where(np.abs(frequencies(12)) % 2 == 0, 1.0, -1.0)
    assert np.allclose(y, 2 * math.pi * sign * x, rtol=1e-13)


# --- synthesis and multipliers ---------------------------------------------------


@pytest.mark.parametrize("spec", [BasisSpec(0.3, TWO, 32), BasisSpec(0.45, TWO, 16), BasisSpec(0.4, PURE, 16)])
def test_biorthogonality(spec):
    assert synthesis_matrix(spec).biorth_error < 1e-10


def test_multiplier_acts_diagonally():
    spec = BasisSpec(0.4, TWO, N=12)
    syn = synthesis_matrix(spec)
    mu = np.linspace(1.0, 3.0, 12)
    T = multiplier_grid_matrix(spec, mu)
    assert np.allclose(T @ syn.S, syn.S * mu, atol=1e-9 * np.max(np.abs(syn.S)))


def _gram_route_norm(spec, mu):
    syn = synthesis_matrix(spec)
    sw = np.sqrt(syn.weights)[:, None]
    A = sw * syn.S * mu
    B = sw * syn.Sdual
    # ||A B^H||^2 is the top eigenvalue of (A^H A)(B^H B)
    ev = np.linalg.eigvals((A.conj().T @ A) @ (B.conj().T @ B))
    return math.sqrt(float(np.max(ev.real)))


@pytest.mark.parametrize("variant,beta", [(TWO, 0.3), (TWO, 0.45), (PURE, 0.4)])
def test_multiplier_norm_two_routes(variant, beta):
    spec = BasisSpec(beta, variant, N=16)
    for mu in (alternating_signs(16), lacunary_eigenvalues(16) ** 0 * np.exp(-1e-3 * lacunary_eigenvalues(16))):
        assert multiplier_norm(spec, mu) == pytest.approx(_gram_route_norm(spec, mu), rel=1e-8)


def test_in_span_norm_matches_generalized_eigenproblem():
    spec = BasisSpec(0.4, TWO, N=10)
    mu = alternating_signs(10).astype(complex)
    G = synthesis_matrix(spec).gram
    D = np.diag(mu)
    top = sla.eigh(D.conj().T @ G @ D, G, eigvals_only=True)[-1]
    op = multiplier_operator(spec, mu)
    assert op.norm(mu, space="span") == pytest.approx(math.sqrt(top), rel=1e-9)


def test_orthonormal_control():
    spec = BasisSpec(0.0, TWO, N=16)
    mu = alternating_signs(16)
    assert multiplier_norm(spec, mu) == pytest.approx(1.0, rel=1e-10)
    pc = projection_constants(BasisSpec(0.0, TWO, N=8))
    assert (pc.m, pc.kappa, pc.ub_lower) == pytest.approx((1.0, 1.0, 1.0), rel=1e-9)


@pytest.mark.parametrize("N", [6, 9])
def test_projection_constant_ordering(N):
    pc = projection_constants(BasisSpec(0.4, TWO, N=N))
    assert 1.0 - 1e-12 <= pc.m <= pc.kappa + 1e-12 <= pc.ub_lower + 2e-12
    assert pc.ub_exact and pc.kappa_exact
    assert pc.ub_lower <= bounds.nikolski_ub_bound(N, pc.m, pc.kappa)
    with pytest.raises(DomainError):
        projection_constants(BasisSpec(0.4, TWO, N=16), mode="exact_small")


def test_sampled_mode_agrees_with_exact_on_intervals():
    spec = BasisSpec(0.4, TWO, N=12)
    exact = projection_constants(spec)
    sampled = projection_constants(spec, mode="sampled", samples=50)
    assert sampled.m == pytest.approx(exact.m)
    assert sampled.kappa == pytest.approx(exact.kappa)
    assert sampled.ub_lower <= exact.ub_lower + 1e-12


# --- pairings ---------------------------------------------------------------------


def _pairing_oracle(beta, eps, c=2.0, terms=120):
    # independent sum through the incomplete-gamma coefficients
    alpha = -2 * beta
    nx = math.sqrt(2 * (math.pi / 2) ** (1 - 2 * beta) / (1 - 2 * beta))
    total = 0.0
    for n in range(1, terms + 1):
        total += math.exp(-(c**n) * eps) * (oracles.fourier_c(n // 2, alpha) / (2 * math.pi)) ** 2
    return 2 * math.pi * total / nx**2


def test_pairing_matches_oracle():
    spec = BasisSpec(0.4, TWO)
    for eps in (1e-2, 1e-5):
        assert pairing_lower_bound(spec, eps) == pytest.approx(_pairing_oracle(0.4, eps), rel=1e-10)


def test_pairing_grows_as_eps_shrinks():
    spec = BasisSpec(0.45, TWO)
    vals = [pairing_lower_bound(spec, e) for e in np.logspace(-2, -10, 9)]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    sq = BasisSpec(0.4, PURE)
    vals = [sqf_sharpness_pairing(sq, e) for e in np.logspace(-2, -10, 9)]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    with pytest.raises(DomainError):
        pairing_lower_bound(sq, 1e-3)
    with pytest.raises(DomainError):
        sqf_sharpness_pairing(spec, 1e-3)


def test_pairing_below_truncated_norm():
    spec = BasisSpec(0.45, TWO, N=48)
    lam = lacunary_eigenvalues(48)
    mu = alternating_signs(48) * np.exp(-1e-6 * lam)
    assert pairing_lower_bound(spec, 1e-6) <= multiplier_norm(spec, mu) * (1 + 1e-9)


@pytest.mark.parametrize("delta", [0.3, 0.45])
def test_sqf_pairing_exponent_deep_range(delta):
    spec = BasisSpec(0.5 - delta / 3, PURE)
    eps = np.logspace(-100, -20, 25)
    vals = [sqf_sharpness_pairing(spec, e) for e in eps]
    slope = np.polyfit(np.log(np.log(1 / eps)), np.log(vals), 1)[0]
    assert slope == pytest.approx(0.5 - delta, abs=0.1)


# --- square functions --------------------------------------------------------------


def test_onb_square_function_constant():
    A = diagonal_onb(2.0 ** np.arange(1, 17))
    assert square_function_constant(A, "sqrt_z_exp") ** 2 == pytest.approx(0.5, abs=1e-10)
    assert square_function_constant(A, "z_exp") ** 2 == pytest.approx(0.25, abs=1e-10)


@settings(max_examples=15)
@given(st.lists(st.floats(min_value=0.01, max_value=1e4), min_size=1, max_size=8), st.integers(0, 1000))
def test_square_function_routes_agree_diagonal(lam, seed):
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(len(lam)) + 1j * rng.standard_normal(len(lam))
    A = diagonal_onb(lam)
    exact = square_function_integral(A, "sqrt_z_exp", x, method="exact")
    quad = square_function_integral(A, "sqrt_z_exp", x, method="quadrature")
    assert quad == pytest.approx(exact, rel=1e-9)


def test_square_function_routes_agree_schauder():
    spec = BasisSpec(0.4, PURE, N=12)
    A = multiplier_operator(spec, lacunary_eigenvalues(12), side="dual")
    x = np.random.default_rng(3).standard_normal(12)
    for psi in ("sqrt_z_exp", "z_exp"):
        exact = square_function_integral(A, psi, x, method="exact")
        quad = square_function_integral(A, psi, x, method="quadrature")
        assert quad == pytest.approx(exact, rel=1e-8)
    K = square_function_constant(A, "sqrt_z_exp")
    norm2 = float(np.linalg.norm(A.span_factor @ x) ** 2)
    assert square_function_integral(A, "sqrt_z_exp", x, method="exact") <= K**2 * norm2 * (1 + 1e-10)


def test_square_function_domain():
    with pytest.raises(DomainError):
        square_function_integral(diagonal_onb([1.0]), "nope", [1.0], method="exact")
    with pytest.raises(DomainError):
        square_function_constant(diagonal_onb([1.0]), "nope")


# --- Besselian estimates ------------------------------------------------------------


def test_besselian_checks_on_random_vectors():
    spec = BasisSpec(0.4, PURE, N=32)
    vecs = random_grid_vectors(spec, 10, seed=7)
    for v in vecs:
        lhs, rhs = besselian_coeff_check(spec, v, r=12.0)
        assert lhs <= rhs
        for eps in (1e-6, 1e-3, 0.1):
            lhs, rhs = weighted_tail_check(spec, v, eps)
            assert lhs <= rhs
    with pytest.raises(DomainError):
        besselian_coeff_check(spec, vecs[0], r=5.0)
