import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sectlab import bounds
from sectlab.calculus import (
    Arc,
    Chord,
    QuadConfig,
    Variant,
    build_keyhole_path,
    bump,
    cayley,
    constant,
    dense_matrix,
    diagonal_onb,
    exp_eps,
    operator_norm,
    power_exp,
    resolvent_apply,
    resolvent_at_minus_one,
    riesz_dunford,
    sectorality_constant,
    semigroup_apply,
)
from sectlab.calculus.quadrature import Piece, integrate_pieces
from sectlab.errors import DomainError, GeometryError, NumericError, QuadratureError, SingularityError


def test_operator_norm_basics():
    assert operator_norm(np.eye(4)) == pytest.approx(1.0)
    assert operator_norm(np.diag([3.0, -4.0])) == pytest.approx(4.0)
    rng = np.random.default_rng(5)
    B = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    # oracle: largest eigenvalue of the Gram matrix
    top = np.max(np.linalg.eigvalsh(B.conj().T @ B))
    assert operator_norm(B) == pytest.approx(math.sqrt(top), rel=1e-10)


def test_operator_norm_weighted():
    rng = np.random.default_rng(1)
    B = rng.standard_normal((6, 6))
    w = rng.uniform(0.5, 2.0, 6)
    sw = np.sqrt(w)
    expected = np.linalg.norm(sw[:, None] * B / sw[None, :], 2)
    assert operator_norm(B, weights=w) == pytest.approx(expected, rel=1e-10)
    with pytest.raises(DomainError):
        operator_norm(B, weights=-w)
    with pytest.raises(DomainError):
        operator_norm(np.array([[np.nan, 1.0], [0.0, 1.0]]))


def test_operator_norm_reports_nonconvergence():
    rng = np.random.default_rng(2)
    with pytest.raises(NumericError):
        operator_norm(rng.standard_normal((60, 60)), max_iter=2, tol=1e-15)


@given(st.integers(min_value=2, max_value=20), st.integers(min_value=0, max_value=10_000))
def test_operator_norm_matches_svd(n, seed):
    rng = np.random.default_rng(seed)
    B = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    assert operator_norm(B) == pytest.approx(np.linalg.norm(B, 2), rel=1e-9)


def test_keyhole_paths():
    sb = build_keyhole_path(math.pi / 4, variant=Variant.SECTOR_BOUNDARY)
    assert [s.angle for s in sb.rays()] == [math.pi / 4, -math.pi / 4]
    bu = build_keyhole_path(math.pi / 4, 1.0, Variant.BALL_UNION_SECTOR)
    arc = bu.segments[1]
    assert isinstance(arc, Arc) and arc.to_angle - arc.from_angle == pytest.approx(2 * math.pi - math.pi / 2)
    ch = build_keyhole_path(0.6, 2.0, Variant.CHORD_KEYHOLE)
    chord = ch.segments[1]
    assert isinstance(chord, Chord)
    assert abs(chord.end_point - chord.start_point) == pytest.approx(2 * (2.0 * np.exp(0.6j)).imag)
    with pytest.raises(DomainError):
        build_keyhole_path(math.pi / 2)
    with pytest.raises(DomainError):
        build_keyhole_path(0.5, 0.0, Variant.BALL_UNION_SECTOR)


def test_resolvents():
    A = diagonal_onb([1.0, 2.0])
    assert np.allclose(resolvent_apply(A, -1.0), np.diag([-0.5, -1.0 / 3.0]))
    B = dense_matrix([[1.0, 10.0], [0.0, 2.0]])
    # closed-form 2x2 inverse of -B
    assert np.allclose(resolvent_apply(B, 0.0), [[-1.0, 5.0], [0.0, -0.5]])
    with pytest.raises(SingularityError) as info:
        resolvent_apply(A, 2.0 + 1e-14)
    assert info.value.distance < 1e-12


def test_resolvent_seam_bound():
    A = diagonal_onb([2.0, 3.0, 5.0])
    inv = A.inverse_norm()
    for z in (0.1, -0.3, 0.4j, 0.2 - 0.2j):
        assert operator_norm(resolvent_apply(A, z)) <= inv / (1 - abs(z) * inv) + 1e-12


def test_model_validation():
    with pytest.raises(DomainError):
        diagonal_onb([-1.0])
    with pytest.raises(DomainError):
        dense_matrix(np.ones((2, 3)))


def test_scalar_semigroup():
    out = riesz_dunford(diagonal_onb([2.0]), exp_eps(0.1))
    assert out.matrix[0, 0] == pytest.approx(math.exp(-0.2), rel=1e-10)
    assert out.error_estimate < 1e-8


def test_bump_on_diagonal():
    lam = np.array([1.0, 2.0, 4.0, 8.0])
    out = riesz_dunford(diagonal_onb(lam), bump())
    assert np.allclose(np.diag(out.matrix), lam / (1 + lam) ** 2, rtol=1e-8, atol=0)


def test_dense_nonnormal_against_eigendecomposition():
    B = np.array([[1.0, 3.0, -2.0], [0.0, 2.0, 5.0], [0.0, 0.0, 4.0]])
    vals, V = np.linalg.eig(B)
    for f in (bump(), exp_eps(0.3), resolvent_at_minus_one()):
        oracle = V @ np.diag(f(vals)) @ np.linalg.inv(V)
        out = riesz_dunford(dense_matrix(B), f)
        assert np.max(np.abs(out.matrix - oracle)) <= 1e-10 + out.error_estimate


def test_homomorphism_dense():
    B = dense_matrix([[1.0, 2.0], [0.0, 3.0]])
    f, g = bump(), exp_eps(0.2)
    prod = riesz_dunford(B, f * g)
    sep = riesz_dunford(B, f).matrix @ riesz_dunford(B, g).matrix
    assert np.max(np.abs(prod.matrix - sep)) <= 1e-10


def test_path_independence_sector_angles():
    A = diagonal_onb([1.0, 3.0, 9.0])
    f = bump()
    a = riesz_dunford(A, f, build_keyhole_path(0.4, variant=Variant.SECTOR_BOUNDARY))
    b = riesz_dunford(A, f, build_keyhole_path(1.2, variant=Variant.SECTOR_BOUNDARY))
    assert np.max(np.abs(a.matrix - b.matrix)) <= a.error_estimate + b.error_estimate + 1e-14


def test_geometry_errors():
    A = diagonal_onb([1.0, 2.0])
    with pytest.raises(GeometryError):
        riesz_dunford(A, constant(1.0), build_keyhole_path(0.5, variant=Variant.SECTOR_BOUNDARY))
    with pytest.raises(GeometryError):
        riesz_dunford(A, bump(), build_keyhole_path(0.5, 2.0, Variant.BALL_UNION_SECTOR))
    with pytest.raises(GeometryError):
        riesz_dunford(A, exp_eps(1.0), build_keyhole_path(0.5, 1.5, Variant.BALL_COMPLEMENT_SECTOR))
    with pytest.raises(GeometryError):
        riesz_dunford(diagonal_onb([1.0 + 1.0j]), bump(), build_keyhole_path(0.5, 0.5, Variant.BALL_UNION_SECTOR))


def test_power_needs_invertibility_or_decay():
    out = riesz_dunford(diagonal_onb([0.5, 2.0]), power_exp(0.5, 1.0))
    assert np.allclose(np.diag(out.matrix), np.sqrt([0.5, 2.0]) * np.exp(-np.array([0.5, 2.0])), rtol=1e-9)


def test_cayley_bounded_by_one_on_positive_spectrum():
    lam = 2.0 ** np.arange(1, 9)
    out = riesz_dunford(diagonal_onb(lam), cayley() * exp_eps(1e-3))
    assert np.allclose(np.diag(out.matrix), (lam - 1) / (lam + 1) * np.exp(-1e-3 * lam), rtol=1e-8)


def test_sectorality_constants():
    A = diagonal_onb([1.0])
    for delta in (0.3, math.pi / 4, 1.2):
        # brute-force sup of |z|/|z-1| over both boundary rays
        rho = np.logspace(-4, 4, 200001)
        z = rho * np.exp(1j * delta)
        brute = float(np.max(np.abs(z) / np.abs(z - 1.0)))
        assert sectorality_constant(A, delta) == pytest.approx(1 / math.sin(delta), rel=1e-12)
        assert brute == pytest.approx(1 / math.sin(delta), rel=1e-6)
    B = diagonal_onb(2.0 ** np.arange(1, 40))
    vals = [sectorality_constant(B, d) for d in np.linspace(0.2, 1.5, 12)]
    assert all(v >= 1 for v in vals)
    assert all(a >= b for a, b in zip(vals, vals[1:]))
    small = sectorality_constant(diagonal_onb(2.0 ** np.arange(1, 5)), 0.7)
    assert sectorality_constant(B, 0.7) == pytest.approx(small)
    with pytest.raises(DomainError):
        sectorality_constant(diagonal_onb([1.0 + 1.0j]), 0.5)


def test_sampled_sectorality_dense_is_lower_estimate():
    B = dense_matrix([[1.0, 2.0], [0.0, 3.0]])
    est = sectorality_constant(B, math.pi / 4)
    rho = np.logspace(-3, 3, 4001)
    brute = max(
        np.linalg.norm(z * np.linalg.inv(z * np.eye(2) - B.matrix), 2)
        for s in (1, -1)
        for z in rho * np.exp(1j * s * math.pi / 4)
    )
    assert 1.0 <= est <= brute * (1 + 1e-9)
    assert est == pytest.approx(brute, rel=1e-2)


def test_semigroup_apply():
    out = semigroup_apply(diagonal_onb([1.0, 2.0]), 0.7)
    assert np.allclose(np.diag(out), np.exp(-0.7 * np.array([1.0, 2.0])), rtol=1e-8)
    tiny = semigroup_apply(diagonal_onb([1.0, 2.0]), 1e-9)
    assert np.allclose(np.diag(tiny), 1.0, atol=1e-8)
    lam = 2.0 ** np.arange(1, 17)
    A = diagonal_onb(lam)
    M = sectorality_constant(A, math.pi / 2 - 1e-9)
    for t in (1e-6, 1e-2, 1.0):
        assert np.max(np.abs(semigroup_apply(A, t))) <= bounds.semigroup_bound(M)
    with pytest.raises(DomainError):
        semigroup_apply(A, 0.0)


def test_quadrature_budget_is_enforced():
    # |s|^{-1/2} on [-1, 1]: the singular point at 0 defeats any small panel budget
    piece = Piece(z=lambda s: s + 0j, dz=lambda s, z: np.ones_like(z), edges=np.array([-1.0, 0.3, 1.0]))
    q = QuadConfig(rel_tol=1e-14, abs_tol=1e-300, max_panels=8)
    with pytest.raises(QuadratureError):
        integrate_pieces([piece], lambda z: np.abs(z)[:, None] ** -0.5, lambda v: float(np.max(np.abs(v))), q)


@given(st.lists(st.floats(min_value=0.05, max_value=500.0), min_size=1, max_size=6))
def test_diagonal_oracle_property(lam):
    lam = np.array(lam)
    f = resolvent_at_minus_one()
    out = riesz_dunford(diagonal_onb(lam), f)
    exact = 1.0 / (1.0 + lam)
    assert np.max(np.abs(np.diag(out.matrix) - exact)) <= max(out.error_estimate, 1e-13) * 10
