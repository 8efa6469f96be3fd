"""Tests for tolerant real/complex geometry."""

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from rank2lift.errors import (
    DimensionMismatchError,
    EmptySpanError,
    FieldMismatchError,
    NotOrthonormalError,
    NotSymmetricError,
)
from rank2lift.linalg import (
    Subspace,
    Tolerance,
    hermitian_inner,
    orthogonal_complement,
    orthonormalize,
    project,
    projection_matrix,
    same_subspace,
    subspace_distance,
    symmetric_extremes,
    tolerant_rank,
)

E1, E2, E3 = np.eye(3)


def _random_subspace(gen, dim, k):
    k = min(k, dim)
    return orthonormalize(gen.standard_normal((k, dim)) + 1j * gen.standard_normal((k, dim)))


class TestTolerance:
    def test_defaults(self):
        tol = Tolerance()
        assert (tol.rank_tol, tol.ortho_tol, tol.eq_tol) == (1e-8, 1e-9, 1e-9)

    @pytest.mark.parametrize("bad", [{"rank_tol": 0.0}, {"rank_tol": 1.5}, {"eq_tol": -1.0}])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(ValueError):
            Tolerance(**bad)


class TestOrthonormalize:
    def test_drops_dependent_vectors(self):
        S = orthonormalize([E1[:2], 2 * E1[:2], E2[:2]])
        assert S.dim == 2
        assert np.allclose(S.basis @ S.basis.T, np.eye(2))

    def test_two_real_vectors(self):
        S = orthonormalize([[1.0, 1.0], [1.0, 0.0]])
        assert S.dim == 2 and not S.is_complex
        assert np.allclose(S.basis @ S.basis.T, np.eye(2), atol=1e-12)
        assert np.allclose(S.basis[0], [2**-0.5, 2**-0.5])

    def test_all_zero_raises(self):
        with pytest.raises(EmptySpanError):
            orthonormalize([np.zeros(3), np.zeros(3)])

    def test_complex_basis_is_orthonormal(self, random_complex):
        S = orthonormalize(random_complex(2, 4))
        assert S.is_complex and S.dim == 2
        assert np.allclose(S.basis.conj() @ S.basis.T, np.eye(2), atol=1e-12)

    def test_mismatched_lengths(self):
        with pytest.raises(DimensionMismatchError):
            orthonormalize([np.ones(2), np.ones(3)])


class TestProjection:
    def test_project_onto_axis(self):
        S = orthonormalize([[1.0, 0.0]])
        assert np.allclose(project(S, np.array([3.0, 4.0])), [3.0, 0.0])

    def test_dimension_mismatch(self):
        S = orthonormalize([E1])
        with pytest.raises(DimensionMismatchError):
            project(S, np.ones(2))

    def test_field_mismatch(self):
        S = orthonormalize([E1])
        with pytest.raises(FieldMismatchError):
            project(S, np.ones(3, dtype=complex))

    def test_from_orthonormal_verifies(self):
        with pytest.raises(NotOrthonormalError):
            Subspace.from_orthonormal([[1.0, 0.0], [1.0, 1.0]])

    @seed(7)
    @settings(max_examples=30, deadline=None)
    @given(dim=st.integers(min_value=1, max_value=5), k=st.integers(min_value=1, max_value=5), draw=st.integers(0, 10**6))
    def test_projection_matrix_is_idempotent_and_hermitian(self, dim, k, draw):
        gen = np.random.default_rng(draw)
        S = orthonormalize(gen.standard_normal((min(k, dim), dim)) + 1j * gen.standard_normal((min(k, dim), dim)))
        P = projection_matrix(S)
        assert np.allclose(P @ P, P, atol=1e-10)
        assert np.allclose(P, P.conj().T, atol=1e-12)
        assert np.trace(P).real == pytest.approx(S.dim)

    @seed(7)
    @settings(max_examples=30, deadline=None)
    @given(dim=st.integers(min_value=1, max_value=5), k=st.integers(min_value=1, max_value=5), draw=st.integers(0, 10**6))
    def test_pythagoras(self, dim, k, draw):
        gen = np.random.default_rng(draw)
        S = _random_subspace(gen, dim, k)
        x = gen.standard_normal(dim) + 1j * gen.standard_normal(dim)
        px = project(S, x)
        assert np.linalg.norm(x) ** 2 == pytest.approx(np.linalg.norm(px) ** 2 + np.linalg.norm(x - px) ** 2, rel=1e-10)

    @seed(8)
    @settings(max_examples=30, deadline=None)
    @given(dim=st.integers(min_value=1, max_value=5), k=st.integers(min_value=1, max_value=5), draw=st.integers(0, 10**6))
    def test_project_is_linear(self, dim, k, draw):
        gen = np.random.default_rng(draw)
        S = _random_subspace(gen, dim, k)
        x, y = gen.standard_normal((2, dim)) + 1j * gen.standard_normal((2, dim))
        a, b = complex(*gen.standard_normal(2)), complex(*gen.standard_normal(2))
        assert np.allclose(project(S, a * x + b * y), a * project(S, x) + b * project(S, y), atol=1e-10)


class TestRankAndSpectrum:
    def test_tolerant_rank(self):
        assert tolerant_rank([[1.0, 0.0], [0.0, 1e-12]]) == 1
        assert tolerant_rank([[0.0, 0.0]]) == 0
        assert tolerant_rank(np.eye(3)) == 3

    @seed(9)
    @settings(max_examples=30, deadline=None)
    @given(
        m=st.integers(min_value=1, max_value=6),
        n=st.integers(min_value=1, max_value=5),
        r=st.integers(min_value=1, max_value=5),
        draw=st.integers(0, 10**6),
    )
    def test_rank_ignores_order_and_scale(self, m, n, r, draw):
        gen = np.random.default_rng(draw)
        r = min(r, m, n)
        A = gen.standard_normal((m, r)) @ gen.standard_normal((r, n))
        scaled = (A * gen.uniform(0.1, 10.0, size=m)[:, None])[gen.permutation(m)]
        assert tolerant_rank(A) == r
        assert tolerant_rank(scaled) == r

    def test_extremes_bracket_rayleigh_quotients(self, random_complex):
        B = random_complex(4, 4)
        M = B + B.conj().T
        lo, hi = symmetric_extremes(M)
        X = random_complex(100, 4)
        X /= np.linalg.norm(X, axis=1, keepdims=True)
        quotients = np.einsum("ij,jk,ik->i", X.conj(), M, X).real
        assert np.all(quotients >= lo - 1e-10)
        assert np.all(quotients <= hi + 1e-10)

    def test_symmetric_extremes(self):
        assert symmetric_extremes(np.diag([3.0, 1.0])) == pytest.approx((1.0, 3.0))

    def test_rejects_non_symmetric(self):
        with pytest.raises(NotSymmetricError):
            symmetric_extremes(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_hermitian_extremes(self):
        M = np.array([[2.0, 1j], [-1j, 2.0]])
        assert symmetric_extremes(M) == pytest.approx((1.0, 3.0))


class TestSubspaceRelations:
    def test_complement_of_axis(self):
        C = orthogonal_complement(orthonormalize([E1]))
        assert C.dim == 2
        assert same_subspace(C, orthonormalize([E2, E3]))

    def test_complement_of_whole_space_is_trivial(self):
        C = orthogonal_complement(Subspace.whole_space(3))
        assert C.dim == 0
        assert orthogonal_complement(C).dim == 3

    def test_complement_is_an_involution(self, random_real):
        for k in [1, 2, 3] * 7:
            S = orthonormalize(random_real(k, 4))
            C = orthogonal_complement(S)
            assert S.dim + C.dim == 4
            assert subspace_distance(orthogonal_complement(C), S) < 1e-10

    def test_distance_zero_iff_equal(self):
        S = orthonormalize([E1, E2])
        T = orthonormalize([E1 + E2, E1 - E2])
        assert subspace_distance(S, T) < 1e-12
        assert subspace_distance(S, orthonormalize([E1, E3])) > 0.5
        assert not same_subspace(S, orthonormalize([E1]))


def test_hermitian_inner_conjugates_second_argument():
    x = np.array([1j, 0.0])
    y = np.array([1.0, 0.0], dtype=complex)
    assert hermitian_inner(x, y) == pytest.approx(1j)
    assert hermitian_inner(y, x) == pytest.approx(-1j)
