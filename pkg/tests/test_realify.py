"""Tests for the complex-to-real lift and rank 2 projections."""

import math

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from rank2lift.errors import DimensionMismatchError, FieldMismatchError, NotOrthonormalError, ZeroVectorError
from rank2lift.linalg import (
    Subspace,
    circle_decomposition,
    hermitian_pairing_via_lift,
    lift,
    lift_subspace,
    lifted_measurements,
    orthonormalize,
    project,
    rank2,
    rotate_lift,
    same_subspace,
    scalar_between,
    subspace_distance,
    tolerant_rank,
    trace_pairing,
    unimodular_orbit,
    unlift,
)


def _unit(v):
    return v / np.linalg.norm(v)


class TestLift:
    def test_interleaved_layout(self):
        pair = lift([1 + 2j, 3])
        assert np.array_equal(pair.v_prime, [1.0, 2.0, 3.0, 0.0])
        assert np.array_equal(pair.v_dprime, [-2.0, 1.0, 0.0, 3.0])

    def test_rank2_basis(self):
        P = rank2([1 + 2j, 3])
        expected = np.array([[1, 2, 3, 0], [-2, 1, 0, 3]]) / math.sqrt(14)
        assert np.allclose(P.subspace.basis, expected)
        assert P.ambient_dim == 4

    def test_unlift_inverts_lift(self, random_complex):
        v = random_complex(5)
        assert np.allclose(unlift(lift(v).v_prime), v)

    def test_dprime_is_lift_of_iv(self, random_complex):
        v = random_complex(3)
        assert np.allclose(lift(v).v_dprime, lift(1j * v).v_prime)

    def test_unlift_rejects_odd_dimension(self):
        with pytest.raises(DimensionMismatchError):
            unlift(np.ones(3))

    def test_unlift_rejects_complex(self):
        with pytest.raises(FieldMismatchError):
            unlift(np.ones(4, dtype=complex))

    def test_rank2_rejects_zero(self):
        with pytest.raises(ZeroVectorError):
            rank2(np.zeros(2, dtype=complex))


class TestLiftIdentities:
    def test_isometry_pairing_and_measurement(self, rng):
        for trial in range(500):
            n = 2 + trial % 7
            v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            w = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            lv, lw = lift(v), lift(w)

            assert abs(np.linalg.norm(lv.v_prime) - np.linalg.norm(v)) < 1e-10
            assert abs(hermitian_pairing_via_lift(w, v) - np.vdot(v, w)) < 1e-10
            measured = np.linalg.norm(v) * np.linalg.norm(rank2(v).apply(lw.v_prime))
            assert abs(abs(np.vdot(w, v)) - measured) < 1e-10

    def test_trace_bridge(self, rng):
        for _ in range(500):
            n = int(rng.integers(2, 9))
            v = _unit(rng.standard_normal(n) + 1j * rng.standard_normal(n))
            w = _unit(rng.standard_normal(n) + 1j * rng.standard_normal(n))
            assert abs(trace_pairing(rank2(v), rank2(w)) - 2 * abs(np.vdot(v, w)) ** 2) < 1e-10

    def test_plane_is_invariant_under_complex_scaling(self, rng):
        for _ in range(200):
            n = int(rng.integers(1, 7))
            v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            c = complex(rng.standard_normal(), rng.standard_normal())
            assert subspace_distance(rank2(v).subspace, rank2(c * v).subspace) < 1e-9

    def test_rotation_is_lift_of_unimodular_multiple(self, random_complex):
        w = random_complex(3)
        theta = 0.7
        assert np.allclose(rotate_lift(w, theta), lift(np.exp(1j * theta) * w).v_prime)

    @seed(11)
    @settings(max_examples=50, deadline=None)
    @given(n=st.integers(min_value=1, max_value=6), draw=st.integers(0, 10**6))
    def test_projection_orthogonal_to_companion(self, n, draw):
        gen = np.random.default_rng(draw)
        v = gen.standard_normal(n) + 1j * gen.standard_normal(n)
        w = gen.standard_normal(n) + 1j * gen.standard_normal(n)
        image = rank2(v).apply(lift(w).v_prime)
        assert abs(float(image @ lift(w).v_dprime)) < 1e-10 * max(1.0, np.linalg.norm(w) ** 2)


class TestLiftStructure:
    @seed(15)
    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(min_value=1, max_value=6), draw=st.integers(0, 10**6))
    def test_planes_coincide_or_span_four_dimensions(self, n, draw):
        gen = np.random.default_rng(draw)
        v, w = gen.standard_normal((2, n)) + 1j * gen.standard_normal((2, n))
        c = complex(*gen.standard_normal(2))
        lv, lw, lc = lift(v), lift(w), lift(c * v)
        independent = np.vstack([lv.v_prime, lv.v_dprime, lw.v_prime, lw.v_dprime])
        dependent = np.vstack([lv.v_prime, lv.v_dprime, lc.v_prime, lc.v_dprime])
        assert tolerant_rank(independent) == min(4, 2 * n)
        assert tolerant_rank(dependent) == 2

    @seed(16)
    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(min_value=1, max_value=6), k=st.integers(min_value=1, max_value=6), draw=st.integers(0, 10**6))
    def test_orthonormal_family_lifts_to_orthonormal_family(self, n, k, draw):
        gen = np.random.default_rng(draw)
        k = min(k, n)
        U = orthonormalize(gen.standard_normal((k, n)) + 1j * gen.standard_normal((k, n))).basis
        rows = []
        for u in U:
            pair = lift(u)
            rows.extend([pair.v_prime, pair.v_dprime])
        lifted = np.vstack(rows)
        assert lifted.shape == (2 * k, 2 * n)
        assert np.allclose(lifted @ lifted.T, np.eye(2 * k), atol=1e-10)

    @seed(17)
    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(min_value=1, max_value=6), draw=st.integers(0, 10**6))
    def test_companion_pairing_matches_primary_pairing(self, n, draw):
        gen = np.random.default_rng(draw)
        v, w = gen.standard_normal((2, n)) + 1j * gen.standard_normal((2, n))
        lv, lw = lift(v), lift(w)
        assert float(lw.v_dprime @ lv.v_dprime) == pytest.approx(float(lw.v_prime @ lv.v_prime), abs=1e-10)
        assert float(lw.v_prime @ lv.v_dprime) == pytest.approx(-float(lw.v_dprime @ lv.v_prime), abs=1e-10)


class TestScalarBetween:
    def test_recovers_scalar(self, random_complex):
        w = random_complex(4)
        c = 0.3 - 1.7j
        assert scalar_between(c * w, w) == pytest.approx(c)

    def test_unimodular_scalar(self, random_complex):
        w = random_complex(3)
        c = scalar_between(np.exp(0.4j) * w, w)
        assert abs(abs(c) - 1.0) < 1e-10

    def test_independent_vectors(self):
        assert scalar_between([1, 0], [0, 1]) is None
        assert scalar_between([1, 0], [1, 1j]) is None

    def test_zero_vector(self):
        with pytest.raises(ZeroVectorError):
            scalar_between([0, 0], [1, 0])


class TestLiftSubspace:
    def test_measurements_are_preserved(self, random_complex):
        W = orthonormalize(random_complex(2, 3))
        V = lift_subspace(W).real_lift
        assert V.dim == 4 and V.ambient_dim == 6
        for _ in range(10):
            x = random_complex(3)
            assert abs(np.linalg.norm(project(W, x)) - np.linalg.norm(project(V, lift(x).v_prime))) < 1e-10

    def test_independent_of_basis(self, random_complex):
        W = orthonormalize(random_complex(2, 3))
        U, _ = np.linalg.qr(random_complex(2, 2))
        W2 = Subspace(basis=U @ W.basis, ambient_dim=3)
        assert same_subspace(lift_subspace(W).real_lift, lift_subspace(W2).real_lift)

    def test_one_dimensional_matches_rank2(self, random_complex):
        v = random_complex(3)
        V = lift_subspace(orthonormalize([v])).real_lift
        assert subspace_distance(V, rank2(v).subspace) < 1e-12

    def test_rejects_real_subspace(self):
        with pytest.raises(FieldMismatchError):
            lift_subspace(Subspace.whole_space(2))

    def test_rejects_non_orthonormal(self):
        W = Subspace(basis=np.array([[2.0, 0.0]], dtype=complex), ambient_dim=2)
        with pytest.raises(NotOrthonormalError):
            lift_subspace(W)


class TestCircle:
    def test_circle_decomposition(self, random_complex):
        m = random_complex(3)
        v, w = circle_decomposition(m)
        assert np.allclose(w, 1j * v)
        assert np.allclose(lift(v).v_prime + lift(w).v_prime, lift(m).v_prime)

    def test_unimodular_orbit_lies_on_circle(self, random_complex):
        w = random_complex(2)
        P = rank2(w)
        for point in unimodular_orbit(w, 12):
            assert abs(np.linalg.norm(point) - np.linalg.norm(w)) < 1e-12
            assert np.allclose(P.apply(point), point)

    def test_lifted_measurements(self, random_complex):
        V = random_complex(5, 3)
        x = random_complex(3)
        assert np.allclose(lifted_measurements(V, x), np.abs(V.conj() @ x), atol=1e-10)
