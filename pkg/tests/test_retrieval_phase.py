"""Tests for phase retrieval certification."""

import numpy as np
import pytest

from rank2lift.errors import CertificationError, DimensionMismatchError, FieldMismatchError, GuardExceededError
from rank2lift.linalg import Subspace, orthonormalize, scalar_between
from rank2lift.models import Verdict
from rank2lift.retrieval import (
    ProjectionFamily,
    SearchBudget,
    balanced_split_check,
    complement_property,
    complex_pr_check,
    complex_projection_pr_check,
    distinguishes,
    edidin_check,
    full_spark,
    indistinguishable_pair,
    nonvanishing_support_stats,
    phase,
)

E1, E2, E3 = np.eye(3)
SEARCH = SearchBudget(samples=64, restarts=8, seed=0)


def _axes():
    return ProjectionFamily.from_vectors([[1.0, 0.0], [0.0, 1.0]])


def _three_lines():
    return ProjectionFamily.from_vectors([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])


def _assert_real_witness(F, w, v, tol):
    assert distinguishes(F, w, v, tol).indistinguishable
    assert np.allclose(F.norms(w), F.norms(v), atol=1e-9)
    assert np.linalg.norm(w - v) > 1e-6
    assert np.linalg.norm(w + v) > 1e-6


def _assert_complex_witness(V, w, v, tol):
    assert np.allclose(np.abs(V.conj() @ w), np.abs(V.conj() @ v), atol=1e-9)
    c = scalar_between(w, v, tol)
    assert c is None or abs(abs(c) - 1.0) > tol.eq_tol


class TestDistinguishes:
    def test_reflection_is_not_separated(self):
        result = distinguishes(_axes(), [1.0, 1.0], [1.0, -1.0])
        assert result.indistinguishable
        assert result.separating == [False, False]

    def test_first_separating_index(self):
        result = distinguishes(_axes(), [2.0, 0.0], [1.0, 0.0])
        assert result.first_separating == 0
        assert result.separating == [True, False]

    def test_criteria_agree_on_random_data(self, random_real):
        for _ in range(20):
            F = ProjectionFamily(tuple(orthonormalize(random_real(2, 4)) for _ in range(5)))
            result = distinguishes(F, random_real(4), random_real(4))
            assert result.criteria_agree

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            distinguishes(_axes(), [1.0, 0.0], [1.0, 0.0, 0.0])


class TestComplementProperty:
    def test_three_lines_in_plane(self):
        report = complement_property([E1[:2], E2[:2], E1[:2] + E2[:2]])
        assert report.verdict == Verdict.PASS_EXHAUSTIVE
        assert report.details["bipartitions_checked"] == 4

    def test_axes_fail(self):
        report = complement_property([E1[:2], E2[:2]])
        assert report.verdict == Verdict.CERTIFIED_FAIL
        assert report.violating_subset == (0,)

    def test_full_spark_family(self, random_real):
        assert complement_property(random_real(5, 3)).verdict == Verdict.PASS_EXHAUSTIVE

    def test_too_few_vectors(self, random_real):
        assert complement_property(random_real(4, 3)).verdict == Verdict.CERTIFIED_FAIL

    def test_guard(self, random_real):
        with pytest.raises(GuardExceededError):
            complement_property(random_real(25, 3))

    def test_dimension_argument_must_match(self, random_real):
        with pytest.raises(DimensionMismatchError):
            complement_property(random_real(4, 3), n=2)


class TestFullSpark:
    def test_three_lines(self):
        assert full_spark([E1[:2], E2[:2], E1[:2] + E2[:2]]).full_spark

    def test_repeated_vector(self):
        result = full_spark([E1[:2], E2[:2], E1[:2]])
        assert not result.full_spark
        assert result.defective_subset == (0, 2)

    def test_random_family(self, random_real):
        result = full_spark(random_real(6, 3))
        assert result.full_spark
        assert result.subsets_checked == 20

    def test_fewer_vectors_than_dimension(self):
        result = full_spark([E1[:2]])
        assert not result.full_spark
        assert result.defective_subset == (0,)

    def test_guard(self, random_real):
        with pytest.raises(GuardExceededError):
            full_spark(random_real(20, 4), max_subsets=100)


class TestIndistinguishablePair:
    def test_single_line(self):
        F = ProjectionFamily.from_vectors([[1.0, 0.0]])
        w, v = indistinguishable_pair(F, [1.0, 0.0])
        assert np.allclose(w, [0.5, 0.5])
        assert np.allclose(v, [0.5, -0.5])

    def test_spanning_family(self):
        assert indistinguishable_pair(_three_lines(), [0.3, 0.7]) is None

    def test_deficient_family_in_r4(self, random_real, tol):
        F = ProjectionFamily.from_vectors(random_real(3, 4))
        for _ in range(5):
            w, v = indistinguishable_pair(F, random_real(4))
            _assert_real_witness(F, w, v, tol)


class TestEdidin:
    def test_axes_fail_with_witness(self, tol):
        F = _axes()
        report = edidin_check(F, budget=SEARCH)
        assert report.verdict == Verdict.CERTIFIED_FAIL
        assert report.deficient_span_dim == 1
        _assert_real_witness(F, report.witness_x, report.witness_y, tol)

    def test_three_lines_pass(self, quick_budget):
        report = edidin_check(_three_lines(), budget=quick_budget)
        assert report.verdict == Verdict.PASS_PROBABILISTIC
        assert report.residual > 0.1
        assert report.witness_x is None

    def test_two_planes_in_r3_fail(self, random_real, tol, quick_budget):
        F = ProjectionFamily((orthonormalize(random_real(2, 3)), orthonormalize(random_real(2, 3))))
        report = edidin_check(F, budget=quick_budget)
        assert report.verdict == Verdict.CERTIFIED_FAIL
        assert report.samples_used == 1
        _assert_real_witness(F, report.witness_x, report.witness_y, tol)

    def test_rejects_complex_family(self):
        F = ProjectionFamily.from_vectors(np.eye(2, dtype=complex))
        with pytest.raises(FieldMismatchError):
            edidin_check(F)

    def test_same_seed_same_report(self):
        first = edidin_check(_three_lines(), budget=SearchBudget(16, 2, 5)).to_dict()
        second = edidin_check(_three_lines(), budget=SearchBudget(16, 2, 5)).to_dict()
        assert first == second

    @pytest.mark.slow
    def test_agrees_with_complement_property(self, rng, tol):
        for n in (2, 3):
            for m in range(n, 2 * n + 2):
                V = rng.standard_normal((m, n))
                expected = complement_property(V).verdict
                report = edidin_check(ProjectionFamily.from_vectors(V), budget=SEARCH)
                assert report.passed == expected.passed, (n, m)
                if not report.passed:
                    _assert_real_witness(ProjectionFamily.from_vectors(V), report.witness_x, report.witness_y, tol)


class TestComplexPr:
    def test_four_generic_vectors_in_c2_pass(self, random_complex):
        for _ in range(3):
            report = complex_pr_check(random_complex(4, 2), budget=SEARCH)
            assert report.verdict == Verdict.PASS_PROBABILISTIC
            assert report.details["min_hyperplane_rank"] == 3
            assert report.details["max_orthogonality_residual"] < 1e-10
            assert report.details["null_alignment_residual"] < 1e-6

    def test_three_vectors_in_c2_fail(self, random_complex, tol):
        for _ in range(3):
            V = random_complex(3, 2)
            report = complex_pr_check(V, budget=SEARCH)
            assert report.verdict == Verdict.CERTIFIED_FAIL
            assert report.details["max_orthogonality_residual"] < 1e-10
            _assert_complex_witness(V, report.witness_x, report.witness_y, tol)

    def test_rank_one_subspaces_match_vector_check(self, random_complex):
        for m in (3, 4):
            V = random_complex(m, 2)
            subspaces = [orthonormalize([v]) for v in V]
            by_vectors = complex_pr_check(V, budget=SEARCH)
            by_subspaces = complex_projection_pr_check(subspaces, budget=SEARCH)
            assert by_vectors.verdict == by_subspaces.verdict

    def test_whole_space_fails(self, tol, quick_budget):
        W = Subspace.whole_space(2, complex_field=True)
        report = complex_projection_pr_check([W], budget=quick_budget)
        assert report.verdict == Verdict.CERTIFIED_FAIL
        assert abs(np.linalg.norm(report.witness_x) - np.linalg.norm(report.witness_y)) < 1e-9
        assert report.details["scalar"] is None

    def test_uncertified_deficient_sample_is_not_a_pass(self, monkeypatch, random_complex, quick_budget):
        monkeypatch.setattr(phase, "_complex_witness", lambda *args: None)
        # two vectors in C^2 never span a hyperplane of R^4
        with pytest.raises(CertificationError, match="no witness pair verified"):
            complex_pr_check(random_complex(2, 2), budget=quick_budget, spot_checks=8)

    def test_rejects_real_subspace(self):
        with pytest.raises(FieldMismatchError):
            complex_projection_pr_check([Subspace.whole_space(2)])


class TestSupportStats:
    def test_orthonormal_basis(self):
        stats = nonvanishing_support_stats(np.eye(2, dtype=complex), [1, 0])
        assert (stats.support_size, stats.support_span_dim) == (1, 1)
        assert stats.indices == (0,)

    def test_orthogonal_x(self):
        stats = nonvanishing_support_stats([[1, 0], [2, 0]], [0, 1])
        assert (stats.support_size, stats.support_span_dim) == (0, 0)

    def test_phase_retrieving_family(self, random_complex):
        V = random_complex(4, 2)
        stats = nonvanishing_support_stats(V, random_complex(2))
        assert stats.support_size >= 3
        assert stats.support_span_dim == 2


class TestBalancedSplit:
    def test_generic_family_passes(self, random_real):
        report = balanced_split_check(random_real(4, 2))
        assert report.verdict == Verdict.PASS_EXHAUSTIVE
        assert report.details["subsets_checked"] == 6

    def test_repeated_vectors_fail(self):
        report = balanced_split_check([E1[:2], E1[:2], E2[:2], E2[:2]])
        assert report.verdict == Verdict.CERTIFIED_FAIL
        assert report.violating_subset == (0, 1)

    def test_requires_n_at_least_two(self):
        with pytest.raises(DimensionMismatchError):
            balanced_split_check([[1.0], [2.0]])
