"""Phase retrieval certification.

Real families are checked against the span criterion ``span{P_i x} = R^n``
for every ``x != 0``; complex vector and subspace families are lifted to
R^{2n}, where phase retrieval holds iff ``span{P_j x'}`` is always the
hyperplane orthogonal to ``x''``. Failures are certified by an explicit
witness pair; passes found by search are probabilistic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Sequence

import numpy as np
import numpy.typing as npt
from scipy.linalg import null_space

from ..errors import (
    CertificationError,
    DimensionMismatchError,
    FieldMismatchError,
    GuardExceededError,
    ZeroVectorError,
)
from ..linalg.geometry import (
    DEFAULT_TOLERANCE,
    ComplexVector,
    Subspace,
    Tolerance,
    Vector,
    VectorLike,
    random_unit_vectors,
    stack_vectors,
    tolerant_rank,
)
from ..linalg.realify import lift, lift_subspace, rank2, scalar_between, unlift
from ..models import CheckReport, DistinguishResult, FullSparkResult, SupportStats, Verdict
from ..utils.logger import get_logger
from .family import ProjectionFamily
from .search import SearchBudget, SearchOutcome, SphereSearch, substream

logger = get_logger(__name__)


def distinguishes(
    F: ProjectionFamily,
    x: VectorLike,
    y: VectorLike,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> DistinguishResult:
    """Which measurements ``||P_j .||`` separate ``x`` from ``y``.

    The norm test is cross-checked against ``Re<x - y, P_j(x + y)>``, which
    equals ``||P_j x||^2 - ||P_j y||^2``.
    """
    x, y = np.asarray(x), np.asarray(y)
    if x.shape != y.shape:
        raise DimensionMismatchError(f"cannot compare vectors of shapes {x.shape} and {y.shape}")
    px, py = F.images(x), F.images(y)
    nx, ny = np.linalg.norm(px, axis=1), np.linalg.norm(py, axis=1)
    diff = nx - ny
    by_norm = np.abs(diff) > tol.eq_tol

    cross = np.real(np.sum((px + py).conj() * (x - y), axis=1))
    by_inner = np.abs(cross) > tol.eq_tol * (nx + ny)

    agree = bool(np.array_equal(by_norm, by_inner))
    if not agree:
        logger.warning(f"norm and inner-product criteria disagree on {int(np.sum(by_norm != by_inner))} index(es)")
    hits = np.flatnonzero(by_norm)
    return DistinguishResult(
        separating=[bool(b) for b in by_norm],
        first_separating=int(hits[0]) if hits.size else None,
        criteria_agree=agree,
        norm_differences=diff,
    )


def _padded_singular_values(images: npt.NDArray, dim: int) -> npt.NDArray:
    s = np.linalg.svd(images, compute_uv=False)
    out = np.zeros(dim)
    out[: min(s.size, dim)] = s[:dim]
    return out


def _singular_ratio(images: npt.NDArray, dim: int, index: int) -> float:
    s = _padded_singular_values(images, dim)
    if s[0] == 0.0:
        return 0.0
    return float(s[index] / s[0])


def _span_deficiency(images: npt.NDArray, dim: int, tol: Tolerance) -> tuple[int, npt.NDArray]:
    """Tolerant rank of the rows and an orthonormal basis (rows) of their orthogonal complement.

    Complement rows are ordered by singular value, largest first.
    """
    # y is orthogonal to every row a_i  <=>  conj(A) y = 0
    _, s, vh = np.linalg.svd(images.conj(), full_matrices=True)
    if s.size == 0 or s[0] == 0.0:
        rank = 0
    else:
        rank = int(np.count_nonzero(s > tol.rank_tol * s[0]))
    return rank, vh[rank:].conj()


def _fix_phase(y: Vector) -> Vector:
    """Scale so that the largest-magnitude entry is real and positive."""
    k = int(np.argmax(np.abs(y)))
    return y * (abs(y[k]) / y[k])


def _unimodular_related(w: Vector, v: Vector, tol: Tolerance) -> bool:
    nw, nv = float(np.linalg.norm(w)), float(np.linalg.norm(v))
    if abs(nw - nv) > tol.eq_tol:
        return False
    if nw <= tol.eq_tol:
        return True
    return abs(abs(np.vdot(v, w)) - nw * nv) <= tol.eq_tol * max(1.0, nw * nv)


def indistinguishable_pair(
    F: ProjectionFamily,
    x: VectorLike,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> Optional[tuple[Vector, Vector]]:
    """Pair ``((x + y)/2, (x - y)/2)`` for a unit ``y`` orthogonal to every ``P_i x``.

    Returns ``None`` when ``span{P_i x}`` is the whole space or the pair
    fails re-verification.
    """
    x = np.asarray(x)
    if F.is_complex:
        x = x.astype(np.complex128)
    if float(np.linalg.norm(x)) <= tol.eq_tol:
        raise ZeroVectorError("indistinguishable_pair requires a nonzero x")

    _, kernel = _span_deficiency(F.images(x), F.ambient_dim, tol)
    if kernel.shape[0] == 0:
        return None

    y = _fix_phase(kernel[0] / np.linalg.norm(kernel[0]))
    w, v = (x + y) / 2, (x - y) / 2
    if not distinguishes(F, w, v, tol).indistinguishable:
        logger.debug("candidate pair separated on re-verification")
        return None
    if _unimodular_related(w, v, tol):
        return None
    return w, v


def _failure_report(check: str, outcome: SearchOutcome, budget: SearchBudget, **fields) -> CheckReport:
    return CheckReport(
        check=check,
        verdict=Verdict.CERTIFIED_FAIL,
        samples_used=outcome.samples_used,
        restarts_used=outcome.restarts_used,
        seed=budget.seed,
        **fields,
    )


def _pass_report(check: str, outcome: SearchOutcome, budget: SearchBudget, residual: float) -> CheckReport:
    return CheckReport(
        check=check,
        verdict=Verdict.PASS_PROBABILISTIC,
        samples_used=outcome.samples_used,
        restarts_used=outcome.restarts_used,
        residual=residual,
        seed=budget.seed,
        details={"budget": budget.to_dict(), "best_point": outcome.best_point},
        notes=[
            f"no deficient direction in {outcome.samples_used} samples and "
            f"{outcome.restarts_used} local searches"
        ],
    )


def edidin_check(
    F: ProjectionFamily,
    *,
    tol: Tolerance = DEFAULT_TOLERANCE,
    budget: SearchBudget = SearchBudget(),
) -> CheckReport:
    """Search for ``x`` with ``dim span{P_i x} < n`` in a real family."""
    if F.is_complex:
        raise FieldMismatchError("edidin_check needs a real family; use complex_pr_check for complex input")
    n = F.ambient_dim
    logger.info(f"edidin_check: {len(F)} projections in R^{n}")

    def objective(x: npt.NDArray) -> float:
        return _singular_ratio(F.images(x), n, n - 1) ** 2

    def certify(x: npt.NDArray):
        pair = indistinguishable_pair(F, x, tol)
        return None if pair is None else (x, pair)

    outcome = SphereSearch(budget).run(objective, n, certify, tol.rank_tol**2)
    if outcome.certificate is None:
        return _pass_report("edidin", outcome, budget, math.sqrt(outcome.best_value))

    x, (w, v) = outcome.certificate
    rank, _ = _span_deficiency(F.images(x), n, tol)
    logger.info(f"edidin_check: deficient span of dimension {rank} certified")
    return _failure_report(
        "edidin",
        outcome,
        budget,
        witness_x=w,
        witness_y=v,
        deficient_span_dim=rank,
        residual=math.sqrt(outcome.best_value),
        details={"x": x, "y": w - v, "budget": budget.to_dict()},
    )


@dataclass
class _ComplexWitness:
    x_prime: npt.NDArray
    y: npt.NDArray
    span_dim: int
    w: ComplexVector
    v: ComplexVector
    scalar: Optional[complex]


def _complex_witness(
    lifted: ProjectionFamily,
    measure: Callable[[ComplexVector], npt.NDArray],
    x_prime: npt.NDArray,
    tol: Tolerance,
) -> Optional[_ComplexWitness]:
    dim = lifted.ambient_dim
    rank, kernel = _span_deficiency(lifted.images(x_prime), dim, tol)
    if kernel.shape[0] < 2:
        return None

    x_dprime = lift(unlift(x_prime)).v_dprime
    # directions of the kernel orthogonal to x''
    reduced = null_space((kernel @ x_dprime)[None, :])
    for column in reduced.T:
        y = column @ kernel
        y = _fix_phase(y / np.linalg.norm(y))
        w, v = unlift((x_prime + y) / 2), unlift((x_prime - y) / 2)
        if np.linalg.norm(w) <= tol.eq_tol or np.linalg.norm(v) <= tol.eq_tol:
            continue
        if float(np.max(np.abs(measure(w) - measure(v)))) > tol.eq_tol:
            continue
        c = scalar_between(w, v, tol)
        if c is not None and abs(abs(c) - 1.0) <= tol.eq_tol:
            continue
        return _ComplexWitness(x_prime=x_prime, y=y, span_dim=rank, w=w, v=v, scalar=c)
    return None


def _hyperplane_check(
    check: str,
    lifted: ProjectionFamily,
    measure: Callable[[ComplexVector], npt.NDArray],
    tol: Tolerance,
    budget: SearchBudget,
    spot_checks: int,
) -> CheckReport:
    dim = lifted.ambient_dim
    logger.info(f"{check}: {len(lifted)} lifted projections in R^{dim}")

    def objective(x: npt.NDArray) -> float:
        return _singular_ratio(lifted.images(x), dim, dim - 2) ** 2

    def certify(x: npt.NDArray) -> Optional[_ComplexWitness]:
        return _complex_witness(lifted, measure, x, tol)

    outcome = SphereSearch(budget).run(objective, dim, certify, tol.rank_tol**2)
    witness = outcome.certificate

    # x'' is orthogonal to every P_j x'; away from failures it spans the whole complement
    points = random_unit_vectors(substream(budget.seed, "hyperplane"), spot_checks, dim)
    ortho_residual, alignment_residual, min_rank = 0.0, 0.0, dim
    for x in points:
        images = lifted.images(x)
        x_dprime = lift(unlift(x)).v_dprime
        ortho_residual = max(ortho_residual, float(np.max(np.abs(images @ x_dprime))))
        rank, kernel = _span_deficiency(images, dim, tol)
        min_rank = min(min_rank, rank)
        if rank == dim - 1:
            alignment_residual = max(alignment_residual, 1.0 - abs(float(kernel[0] @ x_dprime)))
        elif rank < dim - 1 and witness is None:
            witness = certify(x)
            if witness is None:
                logger.warning(f"{check}: deficient spot-check sample could not be certified")

    details = {
        "budget": budget.to_dict(),
        "hyperplane_samples": spot_checks,
        "max_orthogonality_residual": ortho_residual,
        "null_alignment_residual": alignment_residual,
        "min_hyperplane_rank": min_rank,
    }
    if witness is None:
        if min_rank < dim - 1:
            raise CertificationError(
                f"{check}: a sampled span has dimension {min_rank} < {dim - 1} but no witness pair verified"
            )
        report = _pass_report(check, outcome, budget, math.sqrt(outcome.best_value))
        report.details.update(details)
        return report

    details.update({"x_prime": witness.x_prime, "y": witness.y, "scalar": witness.scalar})
    logger.info(f"{check}: span of dimension {witness.span_dim} < {dim - 1} certified")
    return _failure_report(
        check,
        outcome,
        budget,
        witness_x=witness.w,
        witness_y=witness.v,
        deficient_span_dim=witness.span_dim,
        residual=math.sqrt(outcome.best_value),
        details=details,
    )


def _nonzero_complex_family(vectors: Sequence[VectorLike] | npt.NDArray, tol: Tolerance) -> npt.NDArray:
    V = stack_vectors(vectors).astype(np.complex128)
    zero = np.flatnonzero(np.linalg.norm(V, axis=1) <= tol.eq_tol)
    if zero.size:
        raise ZeroVectorError(f"vector {int(zero[0])} of the family is zero")
    return V


def complex_pr_check(
    vectors: Sequence[VectorLike] | npt.NDArray,
    *,
    tol: Tolerance = DEFAULT_TOLERANCE,
    budget: SearchBudget = SearchBudget(),
    spot_checks: int = 200,
) -> CheckReport:
    """Phase retrieval in C^n via the hyperplane criterion on the lifted rank 2 projections."""
    V = _nonzero_complex_family(vectors, tol)
    lifted = ProjectionFamily(tuple(rank2(v, tol).subspace for v in V))
    return _hyperplane_check(
        "complex_pr",
        lifted,
        lambda z: np.abs(V.conj() @ z),
        tol,
        budget,
        spot_checks,
    )


def complex_projection_pr_check(
    subspaces: Sequence[Subspace],
    *,
    tol: Tolerance = DEFAULT_TOLERANCE,
    budget: SearchBudget = SearchBudget(),
    spot_checks: int = 200,
) -> CheckReport:
    """Phase retrieval by projections onto complex subspaces ``W_i``."""
    members = list(subspaces)
    for i, W in enumerate(members):
        if not W.is_complex:
            raise FieldMismatchError(f"subspace {i} is not complex")
        if W.dim == 0:
            raise ZeroVectorError(f"subspace {i} is the zero subspace")
    lifted = ProjectionFamily(tuple(lift_subspace(W, tol).real_lift for W in members))
    bases = [W.basis for W in members]
    return _hyperplane_check(
        "complex_projection_pr",
        lifted,
        lambda z: np.array([np.linalg.norm(B.conj() @ z) for B in bases]),
        tol,
        budget,
        spot_checks,
    )


def nonvanishing_support_stats(
    vectors: Sequence[VectorLike] | npt.NDArray,
    x: VectorLike,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> SupportStats:
    """``|I|`` and ``dim span{v_i : i in I}`` for ``I = {i : <x, v_i> != 0}``."""
    V = stack_vectors(vectors).astype(np.complex128)
    x = np.asarray(x, dtype=np.complex128)
    if x.shape != (V.shape[1],):
        raise DimensionMismatchError(f"x has shape {x.shape}, family vectors have length {V.shape[1]}")
    x_norm = float(np.linalg.norm(x))
    if x_norm <= tol.eq_tol:
        raise ZeroVectorError("nonvanishing_support_stats requires a nonzero x")

    inner = V.conj() @ x
    support = np.abs(inner) > tol.eq_tol * x_norm * np.maximum(np.linalg.norm(V, axis=1), 1.0)
    indices = tuple(int(i) for i in np.flatnonzero(support))
    span_dim = tolerant_rank(V[list(indices)], tol) if indices else 0
    return SupportStats(support_size=len(indices), support_span_dim=span_dim, indices=indices)


def _family_dim(V: npt.NDArray, n: Optional[int]) -> int:
    if n is not None and n != V.shape[1]:
        raise DimensionMismatchError(f"vectors have length {V.shape[1]}, expected {n}")
    return V.shape[1]


def _spans(V: npt.NDArray, indices: Sequence[int], n: int, tol: Tolerance) -> bool:
    return len(indices) >= n and tolerant_rank(V[list(indices)], tol) == n


def complement_property(
    vectors: Sequence[VectorLike] | npt.NDArray,
    n: Optional[int] = None,
    *,
    tol: Tolerance = DEFAULT_TOLERANCE,
    max_vectors: int = 24,
) -> CheckReport:
    """Exhaustive check that every bipartition ``I, I^c`` has a spanning side."""
    V = stack_vectors(vectors)
    n = _family_dim(V, n)
    m = V.shape[0]
    if m > max_vectors:
        raise GuardExceededError(f"complement property over {m} vectors exceeds the limit of {max_vectors}")

    # I and I^c give the same bipartition: fix the last vector in I^c
    checked = 0
    for mask in range(2 ** (m - 1)):
        checked += 1
        inside = [i for i in range(m - 1) if mask >> i & 1]
        outside = [i for i in range(m) if not (i < m - 1 and mask >> i & 1)]
        if _spans(V, inside, n, tol) or _spans(V, outside, n, tol):
            continue
        logger.info(f"complement property fails at I = {inside}")
        return CheckReport(
            check="complement_property",
            verdict=Verdict.CERTIFIED_FAIL,
            violating_subset=tuple(inside),
            details={"bipartitions_checked": checked},
        )
    return CheckReport(
        check="complement_property",
        verdict=Verdict.PASS_EXHAUSTIVE,
        details={"bipartitions_checked": checked},
    )


def full_spark(
    vectors: Sequence[VectorLike] | npt.NDArray,
    n: Optional[int] = None,
    *,
    tol: Tolerance = DEFAULT_TOLERANCE,
    max_subsets: int = 1_000_000,
) -> FullSparkResult:
    """Whether every n-subset spans; reports the first defective subset in lexicographic order."""
    V = stack_vectors(vectors)
    n = _family_dim(V, n)
    m = V.shape[0]
    if m < n:
        return FullSparkResult(full_spark=False, defective_subset=tuple(range(m)))
    total = math.comb(m, n)
    if total > max_subsets:
        raise GuardExceededError(f"{total} subsets of size {n} exceed the limit of {max_subsets}")

    for checked, subset in enumerate(combinations(range(m), n), start=1):
        if tolerant_rank(V[list(subset)], tol) < n:
            return FullSparkResult(full_spark=False, defective_subset=subset, subsets_checked=checked)
    return FullSparkResult(full_spark=True, subsets_checked=total)


def balanced_split_check(
    vectors: Sequence[VectorLike] | npt.NDArray,
    n: Optional[int] = None,
    *,
    tol: Tolerance = DEFAULT_TOLERANCE,
    max_subsets: int = 1_000_000,
) -> CheckReport:
    """Every ``(2n-2)``-subset of a ``4n-4`` family and its complement span the space."""
    V = stack_vectors(vectors)
    n = _family_dim(V, n)
    m = V.shape[0]
    k = 2 * n - 2
    if k < 1 or m < k:
        raise DimensionMismatchError(f"balanced splits need n >= 2 and at least {max(k, 2)} vectors")
    total = math.comb(m, k)
    if total > max_subsets:
        raise GuardExceededError(f"{total} subsets of size {k} exceed the limit of {max_subsets}")

    notes = [] if m == 4 * n - 4 else [f"family has {m} vectors; splits are taken at size {k}"]
    for checked, subset in enumerate(combinations(range(m), k), start=1):
        rest = [i for i in range(m) if i not in subset]
        if _spans(V, subset, n, tol) and _spans(V, rest, n, tol):
            continue
        return CheckReport(
            check="balanced_split",
            verdict=Verdict.CERTIFIED_FAIL,
            violating_subset=subset,
            details={"subsets_checked": checked},
            notes=notes,
        )
    return CheckReport(
        check="balanced_split",
        verdict=Verdict.PASS_EXHAUSTIVE,
        details={"subsets_checked": total},
        notes=notes,
    )
