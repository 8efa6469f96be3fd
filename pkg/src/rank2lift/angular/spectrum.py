"""k-angular classification of unit vector and projection families."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence, Union

import numpy as np
import numpy.typing as npt

from ..errors import DimensionMismatchError, UnverifiedInputError
from ..linalg.geometry import DEFAULT_TOLERANCE, Subspace, Tolerance, VectorLike, stack_vectors
from ..linalg.realify import RankTwoProjection, trace_pairing
from ..retrieval.family import ProjectionFamily
from ..utils.logger import get_logger

logger = get_logger(__name__)

ProjectionLike = Union[RankTwoProjection, Subspace]


@dataclass(frozen=True)
class AngleSpectrum:
    """Distinct pairwise values ``alpha_1 > ... > alpha_k`` with multiplicities."""

    levels: tuple[float, ...]
    multiplicities: tuple[int, ...]
    cluster_width: float
    min_gap: Optional[float] = None
    warnings: tuple[str, ...] = field(default=())

    @property
    def k(self) -> int:
        return len(self.levels)

    @property
    def equiangular(self) -> bool:
        return self.k == 1

    @property
    def biangular(self) -> bool:
        return self.k == 2

    def to_dict(self) -> dict:
        return {
            "levels": list(self.levels),
            "multiplicities": list(self.multiplicities),
            "k": self.k,
            "cluster_width": self.cluster_width,
            "min_gap": self.min_gap,
            "warnings": list(self.warnings),
        }


def cluster_levels(values: Sequence[float] | npt.NDArray, cluster_width: float = 1e-6) -> AngleSpectrum:
    """Single-linkage clustering of ``values``: neighbours closer than ``cluster_width`` merge."""
    ordered = np.sort(np.asarray(values, dtype=float))
    clusters: list[list[float]] = []
    for value in ordered:
        if clusters and value - clusters[-1][-1] <= cluster_width:
            clusters[-1].append(float(value))
        else:
            clusters.append([float(value)])

    clusters.reverse()
    levels = tuple(max(0.0, float(np.mean(c))) for c in clusters)
    gaps = [a - b for a, b in zip(levels, levels[1:])]
    min_gap = min(gaps) if gaps else None

    warnings: list[str] = []
    if min_gap is not None and min_gap < 10 * cluster_width:
        warnings.append(f"levels are only {min_gap:.2e} apart; classification depends on cluster_width")
        logger.warning(warnings[-1])
    return AngleSpectrum(
        levels=levels,
        multiplicities=tuple(len(c) for c in clusters),
        cluster_width=cluster_width,
        min_gap=min_gap,
        warnings=tuple(warnings),
    )


def angle_spectrum_vectors(
    vectors: Sequence[VectorLike] | npt.NDArray,
    cluster_width: float = 1e-6,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> AngleSpectrum:
    """Clustered ``{|<phi_i, phi_j>| : i < j}`` of unit vectors."""
    V = stack_vectors(vectors)
    norms = np.linalg.norm(V, axis=1)
    bad = np.flatnonzero(np.abs(norms - 1.0) > tol.eq_tol)
    if bad.size:
        raise UnverifiedInputError(f"vector {int(bad[0])} is not unit norm (norm {norms[bad[0]]:.6g})")
    gram = np.abs(V.conj() @ V.T)
    rows, cols = np.triu_indices(V.shape[0], k=1)
    return cluster_levels(gram[rows, cols], cluster_width)


def _as_subspace(P: ProjectionLike) -> Subspace:
    return P.subspace if isinstance(P, RankTwoProjection) else P


def angle_spectrum_projections(
    family: ProjectionFamily | Sequence[ProjectionLike],
    cluster_width: float = 1e-6,
) -> AngleSpectrum:
    """Clustered Hilbert-Schmidt pairings ``{tr P_i P_j : i < j}``."""
    members = list(family.members) if isinstance(family, ProjectionFamily) else [_as_subspace(P) for P in family]
    if len({S.ambient_dim for S in members}) > 1:
        raise DimensionMismatchError("projections act on different ambient spaces")
    values = [trace_pairing(S, T) for S, T in combinations(members, 2)]
    return cluster_levels(values, cluster_width)
