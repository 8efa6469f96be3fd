"""Mutually unbiased bases in prime dimension and their rank 2 transfer.

For an odd prime ``p`` the bases are the standard basis plus, for each
``k`` in GF(p), the vectors ``(omega^(k l^2 + j l) / sqrt(p))_l``. Every
construction is verified before it is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import galois
import numpy as np
import numpy.typing as npt

from ..errors import CertificationError, DimensionMismatchError, GuardExceededError, NotPrimeError, UnverifiedInputError
from ..linalg.geometry import DEFAULT_TOLERANCE, Tolerance
from ..linalg.realify import RankTwoProjection, rank2, trace_pairing
from ..utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class MubFamily:
    """Orthonormal bases of C^n, each stored as an (n, n) array of rows."""

    dim: int
    bases: tuple[npt.NDArray, ...]

    @property
    def count(self) -> int:
        return len(self.bases)


@dataclass(frozen=True)
class MubVerification:
    valid: bool
    max_deviation: float
    gram_deviation: float
    overlap_deviation: float


@dataclass(frozen=True, eq=False)
class MubTransfer:
    """Rank 2 projections of every basis vector, grouped by basis."""

    projections: tuple[tuple[RankTwoProjection, ...], ...]
    within_max: float
    cross_max_deviation: float
    cross_value: float

    @property
    def valid(self) -> bool:
        return self.within_max <= 1e-10 and self.cross_max_deviation <= 1e-10


def _root_of_unity(exponents: npt.NDArray, p: int) -> npt.NDArray:
    angles = 2 * np.pi * (np.asarray(exponents) % p) / p
    return np.cos(angles) + 1j * np.sin(angles)


def _qubit_bases() -> list[npt.NDArray]:
    s = 1 / math.sqrt(2)
    return [
        np.eye(2, dtype=np.complex128),
        np.array([[s, s], [s, -s]], dtype=np.complex128),
        np.array([[s, 1j * s], [s, -1j * s]], dtype=np.complex128),
    ]


def mub_construct(p: int, *, max_prime: int = 101, tol: Tolerance = DEFAULT_TOLERANCE) -> MubFamily:
    """``p + 1`` mutually unbiased bases of C^p."""
    if p > max_prime:
        raise GuardExceededError(f"p = {p} exceeds the limit of {max_prime}")
    if p < 2 or not galois.is_prime(p):
        raise NotPrimeError(f"{p} is not prime")

    if p == 2:
        bases = _qubit_bases()
    else:
        GF = galois.GF(p)
        x = GF.elements
        bases = [np.eye(p, dtype=np.complex128)]
        for k in range(p):
            rows = [_root_of_unity(np.array(GF(k) * x**2 + GF(j) * x, dtype=int), p) for j in range(p)]
            bases.append(np.vstack(rows) / math.sqrt(p))

    family = MubFamily(dim=p, bases=tuple(bases))
    check = verify_mub(family.bases, tol)
    if not check.valid:
        raise CertificationError(f"MUB construction for p = {p} failed verification ({check.max_deviation:.3e})")
    logger.debug(f"constructed {family.count} MUBs in C^{p}, max deviation {check.max_deviation:.2e}")
    return family


def verify_mub(bases: Sequence[npt.ArrayLike], tol: Tolerance = DEFAULT_TOLERANCE) -> MubVerification:
    """Gram matrices equal I and every cross overlap ``|<e_i, f_j>|^2`` equals ``1/n``."""
    arrays = [np.asarray(B, dtype=np.complex128) for B in bases]
    if not arrays:
        raise DimensionMismatchError("no bases given")
    n = arrays[0].shape[1] if arrays[0].ndim == 2 else 0
    if any(B.shape != (n, n) for B in arrays) or n == 0:
        raise DimensionMismatchError(f"bases must all be square of the same size, got {[B.shape for B in arrays]}")

    gram = max(float(np.max(np.abs(B.conj() @ B.T - np.eye(n)))) for B in arrays)
    overlap = 0.0
    for B, C in combinations(arrays, 2):
        overlap = max(overlap, float(np.max(np.abs(np.abs(B.conj() @ C.T) ** 2 - 1.0 / n))))
    worst = max(gram, overlap)
    return MubVerification(
        valid=worst <= tol.ortho_tol,
        max_deviation=worst,
        gram_deviation=gram,
        overlap_deviation=overlap,
    )


def transfer_mub(family: MubFamily, tol: Tolerance = DEFAULT_TOLERANCE) -> MubTransfer:
    """Rank 2 projections of a verified MUB family.

    Projections from one basis have trace pairing 0, those from different
    bases ``2/n``.
    """
    check = verify_mub(family.bases, tol)
    if not check.valid:
        raise UnverifiedInputError(f"bases are not mutually unbiased (deviation {check.max_deviation:.3e})")

    projections = tuple(tuple(rank2(v, tol) for v in B) for B in family.bases)
    cross_value = 2.0 / family.dim
    within, cross = 0.0, 0.0
    for a, group in enumerate(projections):
        for P, Q in combinations(group, 2):
            within = max(within, abs(trace_pairing(P, Q)))
        for other in projections[a + 1 :]:
            for P in group:
                for Q in other:
                    cross = max(cross, abs(trace_pairing(P, Q) - cross_value))
    return MubTransfer(projections=projections, within_max=within, cross_max_deviation=cross, cross_value=cross_value)
