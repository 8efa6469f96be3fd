"""Frame and fusion frame bounds, harmonic Parseval frames and their lifts to R^{2n}."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import numpy.typing as npt

from ..errors import CertificationError, DimensionMismatchError, FieldMismatchError, InvalidWeightError, ZeroVectorError
from ..linalg.geometry import (
    DEFAULT_TOLERANCE,
    Subspace,
    Tolerance,
    VectorLike,
    orthonormalize,
    projection_matrix,
    stack_vectors,
    symmetric_extremes,
)
from ..linalg.realify import lift_subspace, rank2
from ..utils.logger import get_logger
from ..utils.seeding import substream

logger = get_logger(__name__)


@dataclass(frozen=True)
class FrameFlags:
    is_frame: bool
    tight: bool
    parseval: bool
    equal_norm: bool = False
    unit_norm: bool = False

    def to_dict(self) -> dict:
        return {
            "is_frame": self.is_frame,
            "tight": self.tight,
            "parseval": self.parseval,
            "equal_norm": self.equal_norm,
            "unit_norm": self.unit_norm,
        }


def _bound_flags(lower: float, upper: float, tol: Tolerance) -> tuple[bool, bool, bool]:
    is_frame = upper > 0.0 and lower > tol.rank_tol * upper
    tight = is_frame and abs(upper - lower) <= tol.eq_tol * upper
    parseval = tight and abs(lower - 1.0) <= tol.eq_tol and abs(upper - 1.0) <= tol.eq_tol
    return is_frame, tight, parseval


def frame_operator(vectors: Sequence[VectorLike] | npt.NDArray) -> npt.NDArray:
    """``S = sum_i v_i v_i^*``."""
    V = stack_vectors(vectors)
    return V.T @ V.conj()


def frame_bounds(
    vectors: Sequence[VectorLike] | npt.NDArray,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> tuple[float, float]:
    """Optimal frame bounds: extreme eigenvalues of the frame operator."""
    lower, upper = symmetric_extremes(frame_operator(vectors), tol)
    return max(lower, 0.0), upper


@dataclass(frozen=True, eq=False)
class Frame:
    """A finite family of vectors together with its optimal bounds."""

    vectors: npt.NDArray
    lower: float
    upper: float
    flags: FrameFlags

    @classmethod
    def from_vectors(
        cls,
        vectors: Sequence[VectorLike] | npt.NDArray,
        tol: Tolerance = DEFAULT_TOLERANCE,
    ) -> Frame:
        V = stack_vectors(vectors)
        V.setflags(write=False)
        lower, upper = frame_bounds(V, tol)
        is_frame, tight, parseval = _bound_flags(lower, upper, tol)
        norms = np.linalg.norm(V, axis=1)
        flags = FrameFlags(
            is_frame=is_frame,
            tight=tight,
            parseval=parseval,
            equal_norm=bool(np.ptp(norms) <= tol.eq_tol),
            unit_norm=bool(np.all(np.abs(norms - 1.0) <= tol.eq_tol)),
        )
        if not is_frame:
            logger.debug(f"vectors do not span: lower bound {lower:.3e}")
        return cls(vectors=V, lower=lower, upper=upper, flags=flags)

    @property
    def bounds(self) -> tuple[float, float]:
        return self.lower, self.upper

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    @property
    def is_complex(self) -> bool:
        return bool(np.iscomplexobj(self.vectors))

    @property
    def norms(self) -> npt.NDArray:
        return np.linalg.norm(self.vectors, axis=1)

    def __len__(self) -> int:
        return int(self.vectors.shape[0])


def harmonic_parseval(m: int, n: int, tol: Tolerance = DEFAULT_TOLERANCE) -> Frame:
    """First ``n`` columns of the unitary m x m DFT matrix: an equal norm Parseval frame for C^n."""
    if n < 1 or m < n:
        raise DimensionMismatchError(f"harmonic frame needs m >= n >= 1, got m={m}, n={n}")
    exponents = np.outer(np.arange(m), np.arange(n)) % m
    angles = 2 * np.pi * exponents / m
    rows = (np.cos(angles) + 1j * np.sin(angles)) / math.sqrt(m)
    return Frame.from_vectors(rows, tol)


def _check_weights(weights: Optional[Sequence[float]], count: int) -> npt.NDArray:
    w = np.ones(count) if weights is None else np.asarray(weights, dtype=float)
    if w.shape != (count,):
        raise DimensionMismatchError(f"{w.size} weights for {count} subspaces")
    if np.any(w <= 0) or not np.all(np.isfinite(w)):
        raise InvalidWeightError("fusion weights must be finite and strictly positive")
    return w


def fusion_operator(subspaces: Sequence[Subspace], weights: Optional[Sequence[float]] = None) -> npt.NDArray:
    """``sum_i a_i^2 P_i``."""
    members = list(subspaces)
    if not members:
        raise DimensionMismatchError("empty subspace family")
    if len({S.ambient_dim for S in members}) != 1:
        raise DimensionMismatchError("subspaces live in different ambient spaces")
    w = _check_weights(weights, len(members))
    return sum(a**2 * projection_matrix(S) for a, S in zip(w, members))


def fusion_bounds(
    subspaces: Sequence[Subspace],
    weights: Optional[Sequence[float]] = None,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> tuple[float, float]:
    lower, upper = symmetric_extremes(fusion_operator(subspaces, weights), tol)
    return max(lower, 0.0), upper


@dataclass(frozen=True, eq=False)
class FusionFrame:
    """Weighted subspaces with the extreme eigenvalues of ``sum a_i^2 P_i``."""

    subspaces: tuple[Subspace, ...]
    weights: npt.NDArray
    lower: float
    upper: float
    flags: FrameFlags

    @classmethod
    def from_subspaces(
        cls,
        subspaces: Sequence[Subspace],
        weights: Optional[Sequence[float]] = None,
        tol: Tolerance = DEFAULT_TOLERANCE,
    ) -> FusionFrame:
        members = tuple(subspaces)
        w = _check_weights(weights, len(members))
        w.setflags(write=False)
        lower, upper = fusion_bounds(members, w, tol)
        is_frame, tight, parseval = _bound_flags(lower, upper, tol)
        return cls(
            subspaces=members,
            weights=w,
            lower=lower,
            upper=upper,
            flags=FrameFlags(is_frame=is_frame, tight=tight, parseval=parseval),
        )

    @property
    def bounds(self) -> tuple[float, float]:
        return self.lower, self.upper

    @property
    def ambient_dim(self) -> int:
        return self.subspaces[0].ambient_dim

    def __len__(self) -> int:
        return len(self.subspaces)


def lift_frame_to_fusion(frame: Frame, tol: Tolerance = DEFAULT_TOLERANCE) -> FusionFrame:
    """Planes ``S_{v_i}`` of R^{2n} weighted by ``||v_i||``; bounds match those of the frame."""
    V = frame.vectors.astype(np.complex128)
    norms = np.linalg.norm(V, axis=1)
    zero = np.flatnonzero(norms <= tol.eq_tol)
    if zero.size:
        raise ZeroVectorError(f"frame vector {int(zero[0])} is zero")
    return FusionFrame.from_subspaces([rank2(v, tol).subspace for v in V], norms, tol)


def lift_fusion_to_fusion(fusion: FusionFrame, tol: Tolerance = DEFAULT_TOLERANCE) -> FusionFrame:
    """Lift each complex ``W_i`` to its real ``V_i`` of twice the dimension, keeping weights."""
    if not all(W.is_complex for W in fusion.subspaces):
        raise FieldMismatchError("lift_fusion_to_fusion expects complex subspaces")
    lifted = [lift_subspace(W, tol).real_lift for W in fusion.subspaces]
    return FusionFrame.from_subspaces(lifted, fusion.weights, tol)


def tight_fusion_existence(m: int, n: int, tol: Tolerance = DEFAULT_TOLERANCE) -> FusionFrame:
    """Tight fusion frame of ``m`` planes in R^{2n} from the harmonic frame."""
    fusion = lift_frame_to_fusion(harmonic_parseval(m, n, tol), tol)
    if not fusion.flags.tight:
        raise CertificationError(f"lifted harmonic frame is not tight: bounds {fusion.bounds}")
    return fusion


def two_plane_gaps(
    trials: int,
    seed: int = 0,
    *,
    count: int = 2,
    ambient_dim: int = 3,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> list[tuple[float, float, float]]:
    """``(A, B, B - A)`` for random weighted families of ``count`` planes in R^ambient_dim.

    Only gathers evidence of non-tightness; nothing is decided.
    """
    rng = substream(seed, "two_plane")
    out = []
    for _ in range(trials):
        planes = [orthonormalize(rng.standard_normal((2, ambient_dim)), tol) for _ in range(count)]
        weights = rng.uniform(0.1, 2.0, size=count)
        lower, upper = fusion_bounds(planes, weights, tol)
        out.append((lower, upper, upper - lower))
    return out
