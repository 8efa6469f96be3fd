"""Complex vectors in C^n as rank 2 projections in R^{2n}.

For ``v = (a_1 + i b_1, ..., a_n + i b_n)`` the lift is the interleaved pair

    v'  = (a_1, b_1, ..., a_n, b_n)
    v'' = (-b_1, a_1, ..., -b_n, a_n) = (iv)'

and ``S_v = span{v', v''}`` with rank 2 projection ``P_v``. The lift is an
isometry, ``<w, v> = <w', v'> + i <w', v''>`` and ``|<v, w>| = ||v|| ||P_v w'||``.
Only the interleaved layout is offered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import numpy.typing as npt

from ..errors import DimensionMismatchError, FieldMismatchError, NotOrthonormalError, ZeroVectorError
from .geometry import (
    DEFAULT_TOLERANCE,
    ComplexVector,
    RealVector,
    Subspace,
    Tolerance,
    VectorLike,
    as_vector,
    project,
    stack_vectors,
    tolerant_rank,
)


@dataclass(frozen=True, eq=False)
class LiftedVectorPair:
    """The real vectors ``v'`` and ``v''`` attached to a complex vector."""

    v_prime: RealVector
    v_dprime: RealVector
    source: ComplexVector


@dataclass(frozen=True, eq=False)
class RankTwoProjection:
    """Projection of R^{2n} onto ``S_v``; basis ``{v'/||v||, v''/||v||}``."""

    subspace: Subspace
    source: ComplexVector

    @property
    def ambient_dim(self) -> int:
        return self.subspace.ambient_dim

    def apply(self, x: RealVector) -> RealVector:
        return project(self.subspace, x)


@dataclass(frozen=True, eq=False)
class LiftedSubspace:
    """A complex subspace W and the induced real subspace V of twice its dimension."""

    complex_source: Subspace
    real_lift: Subspace


def _complex(v: VectorLike) -> ComplexVector:
    return as_vector(v, complex_field=True)


def lift(v: VectorLike) -> LiftedVectorPair:
    """Interleaved realification ``v -> (v', v'')``."""
    v = _complex(v)
    v_prime = np.empty(2 * v.shape[0], dtype=np.float64)
    v_prime[0::2] = v.real
    v_prime[1::2] = v.imag
    v_dprime = np.empty_like(v_prime)
    v_dprime[0::2] = -v.imag
    v_dprime[1::2] = v.real
    return LiftedVectorPair(v_prime=v_prime, v_dprime=v_dprime, source=v)


def unlift(z: VectorLike) -> ComplexVector:
    """Inverse of ``v -> v'`` on R^{2n}."""
    z = np.asarray(z)
    if np.iscomplexobj(z):
        raise FieldMismatchError("unlift expects a real vector")
    z = as_vector(z, complex_field=False)
    if z.shape[0] % 2:
        raise DimensionMismatchError(f"cannot unlift a vector of odd dimension {z.shape[0]}")
    return z[0::2] + 1j * z[1::2]


def lift_family(vectors: Sequence[VectorLike] | npt.NDArray) -> npt.NDArray:
    """Rows ``v_j'`` for every row ``v_j`` of a complex family."""
    mat = stack_vectors(vectors).astype(np.complex128)
    out = np.empty((mat.shape[0], 2 * mat.shape[1]), dtype=np.float64)
    out[:, 0::2] = mat.real
    out[:, 1::2] = mat.imag
    return out


def hermitian_pairing_via_lift(w: VectorLike, v: VectorLike) -> complex:
    """``<w, v>`` computed as ``<w', v'> + i <w', v''>``."""
    w_lift, v_lift = lift(w), lift(v)
    if w_lift.v_prime.shape != v_lift.v_prime.shape:
        raise DimensionMismatchError("vectors have different dimensions")
    return complex(
        float(np.dot(w_lift.v_prime, v_lift.v_prime)),
        float(np.dot(w_lift.v_prime, v_lift.v_dprime)),
    )


def rank2(v: VectorLike, tol: Tolerance = DEFAULT_TOLERANCE) -> RankTwoProjection:
    """Rank 2 projection onto ``S_v``.

    Raises:
        ZeroVectorError: ``v`` is zero within ``eq_tol``.
    """
    v = _complex(v)
    norm = float(np.linalg.norm(v))
    if norm <= tol.eq_tol:
        raise ZeroVectorError("rank2 requires a nonzero vector")
    pair = lift(v)
    basis = np.vstack([pair.v_prime, pair.v_dprime]) / norm
    return RankTwoProjection(subspace=Subspace(basis=basis, ambient_dim=basis.shape[1]), source=v)


def rotate_lift(w: VectorLike, theta: float) -> RealVector:
    """``((cos t + i sin t) w)' = cos t w' + sin t w''``."""
    pair = lift(w)
    return math.cos(theta) * pair.v_prime + math.sin(theta) * pair.v_dprime


def scalar_between(v: VectorLike, w: VectorLike, tol: Tolerance = DEFAULT_TOLERANCE) -> Optional[complex]:
    """Complex ``c`` with ``v = c w`` when ``S_v = S_w``, else ``None``."""
    v, w = _complex(v), _complex(w)
    if v.shape != w.shape:
        raise DimensionMismatchError("vectors have different dimensions")
    v_norm, w_norm = float(np.linalg.norm(v)), float(np.linalg.norm(w))
    if v_norm <= tol.eq_tol or w_norm <= tol.eq_tol:
        raise ZeroVectorError("scalar_between requires nonzero vectors")

    lv, lw = lift(v / v_norm), lift(w / w_norm)
    combined = np.vstack([lv.v_prime, lv.v_dprime, lw.v_prime, lw.v_dprime])
    if tolerant_rank(combined, tol) != 2:
        return None
    # v = c w  =>  <v, w> = c ||w||^2
    return complex(np.vdot(w, v)) / w_norm**2


def lift_subspace(W: Subspace, tol: Tolerance = DEFAULT_TOLERANCE) -> LiftedSubspace:
    """Induced 2d-dimensional subspace ``V = span{b_i', b_i''}`` of R^{2n}.

    ``V`` does not depend on the orthonormal basis chosen for ``W``, and
    ``||Q x|| = ||P x'||`` for the projections ``Q`` onto ``W`` and ``P`` onto ``V``.
    """
    if not W.is_complex:
        raise FieldMismatchError("lift_subspace expects a complex subspace")
    gram = W.basis.conj() @ W.basis.T
    deviation = float(np.max(np.abs(gram - np.eye(W.dim)))) if W.dim else 0.0
    if deviation > tol.ortho_tol:
        raise NotOrthonormalError(f"complex basis is not orthonormal (deviation {deviation:.3e})")

    rows = []
    for b in W.basis:
        pair = lift(b)
        rows.extend([pair.v_prime, pair.v_dprime])
    basis = np.vstack(rows) if rows else np.zeros((0, 2 * W.ambient_dim))
    return LiftedSubspace(complex_source=W, real_lift=Subspace(basis=basis, ambient_dim=2 * W.ambient_dim))


def trace_pairing(P: RankTwoProjection | Subspace, Q: RankTwoProjection | Subspace) -> float:
    """Hilbert-Schmidt pairing ``tr(PQ) = sum_ij |<p_i, q_j>|^2``."""
    S = P.subspace if isinstance(P, RankTwoProjection) else P
    T = Q.subspace if isinstance(Q, RankTwoProjection) else Q
    if S.ambient_dim != T.ambient_dim:
        raise DimensionMismatchError("projections act on different spaces")
    overlaps = S.basis.conj() @ T.basis.T
    return float(np.sum(np.abs(overlaps) ** 2))


def circle_decomposition(m: VectorLike) -> tuple[ComplexVector, ComplexVector]:
    """Split ``m`` as ``v + w`` with ``w = i v``, so ``v' + w' = m'``."""
    m = _complex(m)
    if not np.any(m):
        raise ZeroVectorError("circle_decomposition requires a nonzero vector")
    c = complex(math.cos(math.pi / 4), -math.sin(math.pi / 4)) / math.sqrt(2)
    v = c * m
    return v, 1j * v


def unimodular_orbit(w: VectorLike, count: int) -> list[RealVector]:
    """Points ``cos t_k w' + sin t_k w''`` for ``t_k = 2 pi k / count``.

    These fill the circle of radius ``||w||`` in ``S_w``: the lifts of the
    unimodular multiples of ``w``.
    """
    if count < 1:
        raise ValueError("count must be positive")
    return [rotate_lift(w, 2 * math.pi * k / count) for k in range(count)]


def lifted_measurements(vectors: Sequence[VectorLike] | npt.NDArray, x: VectorLike) -> npt.NDArray:
    """``||v_j|| * ||P_{v_j} x'||`` for each ``v_j``; equals ``|<x, v_j>|``."""
    family = stack_vectors(vectors).astype(np.complex128)
    x_prime = lift(x).v_prime
    if x_prime.shape[0] != 2 * family.shape[1]:
        raise DimensionMismatchError("measurement vector dimension mismatch")
    out = np.empty(family.shape[0])
    for j, v in enumerate(family):
        norm = float(np.linalg.norm(v))
        out[j] = 0.0 if norm <= DEFAULT_TOLERANCE.eq_tol else norm * float(np.linalg.norm(rank2(v).apply(x_prime)))
    return out
