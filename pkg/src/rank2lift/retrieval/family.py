"""Families of orthogonal projections ``{P_i}`` given by their ranges."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
import numpy.typing as npt

from ..errors import DimensionMismatchError, FieldMismatchError, ZeroVectorError
from ..linalg.geometry import (
    DEFAULT_TOLERANCE,
    Subspace,
    Tolerance,
    Vector,
    VectorLike,
    orthogonal_complement,
    projection_matrix,
    stack_vectors,
)


@dataclass(frozen=True, eq=False)
class ProjectionFamily:
    """Nonempty family of subspaces of a common real or complex space."""

    members: tuple[Subspace, ...]

    def __post_init__(self) -> None:
        members = tuple(self.members)
        if not members:
            raise DimensionMismatchError("a projection family needs at least one member")
        if len({S.ambient_dim for S in members}) != 1:
            raise DimensionMismatchError("family members live in different ambient spaces")
        if len({S.is_complex for S in members}) != 1:
            raise FieldMismatchError("family mixes real and complex subspaces")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_vectors(
        cls,
        vectors: Sequence[VectorLike] | npt.NDArray,
        tol: Tolerance = DEFAULT_TOLERANCE,
    ) -> ProjectionFamily:
        """Rank one projections onto ``span{v_i}``; zero vectors are rejected."""
        mat = stack_vectors(vectors)
        norms = np.linalg.norm(mat, axis=1)
        zero = np.flatnonzero(norms <= tol.eq_tol)
        if zero.size:
            raise ZeroVectorError(f"vector {int(zero[0])} of the family is zero")
        rows = mat / norms[:, None]
        return cls(tuple(Subspace(basis=row[None, :], ambient_dim=mat.shape[1]) for row in rows))

    @property
    def ambient_dim(self) -> int:
        return self.members[0].ambient_dim

    @property
    def is_complex(self) -> bool:
        return self.members[0].is_complex

    @property
    def field(self) -> str:
        return self.members[0].field

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Subspace]:
        return iter(self.members)

    def _check_vector(self, x: Vector) -> None:
        if x.ndim != 1 or x.shape[0] != self.ambient_dim:
            raise DimensionMismatchError(f"vector of shape {x.shape} vs ambient dimension {self.ambient_dim}")
        if np.iscomplexobj(x) and not self.is_complex:
            raise FieldMismatchError("complex vector supplied to a real family")

    def images(self, x: Vector) -> npt.NDArray:
        """Rows ``P_i x``."""
        x = np.asarray(x)
        self._check_vector(x)
        if self.is_complex:
            x = x.astype(np.complex128)
        return np.vstack([(S.basis.conj() @ x) @ S.basis for S in self.members])

    def norms(self, x: Vector) -> npt.NDArray:
        """Measurements ``||P_i x||``."""
        return np.linalg.norm(self.images(x), axis=1)

    def operator(self, weights: Sequence[float] | None = None) -> npt.NDArray:
        """Dense ``sum_i w_i P_i`` (unit weights by default)."""
        weights = np.ones(len(self)) if weights is None else np.asarray(weights, dtype=float)
        return sum(w * projection_matrix(S) for w, S in zip(weights, self.members))


def complement_family(F: ProjectionFamily, tol: Tolerance = DEFAULT_TOLERANCE) -> ProjectionFamily:
    """The family ``{I - P_i}`` of orthogonal complements."""
    return ProjectionFamily(tuple(orthogonal_complement(S, tol) for S in F.members))
