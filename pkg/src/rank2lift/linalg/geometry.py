"""Dense real/complex linear algebra with an explicit tolerance policy.

Vectors are 1-D numpy arrays (``float64`` or ``complex128``). A
:class:`Subspace` is stored as an orthonormal basis (rows); the dense
projection matrix is only formed on request.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field
from scipy.linalg import null_space

from ..errors import (
    DimensionMismatchError,
    EmptySpanError,
    FieldMismatchError,
    NotOrthonormalError,
    NotSymmetricError,
)

RealVector = npt.NDArray[np.float64]
ComplexVector = npt.NDArray[np.complex128]
Vector = Union[RealVector, ComplexVector]
VectorLike = Union[Sequence[complex], Sequence[float], npt.NDArray]


class Tolerance(BaseModel):
    """Numerical thresholds shared by every operation."""

    model_config = ConfigDict(frozen=True)

    rank_tol: float = Field(1e-8, gt=0, lt=1, description="relative singular-value threshold")
    ortho_tol: float = Field(1e-9, gt=0, description="absolute orthogonality threshold")
    eq_tol: float = Field(1e-9, gt=0, description="absolute scalar equality threshold")


DEFAULT_TOLERANCE = Tolerance()


def as_vector(coords: VectorLike, *, complex_field: bool | None = None) -> Vector:
    """Convert coordinates to a finite 1-D float64/complex128 array."""
    arr = np.asarray(coords)
    if arr.ndim != 1 or arr.size == 0:
        raise DimensionMismatchError(f"expected a nonempty 1-D vector, got shape {arr.shape}")
    if complex_field is None:
        complex_field = np.iscomplexobj(arr)
    arr = arr.astype(np.complex128 if complex_field else np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector has non-finite entries")
    return arr


def stack_vectors(vectors: Sequence[VectorLike] | npt.NDArray) -> npt.NDArray:
    """Stack a nonempty family of equal-length vectors into a (k, d) array."""
    if isinstance(vectors, np.ndarray):
        mat = np.atleast_2d(vectors)
    else:
        rows = [np.asarray(v) for v in vectors]
        if not rows:
            raise DimensionMismatchError("empty vector family")
        lengths = {r.shape for r in rows}
        if len(lengths) != 1 or rows[0].ndim != 1:
            raise DimensionMismatchError(f"vectors have mismatched shapes: {sorted(lengths)}")
        mat = np.vstack(rows)
    if mat.ndim != 2 or mat.shape[0] == 0 or mat.shape[1] == 0:
        raise DimensionMismatchError(f"expected a nonempty (k, d) family, got shape {mat.shape}")
    if not np.all(np.isfinite(mat)):
        raise ValueError("vector family has non-finite entries")
    if np.iscomplexobj(mat):
        return mat.astype(np.complex128)
    return mat.astype(np.float64)


def hermitian_inner(x: Vector, y: Vector) -> complex:
    """Inner product ``<x, y>``, linear in ``x`` and conjugate-linear in ``y``."""
    return complex(np.vdot(y, x))


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of R^d or C^d given by orthonormal basis rows.

    The trivial 0-dimensional subspace is allowed only as the orthogonal
    complement of a full space.
    """

    basis: npt.NDArray
    ambient_dim: int

    def __post_init__(self) -> None:
        basis = np.array(self.basis, copy=True)
        if basis.ndim != 2 or basis.shape[1] != self.ambient_dim:
            raise DimensionMismatchError(
                f"basis shape {basis.shape} does not match ambient dimension {self.ambient_dim}"
            )
        basis.setflags(write=False)
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    @property
    def is_complex(self) -> bool:
        return bool(np.iscomplexobj(self.basis))

    @property
    def field(self) -> str:
        return "C" if self.is_complex else "R"

    @classmethod
    def from_orthonormal(
        cls,
        vectors: Sequence[VectorLike] | npt.NDArray,
        tol: Tolerance = DEFAULT_TOLERANCE,
    ) -> Subspace:
        """Wrap vectors already claimed to be orthonormal, verifying the claim."""
        basis = stack_vectors(vectors)
        gram = basis.conj() @ basis.T
        deviation = float(np.max(np.abs(gram - np.eye(basis.shape[0]))))
        if deviation > tol.ortho_tol:
            raise NotOrthonormalError(f"basis is not orthonormal (max Gram deviation {deviation:.3e})")
        return cls(basis=basis, ambient_dim=basis.shape[1])

    @classmethod
    def trivial(cls, ambient_dim: int, *, complex_field: bool = False) -> Subspace:
        dtype = np.complex128 if complex_field else np.float64
        return cls(basis=np.zeros((0, ambient_dim), dtype=dtype), ambient_dim=ambient_dim)

    @classmethod
    def whole_space(cls, ambient_dim: int, *, complex_field: bool = False) -> Subspace:
        dtype = np.complex128 if complex_field else np.float64
        return cls(basis=np.eye(ambient_dim, dtype=dtype), ambient_dim=ambient_dim)

    def project(self, x: Vector) -> Vector:
        return project(self, x)

    def matrix(self) -> npt.NDArray:
        return projection_matrix(self)


def orthonormalize(
    vectors: Sequence[VectorLike] | npt.NDArray,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> Subspace:
    """Gram-Schmidt with one reorthogonalization pass.

    Inputs whose residual falls below ``rank_tol`` times the largest input
    norm are dropped as dependent.

    Raises:
        EmptySpanError: every input is numerically zero.
    """
    mat = stack_vectors(vectors)
    scale = float(np.max(np.linalg.norm(mat, axis=1)))
    if scale == 0.0:
        raise EmptySpanError("cannot orthonormalize a family of zero vectors")

    basis = np.zeros((0, mat.shape[1]), dtype=mat.dtype)
    for v in mat:
        r = v.copy()
        for _ in range(2):
            r = r - basis.T @ (basis.conj() @ r)
        norm = float(np.linalg.norm(r))
        if norm < tol.rank_tol * scale:
            continue
        basis = np.vstack([basis, r / norm])

    if basis.shape[0] == 0:
        raise EmptySpanError("all inputs are numerically zero relative to rank_tol")
    return Subspace(basis=basis, ambient_dim=mat.shape[1])


def _check_compatible(S: Subspace, x: Vector) -> None:
    if x.ndim != 1 or x.shape[0] != S.ambient_dim:
        raise DimensionMismatchError(f"vector of shape {x.shape} vs ambient dimension {S.ambient_dim}")
    if np.iscomplexobj(x) != S.is_complex:
        raise FieldMismatchError(f"vector field does not match subspace field {S.field}")


def project(S: Subspace, x: Vector) -> Vector:
    """Orthogonal projection ``Px = sum_i <x, b_i> b_i``."""
    x = np.asarray(x)
    _check_compatible(S, x)
    return (S.basis.conj() @ x) @ S.basis


def projection_matrix(S: Subspace) -> npt.NDArray:
    """Dense projection matrix ``sum_i b_i b_i^*``."""
    return S.basis.T @ S.basis.conj()


def tolerant_rank(
    vectors: Sequence[VectorLike] | npt.NDArray,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> int:
    """Number of singular values above ``rank_tol`` times the largest one."""
    mat = stack_vectors(vectors)
    s = np.linalg.svd(mat, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol.rank_tol * s[0]))


def symmetric_extremes(M: npt.ArrayLike, tol: Tolerance = DEFAULT_TOLERANCE) -> tuple[float, float]:
    """Smallest and largest eigenvalue of a symmetric/Hermitian operator."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionMismatchError(f"expected a square operator, got shape {M.shape}")
    scale = max(1.0, float(np.max(np.abs(M)))) if M.size else 1.0
    asym = float(np.max(np.abs(M - M.conj().T))) if M.size else 0.0
    if asym > tol.ortho_tol * scale:
        raise NotSymmetricError(f"operator is not symmetric/Hermitian (deviation {asym:.3e})")
    eigenvalues = np.linalg.eigvalsh((M + M.conj().T) / 2)
    return float(eigenvalues[0]), float(eigenvalues[-1])


def subspace_distance(S: Subspace, T: Subspace) -> float:
    """Spectral norm of the difference of the two projections."""
    if S.ambient_dim != T.ambient_dim:
        raise DimensionMismatchError("subspaces live in different ambient spaces")
    return float(np.linalg.norm(projection_matrix(S) - projection_matrix(T), 2))


def same_subspace(S: Subspace, T: Subspace, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Equality decided by the rank of the concatenated bases."""
    if S.ambient_dim != T.ambient_dim or S.dim != T.dim:
        return False
    if S.dim == 0:
        return True
    return tolerant_rank(np.vstack([S.basis, T.basis]), tol) == S.dim


def orthogonal_complement(S: Subspace, tol: Tolerance = DEFAULT_TOLERANCE) -> Subspace:
    """Orthonormal basis of the orthogonal complement of ``S``."""
    if S.dim == 0:
        return Subspace.whole_space(S.ambient_dim, complex_field=S.is_complex)
    # <x, b_i> = 0 for all i  <=>  conj(B) x = 0
    kernel = null_space(S.basis.conj(), rcond=tol.rank_tol)
    if kernel.shape[1] == 0:
        return Subspace.trivial(S.ambient_dim, complex_field=S.is_complex)
    return Subspace(basis=kernel.T, ambient_dim=S.ambient_dim)


def random_unit_vectors(
    rng: np.random.Generator,
    count: int,
    dim: int,
    *,
    complex_field: bool = False,
) -> npt.NDArray:
    """Rows drawn uniformly from the unit sphere of R^dim or C^dim."""
    samples = rng.standard_normal((count, dim))
    if complex_field:
        samples = samples + 1j * rng.standard_normal((count, dim))
    return samples / np.linalg.norm(samples, axis=1, keepdims=True)
