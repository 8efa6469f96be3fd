"""On-disk JSON format for vector, subspace and fusion families.

Example::

    {
      "field": "C",
      "dim": 2,
      "kind": "vectors",
      "entries": [[[1.0, 2.0], [3.0, 0.0]]],
      "metadata": {"name": "single", "seed": 0}
    }

Complex numbers are always ``[re, im]`` pairs. A ``subspaces`` entry is a
list of basis vectors; ``fusion`` entries are subspaces with a matching
``weights`` list.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any, Literal, Optional, Sequence

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import FamilyFileError
from ..linalg.geometry import DEFAULT_TOLERANCE, Subspace, Tolerance, orthonormalize
from ..models import encode_numeric
from ..utils.file_ops import FileManager

FieldTag = Literal["R", "C"]
FamilyKind = Literal["vectors", "subspaces", "fusion"]


class FamilyMetadata(BaseModel):
    model_config = ConfigDict(extra="allow")

    name: Optional[str] = None
    seed: Optional[int] = None


def _decode_vector(raw: Any, field: FieldTag, dim: int) -> npt.NDArray:
    try:
        arr = np.asarray(raw, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise ValueError(f"non-numeric vector entry: {e}") from e
    expected = (dim,) if field == "R" else (dim, 2)
    if arr.shape != expected:
        raise ValueError(f"vector of shape {arr.shape}, expected {expected} for field {field}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite vector entry")
    return arr if field == "R" else arr[:, 0] + 1j * arr[:, 1]


class FamilyFile(BaseModel):
    """A family of vectors or subspaces over R or C."""

    field: FieldTag
    dim: int = Field(ge=1)
    kind: FamilyKind
    entries: list[Any] = Field(min_length=1)
    weights: Optional[list[float]] = None
    metadata: FamilyMetadata = Field(default_factory=FamilyMetadata)

    @model_validator(mode="after")
    def _check_shapes(self) -> FamilyFile:
        if self.kind == "vectors":
            for raw in self.entries:
                _decode_vector(raw, self.field, self.dim)
        else:
            for raw in self.entries:
                if not isinstance(raw, list) or not raw:
                    raise ValueError("a subspace entry must be a nonempty list of basis vectors")
                if len(raw) > self.dim:
                    raise ValueError(f"subspace with {len(raw)} basis vectors in dimension {self.dim}")
                for v in raw:
                    _decode_vector(v, self.field, self.dim)

        if self.kind == "fusion":
            if self.weights is None or len(self.weights) != len(self.entries):
                raise ValueError("fusion families need one weight per entry")
            if any(not np.isfinite(w) or w <= 0 for w in self.weights):
                raise ValueError("fusion weights must be finite and positive")
        elif self.weights is not None:
            raise ValueError(f"weights are only allowed for fusion families, not {self.kind}")
        return self

    @property
    def is_complex(self) -> bool:
        return self.field == "C"

    def vectors(self) -> npt.NDArray:
        """Rows of a ``vectors`` family."""
        if self.kind != "vectors":
            raise FamilyFileError(f"expected a vector family, got kind {self.kind!r}")
        return np.vstack([_decode_vector(v, self.field, self.dim) for v in self.entries])

    def basis_arrays(self) -> list[npt.NDArray]:
        """Raw basis rows of every subspace entry, as stored."""
        if self.kind == "vectors":
            raise FamilyFileError("expected a subspace or fusion family, got vectors")
        return [np.vstack([_decode_vector(v, self.field, self.dim) for v in raw]) for raw in self.entries]

    def subspaces(self, tol: Tolerance = DEFAULT_TOLERANCE) -> list[Subspace]:
        """Orthonormalized subspaces; a ``vectors`` family gives their spans."""
        if self.kind == "vectors":
            return [orthonormalize(v[None, :], tol) for v in self.vectors()]
        return [orthonormalize(B, tol) for B in self.basis_arrays()]

    def digest(self) -> str:
        """SHA-256 of the canonical JSON form."""
        canonical = json.dumps(self.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    @classmethod
    def from_vectors(cls, vectors: npt.NDArray, **metadata: Any) -> FamilyFile:
        V = np.atleast_2d(np.asarray(vectors))
        return cls(
            field="C" if np.iscomplexobj(V) else "R",
            dim=V.shape[1],
            kind="vectors",
            entries=[encode_numeric(v) for v in V],
            metadata=FamilyMetadata(**metadata),
        )

    @classmethod
    def from_subspaces(
        cls,
        bases: Sequence[Subspace | npt.NDArray],
        weights: Optional[Sequence[float]] = None,
        **metadata: Any,
    ) -> FamilyFile:
        arrays = [np.atleast_2d(B.basis if isinstance(B, Subspace) else np.asarray(B)) for B in bases]
        is_complex = any(np.iscomplexobj(B) for B in arrays)
        if is_complex:
            arrays = [B.astype(np.complex128) for B in arrays]
        return cls(
            field="C" if is_complex else "R",
            dim=arrays[0].shape[1],
            kind="subspaces" if weights is None else "fusion",
            entries=[[encode_numeric(v) for v in B] for B in arrays],
            weights=None if weights is None else [float(w) for w in weights],
            metadata=FamilyMetadata(**metadata),
        )

    @classmethod
    def load(cls, path: Path, files: Optional[FileManager] = None) -> FamilyFile:
        return cls.model_validate((files or FileManager()).read_json(path))

    def save(self, path: Path, files: Optional[FileManager] = None) -> Path:
        return (files or FileManager()).write_json(path, self.model_dump(mode="json", exclude_none=True))
