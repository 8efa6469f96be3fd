"""Shared result types for rank2lift.

These dataclasses are used by the retrieval checks, the orchestrator and the
report writer; they live here to avoid circular imports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

import numpy as np
import numpy.typing as npt


class Verdict(str, Enum):
    """Outcome of a certification check."""

    CERTIFIED_FAIL = "CERTIFIED_FAIL"
    PASS_EXHAUSTIVE = "PASS_EXHAUSTIVE"
    PASS_PROBABILISTIC = "PASS_PROBABILISTIC"

    @property
    def passed(self) -> bool:
        return self is not Verdict.CERTIFIED_FAIL


class CoefficientKind(str, Enum):
    REPRODUCING = "REPRODUCING"  # sum a_i P_i y = y
    ANNIHILATING = "ANNIHILATING"  # sum a_i P_i y = 0


def encode_numeric(value: Any) -> Any:
    """JSON-ready form: arrays to lists, complex numbers to ``[re, im]`` pairs."""
    if value is None:
        return None
    if isinstance(value, np.ndarray):
        if np.iscomplexobj(value):
            return [[float(z.real), float(z.imag)] for z in value.ravel()] if value.ndim == 1 else [
                encode_numeric(row) for row in value
            ]
        return value.tolist()
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        return value.item()
    if isinstance(value, dict):
        return {k: encode_numeric(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_numeric(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    return value


@dataclass
class CheckReport:
    """Verdict of a retrieval check plus all witness data.

    A ``CERTIFIED_FAIL`` always carries a witness pair that was re-verified by
    an independent formula before the report was built.
    """

    check: str
    verdict: Verdict
    witness_x: Optional[npt.NDArray] = None
    witness_y: Optional[npt.NDArray] = None
    deficient_span_dim: Optional[int] = None
    violating_subset: Optional[tuple[int, ...]] = None
    samples_used: int = 0
    restarts_used: int = 0
    residual: float = 0.0
    seed: Optional[int] = None
    details: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict.passed

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        return {
            "check": self.check,
            "verdict": self.verdict.value,
            "witness_x": encode_numeric(self.witness_x),
            "witness_y": encode_numeric(self.witness_y),
            "deficient_span_dim": self.deficient_span_dim,
            "violating_subset": list(self.violating_subset) if self.violating_subset is not None else None,
            "samples_used": self.samples_used,
            "restarts_used": self.restarts_used,
            "residual": float(self.residual),
            "seed": self.seed,
            "details": encode_numeric(self.details),
            "notes": list(self.notes),
        }


@dataclass
class CoefficientSolution:
    """Scalars ``a`` with ``sum a_i P_i y = y`` (or ``= 0``)."""

    coefficients: npt.NDArray
    sum: float
    kind: CoefficientKind
    residual: float

    def to_dict(self) -> dict:
        return {
            "coefficients": encode_numeric(self.coefficients),
            "sum": float(self.sum),
            "kind": self.kind.value,
            "residual": float(self.residual),
        }


@dataclass
class DistinguishResult:
    """Per-measurement comparison of two vectors."""

    separating: list[bool]
    first_separating: Optional[int]
    criteria_agree: bool
    norm_differences: npt.NDArray

    @property
    def indistinguishable(self) -> bool:
        return self.first_separating is None


@dataclass
class FullSparkResult:
    full_spark: bool
    defective_subset: Optional[tuple[int, ...]] = None
    subsets_checked: int = 0


@dataclass
class SupportStats:
    """``I = {i : <x, v_i> != 0}`` and the span of ``{v_i : i in I}``."""

    support_size: int
    support_span_dim: int
    indices: tuple[int, ...] = ()
