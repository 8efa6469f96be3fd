"""JSON report written by every ``check`` command."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, Field

from .. import __version__
from ..linalg.geometry import Tolerance
from ..models import CheckReport, encode_numeric
from ..utils.file_ops import FileManager


class ReportFile(BaseModel):
    """Verdict, witnesses and details of one command run.

    ``timing`` is the only field that may differ between two runs with the
    same input, seed and budget.
    """

    command: str
    version: str = __version__
    input_digest: Optional[str] = None
    seed: int = 0
    tolerances: Tolerance
    verdict: Optional[str] = None
    exit_code: int = 0
    witnesses: dict[str, Any] = Field(default_factory=dict)
    reports: list[dict[str, Any]] = Field(default_factory=list)
    details: dict[str, Any] = Field(default_factory=dict)
    timing: dict[str, float] = Field(default_factory=dict)

    @classmethod
    def from_checks(
        cls,
        command: str,
        checks: list[CheckReport],
        *,
        tolerances: Tolerance,
        seed: int,
        input_digest: Optional[str] = None,
        details: Optional[dict[str, Any]] = None,
    ) -> ReportFile:
        """Combine reports; the first failing check provides verdict and witnesses."""
        failing = next((c for c in checks if not c.passed), None)
        lead = failing or (checks[0] if checks else None)
        witnesses: dict[str, Any] = {}
        if lead is not None and lead.witness_x is not None:
            witnesses = {"x": encode_numeric(lead.witness_x), "y": encode_numeric(lead.witness_y)}
        return cls(
            command=command,
            input_digest=input_digest,
            seed=seed,
            tolerances=tolerances,
            verdict=lead.verdict.value if lead is not None else None,
            exit_code=1 if failing is not None else 0,
            witnesses=witnesses,
            reports=[c.to_dict() for c in checks],
            details=encode_numeric(details or {}),
        )

    @classmethod
    def from_error(
        cls,
        command: str,
        error: Exception,
        *,
        tolerances: Tolerance,
        seed: int,
        input_digest: Optional[str] = None,
    ) -> ReportFile:
        """Report for a run stopped by a usage or data error (exit code 2)."""
        return cls(
            command=command,
            input_digest=input_digest,
            seed=seed,
            tolerances=tolerances,
            verdict=None,
            exit_code=2,
            details={"error": str(error), "error_type": type(error).__name__},
        )

    def numeric_payload(self) -> dict[str, Any]:
        """Everything except timing."""
        return self.model_dump(mode="json", exclude={"timing"})

    def save(self, path: Path, files: Optional[FileManager] = None) -> Path:
        return (files or FileManager()).write_json(path, self.model_dump(mode="json"))
