"""Runtime settings for rank2lift.

Values come from (in increasing priority) defaults, a ``.env`` file,
``RANK2LIFT_*`` environment variables, and CLI flags applied through
:meth:`Settings.with_overrides`.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Any, Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from .linalg.geometry import Tolerance


class Settings(BaseSettings):
    """Tolerances, search budgets and guards."""

    model_config = SettingsConfigDict(
        env_prefix="RANK2LIFT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Tolerance policy
    rank_tol: float = Field(1e-8, gt=0, lt=1)
    ortho_tol: float = Field(1e-9, gt=0)
    eq_tol: float = Field(1e-9, gt=0)

    # Witness search
    seed: int = Field(0, ge=0)
    samples: int = Field(64, ge=1)
    restarts: int = Field(16, ge=0)
    nr_residual_tol: float = Field(1e-6, gt=0)
    hyperplane_spot_checks: int = Field(200, ge=0)

    # Exhaustive guards
    complement_max_vectors: int = Field(24, ge=1)
    full_spark_max_subsets: int = Field(1_000_000, ge=1)
    mub_max_prime: int = Field(101, ge=2)

    # Angle spectra
    cluster_width: float = Field(1e-6, gt=0)

    # Logging
    log_level: str = "INFO"
    log_dir: Optional[Path] = None

    def tolerance(self) -> Tolerance:
        return Tolerance(rank_tol=self.rank_tol, ortho_tol=self.ortho_tol, eq_tol=self.eq_tol)

    def with_overrides(self, **overrides: Any) -> Settings:
        """Copy with the non-``None`` overrides applied and re-validated."""
        updates = {k: v for k, v in overrides.items() if v is not None}
        if not updates:
            return self
        return Settings.model_validate({**self.model_dump(), **updates})


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
