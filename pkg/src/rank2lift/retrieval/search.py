"""Seeded witness search over the unit sphere.

A search first evaluates an objective on random unit samples, then runs
derivative-free local minimisations (Nelder-Mead) from the best samples.
Every candidate whose objective falls below a threshold is handed to a
certifier; the first certificate wins. Samples are drawn from named
substreams of one root seed before any optimisation starts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Generic, Optional, TypeVar

import numpy as np
import numpy.typing as npt
from scipy.optimize import minimize

from ..linalg.geometry import random_unit_vectors
from ..utils.logger import get_logger
from ..utils.seeding import substream

logger = get_logger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class SearchBudget:
    """Sample count, local restarts and root seed of a search."""

    samples: int = 64
    restarts: int = 16
    seed: int = 0

    def to_dict(self) -> dict:
        return {"samples": self.samples, "restarts": self.restarts, "seed": self.seed}


@dataclass
class SearchOutcome(Generic[T]):
    certificate: Optional[T]
    best_point: npt.NDArray
    best_value: float
    samples_used: int
    restarts_used: int
    values: list[float] = field(default_factory=list)


def _normalize(z: npt.NDArray) -> npt.NDArray:
    norm = np.linalg.norm(z)
    if norm == 0.0:
        out = np.zeros_like(z)
        out[0] = 1.0
        return out
    return z / norm


@dataclass
class SphereSearch(Generic[T]):
    """Minimise ``objective`` over the unit sphere of R^dim."""

    budget: SearchBudget
    stream: str = "samples"

    def run(
        self,
        objective: Callable[[npt.NDArray], float],
        dim: int,
        certify: Callable[[npt.NDArray], Optional[T]],
        threshold: float,
    ) -> SearchOutcome[T]:
        rng = substream(self.budget.seed, self.stream)
        points = random_unit_vectors(rng, self.budget.samples, dim)
        values = np.array([objective(p) for p in points])

        best = int(np.argmin(values))
        outcome: SearchOutcome[T] = SearchOutcome(
            certificate=None,
            best_point=points[best],
            best_value=float(values[best]),
            samples_used=0,
            restarts_used=0,
        )

        for i, (p, value) in enumerate(zip(points, values)):
            outcome.samples_used = i + 1
            if value <= threshold:
                certificate = certify(p)
                if certificate is not None:
                    outcome.certificate = certificate
                    outcome.best_point, outcome.best_value = p, float(value)
                    return outcome

        starts = list(points[np.argsort(values, kind="stable")][: self.budget.restarts])
        if len(starts) < self.budget.restarts:
            extra = random_unit_vectors(
                substream(self.budget.seed, f"{self.stream}:restarts"),
                self.budget.restarts - len(starts),
                dim,
            )
            starts.extend(extra)

        options = {
            "xatol": 1e-11,
            "fatol": 1e-30,
            "maxiter": 500 * dim,
            "maxfev": 750 * dim,
            "adaptive": dim > 4,
        }
        for k, start in enumerate(starts):
            outcome.restarts_used = k + 1
            result = minimize(lambda z: objective(_normalize(z)), start, method="Nelder-Mead", options=options)
            x = _normalize(result.x)
            value = float(objective(x))
            outcome.values.append(value)
            logger.debug(f"restart {k + 1}/{len(starts)}: objective {value:.3e} after {result.nfev} evaluations")
            if value < outcome.best_value:
                outcome.best_point, outcome.best_value = x, value
            if value <= threshold:
                certificate = certify(x)
                if certificate is not None:
                    outcome.certificate = certificate
                    outcome.best_point, outcome.best_value = x, value
                    return outcome

        return outcome
