"""Shared fixtures."""

from __future__ import annotations

from typing import Callable

import numpy as np
import pytest

from rank2lift.linalg import DEFAULT_TOLERANCE, Tolerance
from rank2lift.retrieval import SearchBudget


@pytest.fixture
def tol() -> Tolerance:
    return DEFAULT_TOLERANCE


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def random_complex(rng: np.random.Generator) -> Callable[..., np.ndarray]:
    """``random_complex(n)`` or ``random_complex(m, n)`` Gaussian complex arrays."""

    def make(*shape: int) -> np.ndarray:
        return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)

    return make


@pytest.fixture
def random_real(rng: np.random.Generator) -> Callable[..., np.ndarray]:
    def make(*shape: int) -> np.ndarray:
        return rng.standard_normal(shape)

    return make


@pytest.fixture
def quick_budget() -> SearchBudget:
    """Small search budget for checks whose verdict does not need the optimizer."""
    return SearchBudget(samples=16, restarts=2, seed=0)
