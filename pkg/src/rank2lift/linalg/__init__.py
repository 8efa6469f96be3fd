"""Linear algebra core: tolerant geometry and the complex-to-real lift."""

from .geometry import (
    DEFAULT_TOLERANCE,
    Subspace,
    Tolerance,
    as_vector,
    hermitian_inner,
    orthogonal_complement,
    orthonormalize,
    project,
    projection_matrix,
    same_subspace,
    subspace_distance,
    symmetric_extremes,
    tolerant_rank,
)
from .realify import (
    LiftedSubspace,
    LiftedVectorPair,
    RankTwoProjection,
    circle_decomposition,
    hermitian_pairing_via_lift,
    lift,
    lift_subspace,
    lifted_measurements,
    rank2,
    rotate_lift,
    scalar_between,
    trace_pairing,
    unimodular_orbit,
    unlift,
)

__all__ = [
    "DEFAULT_TOLERANCE",
    "Subspace",
    "Tolerance",
    "as_vector",
    "hermitian_inner",
    "orthogonal_complement",
    "orthonormalize",
    "project",
    "projection_matrix",
    "same_subspace",
    "subspace_distance",
    "symmetric_extremes",
    "tolerant_rank",
    "LiftedSubspace",
    "LiftedVectorPair",
    "RankTwoProjection",
    "circle_decomposition",
    "hermitian_pairing_via_lift",
    "lift",
    "lift_subspace",
    "lifted_measurements",
    "rank2",
    "rotate_lift",
    "scalar_between",
    "trace_pairing",
    "unimodular_orbit",
    "unlift",
]
