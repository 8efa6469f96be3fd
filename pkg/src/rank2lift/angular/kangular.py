"""Reference frames and the transfer of k-angular tight frames to fusion frames."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import UnverifiedInputError, ZeroVectorError
from ..frames.bounds import Frame, FusionFrame, lift_frame_to_fusion
from ..linalg.geometry import DEFAULT_TOLERANCE, Tolerance
from ..utils.logger import get_logger
from .spectrum import AngleSpectrum, angle_spectrum_projections, angle_spectrum_vectors

logger = get_logger(__name__)


def unit_normalize(frame: Frame, tol: Tolerance = DEFAULT_TOLERANCE) -> Frame:
    """Rescale every vector to norm one."""
    norms = frame.norms
    if np.any(norms <= tol.eq_tol):
        raise ZeroVectorError("cannot normalize a frame with a zero vector")
    return Frame.from_vectors(frame.vectors / norms[:, None], tol)


def mercedes_benz_frame(*, complex_valued: bool = False, tol: Tolerance = DEFAULT_TOLERANCE) -> Frame:
    """Three unit vectors at 120 degrees in R^2 (optionally as vectors of C^2)."""
    angles = np.pi / 2 + 2 * np.pi * np.arange(3) / 3
    vectors = np.column_stack([np.cos(angles), np.sin(angles)])
    if complex_valued:
        vectors = vectors.astype(np.complex128)
    return Frame.from_vectors(vectors, tol)


@dataclass(frozen=True, eq=False)
class KAngularTransfer:
    fusion: FusionFrame
    vector_spectrum: AngleSpectrum
    projection_spectrum: AngleSpectrum
    max_level_deviation: float

    @property
    def levels_match(self) -> bool:
        return self.vector_spectrum.k == self.projection_spectrum.k and self.max_level_deviation <= 1e-10

    @property
    def valid(self) -> bool:
        return self.fusion.flags.tight and self.levels_match


def transfer_kangular(
    frame: Frame,
    cluster_width: float = 1e-6,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> KAngularTransfer:
    """Lift a unit norm tight frame of C^n to planes of R^{2n}.

    The projection levels are ``2 alpha^2`` for the vector levels ``alpha``,
    with the same number of levels.
    """
    if not frame.flags.unit_norm:
        raise UnverifiedInputError("transfer_kangular needs a unit norm frame")
    if not frame.flags.tight:
        raise UnverifiedInputError(f"transfer_kangular needs a tight frame, bounds {frame.bounds}")

    fusion = lift_frame_to_fusion(frame, tol)
    vector_spectrum = angle_spectrum_vectors(frame.vectors, cluster_width, tol)
    projection_spectrum = angle_spectrum_projections(fusion.subspaces, cluster_width)

    if vector_spectrum.k == projection_spectrum.k:
        expected = [2 * a**2 for a in vector_spectrum.levels]
        deviation = max((abs(e - b) for e, b in zip(expected, projection_spectrum.levels)), default=0.0)
    else:
        deviation = math.inf
        logger.warning(
            f"vector family has {vector_spectrum.k} levels but its lift has {projection_spectrum.k}"
        )
    return KAngularTransfer(
        fusion=fusion,
        vector_spectrum=vector_spectrum,
        projection_spectrum=projection_spectrum,
        max_level_deviation=deviation,
    )
