"""Frames, fusion frames and their realification."""

from .bounds import (
    Frame,
    FrameFlags,
    FusionFrame,
    frame_bounds,
    frame_operator,
    fusion_bounds,
    fusion_operator,
    harmonic_parseval,
    lift_frame_to_fusion,
    lift_fusion_to_fusion,
    tight_fusion_existence,
    two_plane_gaps,
)

__all__ = [
    "Frame",
    "FrameFlags",
    "FusionFrame",
    "frame_bounds",
    "frame_operator",
    "fusion_bounds",
    "fusion_operator",
    "harmonic_parseval",
    "lift_frame_to_fusion",
    "lift_fusion_to_fusion",
    "tight_fusion_existence",
    "two_plane_gaps",
]
