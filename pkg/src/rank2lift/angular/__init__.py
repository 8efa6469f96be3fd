"""Mutually unbiased bases and k-angular frames."""

from .kangular import KAngularTransfer, mercedes_benz_frame, transfer_kangular, unit_normalize
from .mub import MubFamily, MubTransfer, MubVerification, mub_construct, transfer_mub, verify_mub
from .spectrum import AngleSpectrum, angle_spectrum_projections, angle_spectrum_vectors, cluster_levels

__all__ = [
    "MubFamily",
    "MubVerification",
    "MubTransfer",
    "mub_construct",
    "verify_mub",
    "transfer_mub",
    "AngleSpectrum",
    "cluster_levels",
    "angle_spectrum_vectors",
    "angle_spectrum_projections",
    "KAngularTransfer",
    "unit_normalize",
    "mercedes_benz_frame",
    "transfer_kangular",
]
