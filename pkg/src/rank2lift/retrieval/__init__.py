"""Phase and norm retrieval checks for projection families."""

from .family import ProjectionFamily, complement_family
from .norm import (
    TransferReport,
    TransferSample,
    complement_pr_transfer,
    complement_transfer_check,
    norm_retrieval_check,
    span_residual,
    transfer_coefficients,
)
from .phase import (
    balanced_split_check,
    complement_property,
    complex_pr_check,
    complex_projection_pr_check,
    distinguishes,
    edidin_check,
    full_spark,
    indistinguishable_pair,
    nonvanishing_support_stats,
)
from .search import SearchBudget, SearchOutcome, SphereSearch, substream

__all__ = [
    "ProjectionFamily",
    "complement_family",
    "SearchBudget",
    "SearchOutcome",
    "SphereSearch",
    "substream",
    "distinguishes",
    "indistinguishable_pair",
    "complement_property",
    "full_spark",
    "balanced_split_check",
    "edidin_check",
    "complex_pr_check",
    "complex_projection_pr_check",
    "nonvanishing_support_stats",
    "norm_retrieval_check",
    "span_residual",
    "transfer_coefficients",
    "TransferSample",
    "TransferReport",
    "complement_transfer_check",
    "complement_pr_transfer",
]
