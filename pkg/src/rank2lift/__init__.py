"""rank2lift - complex vectors as rank 2 projections, with retrieval and frame certification."""

__version__ = "0.1.0"
__author__ = "AlphaTales Team"
