from .graphs import (
    BuildProduct,
    ComputeHull,
    ComputeInterval,
    ComputeInvariant,
    ExportGraph,
)
from .verification import RunVerification

__all__ = [
    "BuildProduct",
    "ComputeHull",
    "ComputeInterval",
    "ComputeInvariant",
    "ExportGraph",
    "RunVerification",
]
