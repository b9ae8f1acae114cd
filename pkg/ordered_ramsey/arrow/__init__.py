"""Deciding the arrow relation, minimality and small ordered Ramsey numbers."""

from ordered_ramsey.arrow.minimal import (
    MinimalityCertificate,
    enumerate_minimal,
    is_minimal_ramsey,
    ordered_ramsey_number,
)
from ordered_ramsey.arrow.search import (
    ArrowCertificate,
    ArrowVerdict,
    arrows,
    arrows_naive,
    find_avoiding_coloring,
    iter_avoiding_colorings,
)

__all__ = [
    "ArrowCertificate",
    "ArrowVerdict",
    "MinimalityCertificate",
    "arrows",
    "arrows_naive",
    "enumerate_minimal",
    "find_avoiding_coloring",
    "is_minimal_ramsey",
    "iter_avoiding_colorings",
    "ordered_ramsey_number",
]
