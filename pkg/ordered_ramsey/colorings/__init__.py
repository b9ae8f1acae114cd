"""Edge colorings: the basic star, bipartite and bend colorings, and verification helpers.

The forest and pseudoforest refuters live in ordered_ramsey.colorings.refuters.
"""

from ordered_ramsey.colorings.basic import (
    bend_coloring,
    bipartite_coloring,
    proper_two_coloring,
    star_coloring,
)
from ordered_ramsey.colorings.coloring import (
    Color,
    EdgeColoring,
    avoids,
    find_monochromatic_copy,
    parse_coloring,
    verify_avoidance,
)

__all__ = [
    "Color",
    "EdgeColoring",
    "avoids",
    "bend_coloring",
    "bipartite_coloring",
    "find_monochromatic_copy",
    "parse_coloring",
    "proper_two_coloring",
    "star_coloring",
    "verify_avoidance",
]
