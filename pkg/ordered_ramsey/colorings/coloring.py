"""
Red/blue edge colorings and the independent monochromatic-copy check.
"""

import logging
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from ordered_ramsey.core.graph import Edge, Embedding, OrderedGraph, find_embeddings, mirror
from ordered_ramsey.errors import GraphFormatError, VerificationError

# Set up logging
logger = logging.getLogger(__name__)


class Color(str, Enum):
    RED = "R"
    BLUE = "B"


class EdgeColoring(BaseModel):
    """Total red/blue coloring of a host's edges; every edge not listed as red is blue."""

    model_config = ConfigDict(frozen=True)

    host: OrderedGraph
    red: FrozenSet[Edge] = frozenset()

    @model_validator(mode="after")
    def _red_within_host(self):
        extra = self.red - self.host.edges
        if extra:
            raise ValueError(f"red edges {sorted(extra)} are not edges of the host")
        return self

    @classmethod
    def from_colors(cls, host: OrderedGraph, colors: Dict[Edge, Color]) -> "EdgeColoring":
        missing = host.edges - colors.keys()
        if missing:
            raise ValueError(f"coloring misses edges {sorted(missing)}")
        return cls(host=host, red=frozenset(e for e, c in colors.items() if c is Color.RED))

    @classmethod
    def from_mask(cls, host: OrderedGraph, red_mask: int) -> "EdgeColoring":
        """Edge i of host.edge_list is red iff bit i of red_mask is set."""
        red = frozenset(e for i, e in enumerate(host.edge_list) if red_mask >> i & 1)
        return cls.model_construct(host=host, red=red)

    @property
    def blue(self) -> FrozenSet[Edge]:
        return self.host.edges - self.red

    def color_of(self, u: int, v: int) -> Color:
        return Color.RED if (min(u, v), max(u, v)) in self.red else Color.BLUE

    def red_graph(self) -> OrderedGraph:
        return self.host.spanning(self.red)

    def blue_graph(self) -> OrderedGraph:
        return self.host.spanning(self.blue)

    def swapped(self) -> "EdgeColoring":
        return EdgeColoring.model_construct(host=self.host, red=self.blue)

    def mirrored(self) -> "EdgeColoring":
        n = self.host.n
        red = frozenset((n + 1 - v, n + 1 - u) for u, v in self.red)
        return EdgeColoring.model_construct(host=mirror(self.host), red=red)

    def red_mask(self) -> int:
        index = self.host.edge_index
        mask = 0
        for e in self.red:
            mask |= 1 << index[e]
        return mask

    def to_text(self) -> str:
        """One ``u v R|B`` line per edge, edges in lexicographic order."""
        return "".join(f"{u} {v} {self.color_of(u, v).value}\n" for u, v in self.host.edge_list)


def parse_coloring(text: str, host: OrderedGraph) -> EdgeColoring:
    """Parse ``u v R|B`` lines; the listed edges must be exactly the host's edges."""
    colors: Dict[Edge, Color] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if len(tokens) != 3 or tokens[2] not in ("R", "B"):
            raise GraphFormatError(f"expected '<u> <v> R|B', got {content!r}", lineno)
        try:
            edge = (int(tokens[0]), int(tokens[1]))
        except ValueError:
            raise GraphFormatError(f"expected integer endpoints, got {content!r}", lineno) from None
        if edge not in host.edges:
            raise GraphFormatError(f"{edge[0]} {edge[1]} is not an edge of the host", lineno)
        if edge in colors:
            raise GraphFormatError(f"edge {edge[0]} {edge[1]} colored twice", lineno)
        colors[edge] = Color(tokens[2])
    missing = host.edges - colors.keys()
    if missing:
        raise GraphFormatError(f"coloring misses edges {sorted(missing)}")
    return EdgeColoring.from_colors(host, colors)


def find_monochromatic_copy(coloring: EdgeColoring, pattern: OrderedGraph, color: Color) -> Optional[Embedding]:
    """First copy of pattern whose edges all have the given color, if any."""
    graph = coloring.red_graph() if color is Color.RED else coloring.blue_graph()
    found = find_embeddings(graph, pattern, limit=1)
    return found[0] if found else None


def avoids(coloring: EdgeColoring, h: OrderedGraph, h2: OrderedGraph) -> bool:
    """True when the coloring has no red copy of h and no blue copy of h2."""
    return (
        find_monochromatic_copy(coloring, h, Color.RED) is None
        and find_monochromatic_copy(coloring, h2, Color.BLUE) is None
    )


def verify_avoidance(coloring: EdgeColoring, h: OrderedGraph, h2: OrderedGraph, context: str) -> EdgeColoring:
    """Return the coloring unchanged, or raise VerificationError naming the monochromatic copy."""
    red_copy = find_monochromatic_copy(coloring, h, Color.RED)
    blue_copy = find_monochromatic_copy(coloring, h2, Color.BLUE)
    if red_copy is not None or blue_copy is not None:
        bad = f"red copy {red_copy.mapping}" if red_copy is not None else f"blue copy {blue_copy.mapping}"
        logger.error(f"{context}: coloring of {coloring.host} has a {bad}")
        raise VerificationError(f"{context}: coloring has a {bad}")
    return coloring


def merge_colorings(host: OrderedGraph, parts: Iterable[EdgeColoring], offsets: Iterable[Dict[int, int]]) -> EdgeColoring:
    """Combine colorings of induced pieces back onto host via per-piece vertex maps."""
    red = set()
    for part, position in zip(parts, offsets):
        red.update((position[u], position[v]) for u, v in part.red)
    return EdgeColoring(host=host, red=frozenset(red))
