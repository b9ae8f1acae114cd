"""
Structural predicates, caterpillar sequences and interval decompositions.
"""

import logging
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from ordered_ramsey.core.graph import Edge, OrderedGraph, mirror
from ordered_ramsey.errors import PreconditionError

# Set up logging
logger = logging.getLogger(__name__)

# d[0] is the edge count of the rightmost segment
DefiningSequence = Tuple[int, ...]


class StructureReport(BaseModel):
    """Pydantic model for the structural flags of an ordered graph."""

    model_config = ConfigDict(frozen=True)

    n: int
    num_edges: int
    is_forest: bool
    is_pseudoforest: bool
    is_proper_pseudoforest: bool
    is_partial_matching: bool
    is_monotone_matching: bool
    is_monotone_path: bool
    is_left_star: bool
    is_right_star: bool
    is_star_forest: bool
    max_left_degree: int
    max_right_degree: int
    is_connected: bool
    components: List[Tuple[int, ...]]


def _component_edge_counts(g: OrderedGraph) -> List[Tuple[Tuple[int, ...], int]]:
    counts = []
    for comp in g.components():
        members = set(comp)
        counts.append((comp, sum(1 for u, v in g.edges if u in members)))
    return counts


def is_forest(g: OrderedGraph) -> bool:
    return g.num_edges == g.n - len(g.components())


def is_pseudoforest(g: OrderedGraph) -> bool:
    return all(e <= len(comp) for comp, e in _component_edge_counts(g))


def is_proper_pseudoforest(g: OrderedGraph) -> bool:
    return is_pseudoforest(g) and not is_forest(g)


def is_partial_matching(g: OrderedGraph) -> bool:
    return all(g.degree(v) <= 1 for v in g.vertices)


def is_monotone_matching(g: OrderedGraph) -> bool:
    """K2 ⊔ ... ⊔ K2 with at least one edge and no isolated vertices."""
    if g.n < 2 or g.n % 2:
        return False
    return g.edges == frozenset((2 * k - 1, 2 * k) for k in range(1, g.n // 2 + 1))


def is_monotone_path(g: OrderedGraph) -> bool:
    return g.n >= 2 and g.edges == frozenset((i, i + 1) for i in range(1, g.n))


def is_right_star(g: OrderedGraph) -> bool:
    return g.n >= 2 and g.edges == frozenset((1, v) for v in range(2, g.n + 1))


def is_left_star(g: OrderedGraph) -> bool:
    return g.n >= 2 and g.edges == frozenset((v, g.n) for v in range(1, g.n))


def is_star(g: OrderedGraph) -> bool:
    """Connected star (any orientation) with at least one edge."""
    if g.n < 2 or g.num_edges != g.n - 1:
        return False
    return any(g.degree(v) == g.n - 1 for v in g.vertices)


def component_graphs(g: OrderedGraph, skip_isolated: bool = True) -> List[OrderedGraph]:
    """Each component as its own canonical ordered graph, left to right."""
    return [g.induced(comp) for comp in g.components() if not (skip_isolated and len(comp) == 1)]


def is_star_forest(g: OrderedGraph) -> bool:
    return all(is_star(c) for c in component_graphs(g))


def max_left_degree(g: OrderedGraph) -> int:
    return max((len(g.left_neighbors(v)) for v in g.vertices), default=0)


def max_right_degree(g: OrderedGraph) -> int:
    return max((len(g.right_neighbors(v)) for v in g.vertices), default=0)


def contains_monotone_p3(g: OrderedGraph) -> bool:
    return any(g.left_neighbors(v) and g.right_neighbors(v) for v in g.vertices)


def contains_p4(g: OrderedGraph) -> bool:
    """Whether g contains a path on four vertices, in any vertex order."""
    for u, v in g.edges:
        xs = g.adjacency[u] - {v}
        ys = g.adjacency[v] - {u}
        if xs and ys and (len(xs) > 1 or len(ys) > 1 or xs != ys):
            return True
    return False


def contains_mixed_three_star(g: OrderedGraph) -> bool:
    """A 3-edge star that is neither left nor right: one side has 1 leaf, the other 2."""
    for v in g.vertices:
        left, right = len(g.left_neighbors(v)), len(g.right_neighbors(v))
        if (left >= 1 and right >= 2) or (left >= 2 and right >= 1):
            return True
    return False


def has_non_star_component(g: OrderedGraph) -> bool:
    return any(not is_star(c) for c in component_graphs(g))


def classify_structure(g: OrderedGraph) -> StructureReport:
    """
    Compute every structural flag of an ordered graph.

    Args:
        g: Canonical ordered graph

    Returns:
        StructureReport with forest/pseudoforest/matching/path/star flags,
        one-sided degree maxima and the component list
    """
    comps = g.components()
    return StructureReport(
        n=g.n,
        num_edges=g.num_edges,
        is_forest=is_forest(g),
        is_pseudoforest=is_pseudoforest(g),
        is_proper_pseudoforest=is_proper_pseudoforest(g),
        is_partial_matching=is_partial_matching(g),
        is_monotone_matching=is_monotone_matching(g),
        is_monotone_path=is_monotone_path(g),
        is_left_star=is_left_star(g),
        is_right_star=is_right_star(g),
        is_star_forest=is_star_forest(g),
        max_left_degree=max_left_degree(g),
        max_right_degree=max_right_degree(g),
        is_connected=len(comps) == 1,
        components=comps,
    )


def extract_defining_sequence(g: OrderedGraph) -> Optional[DefiningSequence]:
    """
    Recover the defining sequence of a right caterpillar.

    Segments are right stars glued left to right, each one's rightmost leaf
    being the next one's center. Every vertex strictly inside a segment is a
    leaf of that segment's center, so the walk below checks each vertex's
    full neighborhood exactly once.

    Returns:
        (d_1, ..., d_i) with d_1 the rightmost segment, or None when g is not
        a right caterpillar
    """
    if g.n < 2:
        return None
    segments: List[int] = []
    previous: Optional[int] = None
    center = 1
    while center < g.n:
        expected_left = [previous] if previous is not None else []
        if g.left_neighbors(center) != expected_left:
            return None
        right = g.right_neighbors(center)
        if not right:
            return None
        end = right[-1]
        if right != list(range(center + 1, end + 1)):
            return None
        if any(g.adjacency[v] != {center} for v in range(center + 1, end)):
            return None
        segments.append(end - center)
        previous, center = center, end
    if g.adjacency[g.n] != {previous}:
        return None
    return tuple(reversed(segments))


def extract_left_defining_sequence(g: OrderedGraph) -> Optional[DefiningSequence]:
    """Defining sequence of a left caterpillar (the mirror of a right one)."""
    return extract_defining_sequence(mirror(g))


def validate_defining_sequence(d) -> DefiningSequence:
    d = tuple(int(x) for x in d)
    if not d or any(x < 1 for x in d):
        raise PreconditionError(f"defining sequence must be nonempty with entries >= 1, got {d}")
    return d


def _spanned_cuts(g: OrderedGraph) -> List[bool]:
    """spanned[k] is True when some edge has one endpoint <= k and the other > k."""
    reach = [0] * (g.n + 2)
    for u, v in g.edges:
        reach[u] = max(reach[u], v)
    spanned = [False] * (g.n + 1)
    furthest = 0
    for k in range(1, g.n):
        furthest = max(furthest, reach[k])
        spanned[k] = furthest > k
    return spanned


def is_loosely_connected(g: OrderedGraph) -> bool:
    if g.n < 2:
        return False
    spanned = _spanned_cuts(g)
    return all(spanned[k] for k in range(1, g.n))


def decompose_loosely(g: OrderedGraph) -> List[OrderedGraph]:
    """
    Split g into its unique ⊔-decomposition into loosely connected blocks.

    Raises:
        PreconditionError: If g has isolated vertices
    """
    if g.isolated_vertices():
        raise PreconditionError("decompose_loosely requires a graph without isolated vertices")
    spanned = _spanned_cuts(g)
    blocks, start = [], 1
    for k in range(1, g.n + 1):
        if k == g.n or not spanned[k]:
            blocks.append(g.induced(range(start, k + 1)))
            start = k + 1
    return blocks


def crossing(e: Edge, f: Edge) -> bool:
    """Edges xy and x'y' cross when x < x' < y < y' (in either role)."""
    (x, y), (a, b) = sorted(e), sorted(f)
    return x < a < y < b or a < x < b < y


def displayed_vertices(g: OrderedGraph) -> List[int]:
    """Vertices a with no edge bc such that b < a < c."""
    return [a for a in g.vertices if not any(u < a < v for u, v in g.edges)]
