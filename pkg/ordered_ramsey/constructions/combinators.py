"""
Building blocks for ordered graphs: stars, paths, matchings, caterpillars and
the three ways of gluing graphs (intervally disjoint union, concatenation and
hanging copies off a star).
"""

import logging
from typing import Iterable, List, Sequence

from ordered_ramsey.core.graph import Edge, OrderedGraph, mirror
from ordered_ramsey.core.structure import DefiningSequence, validate_defining_sequence
from ordered_ramsey.errors import PreconditionError

# Set up logging
logger = logging.getLogger(__name__)


def single_vertex() -> OrderedGraph:
    return OrderedGraph.edgeless(1)


def right_star(k: int) -> OrderedGraph:
    """S_k with center 1 and leaves 2..k+1; S_0 is a single vertex."""
    if k < 0:
        raise PreconditionError(f"star size must be >= 0, got {k}")
    return OrderedGraph.unchecked(k + 1, ((1, v) for v in range(2, k + 2)))


def left_star(k: int) -> OrderedGraph:
    return mirror(right_star(k))


def monotone_path(num_edges: int) -> OrderedGraph:
    if num_edges < 0:
        raise PreconditionError(f"path length must be >= 0, got {num_edges}")
    return OrderedGraph.unchecked(num_edges + 1, ((v, v + 1) for v in range(1, num_edges + 1)))


def monotone_matching(num_edges: int) -> OrderedGraph:
    """K2 ⊔ ... ⊔ K2 with the given number of edges."""
    return OrderedGraph.unchecked(2 * num_edges, ((2 * k - 1, 2 * k) for k in range(1, num_edges + 1)))


def union_offsets(graphs: Sequence[OrderedGraph]) -> List[int]:
    """Shift applied to each graph's vertices in union_intervally(*graphs)."""
    offsets, total = [], 0
    for g in graphs:
        offsets.append(total)
        total += g.n
    return offsets


def union_intervally(*graphs: OrderedGraph) -> OrderedGraph:
    """Vertex-disjoint union with every vertex of a graph left of all vertices of the next one."""
    edges: List[Edge] = []
    for g, shift in zip(graphs, union_offsets(graphs)):
        edges.extend((u + shift, v + shift) for u, v in g.edges)
    return OrderedGraph.unchecked(sum(g.n for g in graphs), edges)


def concat_offsets(graphs: Sequence[OrderedGraph]) -> List[int]:
    """Shift applied to each graph's vertices in concatenate(*graphs)."""
    offsets, total = [], 0
    for g in graphs:
        if g.n < 1:
            raise PreconditionError("concatenation needs graphs with at least one vertex")
        offsets.append(total)
        total += g.n - 1
    return offsets


def concatenate(*graphs: OrderedGraph) -> OrderedGraph:
    """
    Concatenation g_1 ∘ g_2 ∘ ... : each graph's rightmost vertex is identified
    with the next graph's leftmost vertex.
    """
    offsets = concat_offsets(graphs)
    edges: List[Edge] = []
    for g, shift in zip(graphs, offsets):
        edges.extend((u + shift, v + shift) for u, v in g.edges)
    return OrderedGraph.unchecked(offsets[-1] + graphs[-1].n, edges)


def hang_roots(a: int, b: int, g: OrderedGraph) -> List[int]:
    """Leftmost vertices of the b copies of g in hang(a, b, g)."""
    return [a + 2 + t * g.n for t in range(b)]


def hang(a: int, b: int, g: OrderedGraph) -> OrderedGraph:
    """
    S_a ⊔ (⊔_b g) plus an edge from the leftmost vertex to the leftmost vertex of each copy.

    Args:
        a: Size of the right star on the left
        b: Number of copies of g
        g: Graph hung off the star center

    Returns:
        Graph on a + 1 + b * |V(g)| vertices
    """
    if a < 0 or b < 0:
        raise PreconditionError(f"hang needs a, b >= 0, got a={a}, b={b}")
    if b and g.n < 1:
        raise PreconditionError("hang needs a graph with at least one vertex")
    base = union_intervally(right_star(a), *([g] * b))
    return base.add_edges((1, root) for root in hang_roots(a, b, g))


def build_caterpillar(d: Iterable[int]) -> OrderedGraph:
    """H(d) = S_{d_i} ∘ ... ∘ S_{d_1}; d[0] is the rightmost segment."""
    d = validate_defining_sequence(d)
    return concatenate(*(right_star(k) for k in reversed(d)))


def build_caterpillar_segment(d: DefiningSequence, i: int, j: int) -> OrderedGraph:
    """
    H_i^j(d) = S_{d_i} ∘ ... ∘ S_{d_j} for 1 <= j <= i.

    H_i^{i+1}(d) is a single vertex. Entries of d are 1-based in this notation,
    so d_t is d[t - 1].
    """
    if j == i + 1 and j >= 1:
        return single_vertex()
    if not 1 <= j <= i:
        raise PreconditionError(f"segment indices need 1 <= j <= i, got i={i}, j={j}")
    if i > len(d):
        raise PreconditionError(f"defining sequence {tuple(d)} has no segment {i}")
    return build_caterpillar(tuple(d)[j - 1 : i])


def caterpillar_prefix(d: DefiningSequence, i: int) -> OrderedGraph:
    """H_i(d), the i rightmost segments; H_0(d) is a single vertex."""
    if i == 0:
        return single_vertex()
    return build_caterpillar_segment(d, i, 1)


def pad_isolated(g: OrderedGraph, t: int) -> OrderedGraph:
    """Add t isolated vertices left of all vertices, right of all vertices and between consecutive ones."""
    if t < 0:
        raise PreconditionError(f"padding must be >= 0, got {t}")
    step = t + 1
    return OrderedGraph.unchecked(g.n * step + t, ((u * step, v * step) for u, v in g.edges))
