"""
Exact densities by exhaustive vertex-subset enumeration.

All values are fractions.Fraction; no floating point is involved. Isolated
vertices never raise any of the maxima, so they are stripped first, and a
subset size is skipped when even a complete subgraph of that size could not
beat the best value found so far.
"""

import logging
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Optional

from ordered_ramsey.config import DENSITY_MAX_VERTICES
from ordered_ramsey.core.graph import OrderedGraph
from ordered_ramsey.errors import PreconditionError

# Set up logging
logger = logging.getLogger(__name__)

SINGLE_EDGE_M2 = Fraction(1, 2)


def _neighbor_masks(g: OrderedGraph) -> list:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u - 1] |= 1 << (v - 1)
        masks[v - 1] |= 1 << (u - 1)
    return masks


def _best_ratio(
    g: OrderedGraph,
    min_size: int,
    value: Callable[[int, int], Optional[Fraction]],
    bound: Callable[[int, int], Fraction],
) -> Optional[Fraction]:
    """Maximize value(edges, size) over vertex subsets of at least min_size vertices."""
    if g.n > DENSITY_MAX_VERTICES:
        raise PreconditionError(
            f"density enumeration is capped at {DENSITY_MAX_VERTICES} non-isolated vertices, got {g.n}"
        )
    masks = _neighbor_masks(g)
    total = g.num_edges
    best: Optional[Fraction] = None
    for size in range(g.n, min_size - 1, -1):
        if best is not None and bound(min(comb(size, 2), total), size) <= best:
            continue
        for subset in combinations(range(g.n), size):
            chosen = 0
            for v in subset:
                chosen |= 1 << v
            edges = sum(bin(masks[v] & chosen).count("1") for v in subset) // 2
            candidate = value(edges, size)
            if candidate is not None and (best is None or candidate > best):
                best = candidate
    return best


def density_m(g: OrderedGraph) -> Fraction:
    """m(G): the maximum of |E(G')| / |V(G')| over nonempty subgraphs."""
    if g.n == 0:
        raise PreconditionError("density of the empty graph is undefined")
    if g.num_edges == 0:
        return Fraction(0)
    core = g.strip_isolated()
    ratio = _best_ratio(core, 1, lambda e, v: Fraction(e, v), lambda e, v: Fraction(e, v))
    return ratio


def density_m2(g: OrderedGraph, allow_single_edge: bool = False) -> Fraction:
    """
    m2(G): the maximum of (|E(G')| - 1) / (|V(G')| - 2) over subgraphs on at least 3 vertices.

    Args:
        g: Graph with at least two edges
        allow_single_edge: Return 1/2 for a single edge instead of rejecting it

    Raises:
        PreconditionError: If g has fewer than two edges (and the convention is not requested)
    """
    if g.num_edges < 2:
        if g.num_edges == 1 and allow_single_edge:
            logger.debug("m2 of a single edge taken as 1/2 by convention")
            return SINGLE_EDGE_M2
        raise PreconditionError("m2 requires at least two edges")
    core = g.strip_isolated()
    return _best_ratio(
        core,
        3,
        lambda e, v: Fraction(e - 1, v - 2),
        lambda e, v: Fraction(e - 1, v - 2),
    )


def density_m2_asym(h: OrderedGraph, h2: OrderedGraph) -> Fraction:
    """
    Asymmetric 2-density m2(H, H'): max of |E(H'')| / (|V(H'')| - 2 + 1/m2(H)) over H'' ⊆ H'.

    Raises:
        PreconditionError: If h2 has no edge or m2(h) < m2(h2)
    """
    if h2.num_edges == 0 or h.num_edges == 0:
        raise PreconditionError("asymmetric m2 requires an edge in both graphs")
    m2_h = density_m2(h, allow_single_edge=True)
    m2_h2 = density_m2(h2, allow_single_edge=True)
    if m2_h < m2_h2:
        raise PreconditionError(f"asymmetric m2 requires m2(H) >= m2(H'), got {m2_h} < {m2_h2}")
    shift = Fraction(1) / m2_h - 2
    core = h2.strip_isolated()
    return _best_ratio(
        core,
        2,
        lambda e, v: Fraction(e) / (v + shift) if e >= 1 else None,
        lambda e, v: Fraction(e) / (v + shift),
    )
