"""
Explicit forest Ramsey graphs and the path-with-chord pseudoforest.

build_forest_ramsey picks the lowest applicable forest case for the pair,
strips isolated vertices, builds a forest for the stripped pair and pads the
result back:

- matching blow-up: one copy of the other graph per vertex subset of the
  smallest complete graph that arrows the pair, spread over blocks;
- right-star blow-up: copies of a Ramsey forest for the pair with the
  rightmost vertex of the second graph removed, joined by matchings;
- left-star blow-up: the mirror of the right-star one;
- spanned stars: copies of a smaller Ramsey forest interleaved with another
  one and spanned by stars.
"""

import logging
from enum import Enum
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from ordered_ramsey.arrow.minimal import ordered_ramsey_number
from ordered_ramsey.arrow.search import _require_edges, arrows
from ordered_ramsey.classify import forest_case_roles
from ordered_ramsey.config import VERIFY_EDGE_LIMIT
from ordered_ramsey.constructions.combinators import pad_isolated
from ordered_ramsey.core.graph import Edge, OrderedGraph, mirror
from ordered_ramsey.core.structure import component_graphs, is_forest, is_left_star, is_right_star
from ordered_ramsey.errors import BudgetExceededError, NotCoveredError, VerificationError

# Set up logging
logger = logging.getLogger(__name__)

CASE_PROVENANCE = {
    1: "forest/matching-blowup",
    2: "forest/right-star-blowup",
    3: "forest/left-star-blowup",
    4: "forest/spanned-stars",
}


class VerificationStatus(str, Enum):
    VERIFIED = "VERIFIED"
    UNVERIFIED = "UNVERIFIED"


class Construction(BaseModel):
    """A built Ramsey graph with where it came from and whether it was machine-checked."""

    model_config = ConfigDict(frozen=True)

    graph: OrderedGraph
    provenance: str
    parameters: Dict[str, Any] = {}
    status: VerificationStatus = VerificationStatus.UNVERIFIED
    nodes: int = 0

    def header(self) -> List[str]:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        return [f"provenance: {self.provenance}", f"parameters: {params}", f"status: {self.status.value}"]


def verify_construction(
    graph: OrderedGraph,
    h: OrderedGraph,
    h2: OrderedGraph,
    provenance: str,
    parameters: Dict[str, Any],
    budget: Optional[int] = None,
    limit: int = VERIFY_EDGE_LIMIT,
) -> Construction:
    """
    Run the arrow search on a builder output when it has at most `limit` edges.

    Raises:
        VerificationError: If the output does not arrow the pair
    """
    if graph.num_edges > limit:
        logger.warning(f"{provenance}: {graph.num_edges} edges exceed the verification limit of {limit}")
        return Construction(graph=graph, provenance=provenance, parameters=parameters)
    try:
        cert = arrows(graph, h, h2, budget=budget)
    except BudgetExceededError as exc:
        logger.warning(f"{provenance}: verification stopped by the budget after {exc.nodes} nodes")
        return Construction(graph=graph, provenance=provenance, parameters=parameters, nodes=exc.nodes)
    if not cert.arrows:
        logger.error(f"{provenance}: {graph} does not arrow ({h}, {h2})")
        raise VerificationError(f"{provenance} output has an avoiding coloring:\n{cert.witness.to_text()}")
    return Construction(
        graph=graph,
        provenance=provenance,
        parameters=parameters,
        status=VerificationStatus.VERIFIED,
        nodes=cert.nodes,
    )


def _matching_blowup(matching: OrderedGraph, other: OrderedGraph, budget: Optional[int]) -> OrderedGraph:
    """
    Disjoint copies of `other`, one per k-subset Q of [r], r the ordered Ramsey number.

    Block V_i holds one vertex for each Q containing i, in lexicographic order
    of Q, and the blocks are ordered V_1 < ... < V_r.
    """
    r = ordered_ramsey_number(matching, other, budget=budget)
    k = other.n
    subsets = list(combinations(range(1, r + 1), k))
    logger.info(f"Matching blow-up over K_{r}: {len(subsets)} copies of a {k}-vertex graph")
    position: Dict[Tuple[int, Tuple[int, ...]], int] = {}
    for i in range(1, r + 1):
        for q in subsets:
            if i in q:
                position[(i, q)] = len(position) + 1
    edges: List[Edge] = []
    for q in subsets:
        for u, v in other.edges:
            edges.append((position[(q[u - 1], q)], position[(q[v - 1], q)]))
    return OrderedGraph.unchecked(len(position), edges)


def _without_rightmost(g: OrderedGraph) -> Tuple[OrderedGraph, int]:
    """g minus its rightmost vertex, stripped, and the number of vertices stripped."""
    rest = g.delete_vertex(g.n)
    return rest.strip_isolated(), len(rest.isolated_vertices())


def _right_star_blowup(stars: OrderedGraph, other: OrderedGraph) -> OrderedGraph:
    """
    Forest arrowing (stars, other) for a right-star forest against a graph
    whose vertices have at most one left neighbor; neither has isolated vertices.

    One block of |V(F')| vertices per vertex of `stars`, F' a forest for
    (stars, other - w) with w the rightmost vertex of `other`. Blocks of star
    centers induce F' and every star edge becomes a perfect matching between
    its two blocks.
    """
    if other.num_edges == 1:
        return stars
    smaller, padding = _without_rightmost(other)
    inner = pad_isolated(_right_star_blowup(stars, smaller), padding)
    m = inner.n
    edges: List[Edge] = []
    centers = {u for u, _ in stars.edges}
    for c in sorted(centers):
        shift = (c - 1) * m
        edges.extend((u + shift, v + shift) for u, v in inner.edges)
    for u, v in stars.edges:
        edges.extend(((u - 1) * m + k, (v - 1) * m + k) for k in range(1, m + 1))
    return OrderedGraph.unchecked(stars.n * m, edges)


def _left_star_blowup(stars: OrderedGraph, other: OrderedGraph) -> OrderedGraph:
    return mirror(_right_star_blowup(mirror(stars), mirror(other)))


def _stars_against_paths(stars: OrderedGraph, paths: OrderedGraph) -> OrderedGraph:
    """Forest arrowing (stars, paths): one-sided stars against monotone paths, no isolated vertices."""
    comps = component_graphs(stars)
    if all(is_right_star(c) for c in comps):
        return _right_star_blowup(stars, paths)
    if all(is_left_star(c) for c in comps):
        return _left_star_blowup(stars, paths)
    if paths.num_edges == 1:
        return stars
    return _spanned_stars(stars, paths)


def _spanned_stars(stars: OrderedGraph, paths: OrderedGraph) -> OrderedGraph:
    """
    Mixed left and right stars against monotone paths.

    S is the first right-star component of `stars`. With A arrowing
    (stars - S, paths) and B arrowing (stars, paths - w), the forest is
    B_1 G_1 a_1 B_2 G_2 a_2 ... a_n B_{n+1} G_{n+1}, where a_j are the
    vertices of A, B_j are copies of B and the gap G_j holds, for every
    i <= j and every vertex u of B_i, |E(S)| leaves adjacent to u.
    """
    comp = next(c for c in stars.components() if is_right_star(stars.induced(c)))
    s_edges = len(comp) - 1
    rest = stars.induced(v for v in stars.vertices if v not in set(comp))
    a_graph = _stars_against_paths(rest, paths)
    smaller, padding = _without_rightmost(paths)
    b_graph = pad_isolated(_stars_against_paths(stars, smaller), padding)
    n_a, n_b = a_graph.n, b_graph.n
    logger.debug(f"Spanned stars: A has {n_a} vertices, B has {n_b}, S has {s_edges} edges")

    edges: List[Edge] = []
    a_pos: List[int] = []
    b_start: List[int] = []
    size = 0
    for j in range(1, n_a + 2):
        b_start.append(size)
        edges.extend((u + size, v + size) for u, v in b_graph.edges)
        size += n_b
        for start in b_start:
            for u in range(start + 1, start + n_b + 1):
                for _ in range(s_edges):
                    size += 1
                    edges.append((u, size))
        if j <= n_a:
            size += 1
            a_pos.append(size)
    edges.extend((a_pos[u - 1], a_pos[v - 1]) for u, v in a_graph.edges)
    return OrderedGraph.unchecked(size, edges)


def _build_stripped(case: int, first: OrderedGraph, second: OrderedGraph, budget: Optional[int]) -> OrderedGraph:
    if case == 1:
        return _matching_blowup(first, second, budget)
    if case == 2:
        return _right_star_blowup(first, second)
    if case == 3:
        return _left_star_blowup(first, second)
    return _stars_against_paths(first, second)


def build_forest_ramsey(
    h: OrderedGraph,
    h2: OrderedGraph,
    budget: Optional[int] = None,
    verify: bool = True,
) -> Construction:
    """
    Build an ordered forest F with F -> (h, h2).

    Args:
        h: Graph forbidden in red
        h2: Graph forbidden in blue
        budget: Node budget for the ordered Ramsey number and the verification search
        verify: Check the output with the arrow search when it is small enough

    Returns:
        Construction whose graph is a forest

    Raises:
        NotCoveredError: If no forest case applies to the pair
        BudgetExceededError: From the ordered Ramsey number in the matching case
        CapExceededError: If that ordered Ramsey number is above the cap
        VerificationError: If the output is not a forest or does not arrow the pair
    """
    _require_edges(h, h2)
    roles = forest_case_roles(h, h2)
    if not roles:
        raise NotCoveredError(f"no forest case applies to ({h}, {h2})")
    case, swapped = roles[0]
    first, second = (h2, h) if swapped else (h, h2)
    padding = len(h.isolated_vertices()) + len(h2.isolated_vertices())
    logger.info(f"Building a forest by case {case} (swapped={swapped}, padding={padding})")
    graph = pad_isolated(_build_stripped(case, first.strip_isolated(), second.strip_isolated(), budget), padding)
    if not is_forest(graph):
        raise VerificationError(f"case {case} produced a graph with a cycle")
    parameters = {"case": case, "swapped": swapped, "padding": padding}
    provenance = CASE_PROVENANCE[case]
    if not verify:
        return Construction(graph=graph, provenance=provenance, parameters=parameters)
    return verify_construction(graph, h, h2, provenance, parameters, budget=budget)


def build_pseudoforest_ramsey_monP3() -> OrderedGraph:
    """Monotone path 1-2-3-4-5 plus the chord 2-4; arrows (monotone P3, monotone P3)."""
    return OrderedGraph.unchecked(5, [(1, 2), (2, 3), (3, 4), (4, 5), (2, 4)])
