"""
Infinitely many minimal Ramsey graphs for a right star against a right
caterpillar that is not almost increasing.

Two chains are built from determiners, one for each way the defining
sequence can fail to be almost increasing:

- build_gamma_n: some d_j exceeds both d_{j+1} and d_{j+2}. Every minimal
  Ramsey subgraph keeps all n + 1 dashed edges.
- build_f_n: some d_{j-1} exceeds d_j with j >= 3. Every minimal Ramsey
  subgraph keeps the chain edges between consecutive gamma vertices.
"""

import logging
from typing import Any, Dict, List, Optional, Tuple

from ordered_ramsey.constructions.combinators import (
    build_caterpillar,
    concat_offsets,
    concatenate,
    hang,
    right_star,
    union_intervally,
    union_offsets,
)
from ordered_ramsey.constructions.determiners import DeterminerSpec, build_determiner
from ordered_ramsey.constructions.forests import Construction, verify_construction
from ordered_ramsey.core.graph import Edge, OrderedGraph
from ordered_ramsey.core.structure import DefiningSequence, is_right_star, validate_defining_sequence
from ordered_ramsey.errors import PreconditionError

# Set up logging
logger = logging.getLogger(__name__)


class UnavoidableConstruction(Construction):
    """A chained Ramsey graph and the edges every minimal Ramsey subgraph of it keeps."""

    dashed: List[Edge] = []
    gammas: List[int] = []
    u_vertices: List[int] = []
    w_vertices: List[int] = []


def _star_size(h: OrderedGraph) -> int:
    if not is_right_star(h):
        raise PreconditionError(f"{h} is not a right star")
    return h.num_edges


def _left(s: int, d: DefiningSequence, t: int) -> OrderedGraph:
    return build_determiner(DeterminerSpec.left(s, d, t))


def _right(s: int, d: DefiningSequence, t: int) -> OrderedGraph:
    return build_determiner(DeterminerSpec.right(s, d, len(d), t))


def _with_long_edge(g: OrderedGraph) -> OrderedGraph:
    """Join the leftmost and the rightmost vertex."""
    return g.add_edges([(1, g.n)])


def _finish(
    graph: OrderedGraph,
    h: OrderedGraph,
    d: DefiningSequence,
    provenance: str,
    parameters: Dict[str, Any],
    verify: bool,
    budget: Optional[int],
    **extra,
) -> UnavoidableConstruction:
    target = build_caterpillar(d)
    if verify:
        base = verify_construction(graph, h, target, provenance, parameters, budget=budget)
    else:
        base = Construction(graph=graph, provenance=provenance, parameters=parameters)
    logger.info(f"{provenance}: {graph.n} vertices, {graph.num_edges} edges, status {base.status.value}")
    return UnavoidableConstruction(**dict(base), **extra)


def build_gamma_n(
    h: OrderedGraph,
    d,
    j: int,
    n: int,
    tail_index: Optional[int] = None,
    verify: bool = True,
    budget: Optional[int] = None,
) -> UnavoidableConstruction:
    """
    Gamma_n = D_{>=j+3} ∘ Gamma'' ∘ (Gamma')^n ∘ D_{<=tail} for (h, H_i(d)).

    Gamma' is hang(a, s - 1, D_{<=j}) ⊔ D_{>=j+3} with its leftmost and
    rightmost vertices joined, Gamma'' the same with D_{<=j+1}, and
    a = max(d_{j+1}, d_{j+2}) - 1. The joining edges are the dashed edges.

    Args:
        h: Right star with s edges
        d: Defining sequence of the caterpillar, i = len(d)
        j: Index with 1 <= j <= i - 2 and d_j > max(d_{j+1}, d_{j+2})
        n: Number of Gamma' copies, at least 1
        tail_index: Index of the closing left determiner (default j)
        verify: Run the arrow search when the output is small enough
        budget: Node budget for that search

    Returns:
        UnavoidableConstruction with the dashed edges listed left to right
    """
    s = _star_size(h)
    d = validate_defining_sequence(d)
    i = len(d)
    tail = j if tail_index is None else tail_index
    if not 1 <= j <= i - 2:
        raise PreconditionError(f"need 1 <= j <= i - 2, got j={j}, i={i}")
    if d[j - 1] <= max(d[j], d[j + 1]):
        raise PreconditionError(f"need d_j > max(d_(j+1), d_(j+2)) at j={j}, got {d}")
    if n < 1:
        raise PreconditionError(f"need n >= 1, got {n}")
    if not 0 <= tail < i:
        raise PreconditionError(f"tail determiner index must be in 0..{i - 1}, got {tail}")

    a = max(d[j], d[j + 1]) - 1
    right_end = _right(s, d, j + 3)
    gamma1 = _with_long_edge(union_intervally(hang(a, s - 1, _left(s, d, j)), right_end))
    gamma2 = _with_long_edge(union_intervally(hang(a, s - 1, _left(s, d, j + 1)), right_end))
    pieces = [right_end, gamma2, *([gamma1] * n), _left(s, d, tail)]
    graph = concatenate(*pieces)
    offsets = concat_offsets(pieces)
    dashed = [(offsets[k] + 1, offsets[k] + pieces[k].n) for k in range(1, n + 2)]
    parameters = {"s": s, "d": ",".join(map(str, d)), "j": j, "n": n, "tail": tail, "a": a}
    return _finish(graph, h, d, "unavoidable/dashed-chain", parameters, verify, budget, dashed=dashed)


def _shared_rightmost(outer: OrderedGraph, inner: OrderedGraph) -> OrderedGraph:
    """
    Insert a copy of inner between the two rightmost vertices of outer so
    that the copy's rightmost vertex is outer's rightmost vertex.
    """
    if outer.n < 2:
        raise PreconditionError("outer graph needs two vertices")
    last = outer.n
    shift = inner.n - 1
    edges = [(u, v + shift if v == last else v) for u, v in outer.edges]
    edges.extend((u + last - 1, v + last - 1) for u, v in inner.edges)
    return OrderedGraph.unchecked(last + shift, edges)


def _f_n_layout(s: int, d: DefiningSequence, j: int, n: int) -> Tuple[OrderedGraph, List[int], List[int], List[int]]:
    gamma = _with_long_edge(union_intervally(right_star(d[j - 1] - 1), _right(s, d, j + 1)))
    head = _shared_rightmost(_right(s, d, j), _right(s, d, j + 1))
    chain_pieces = [head, *([gamma] * n), _left(s, d, j - 1)]
    chain = concatenate(*chain_pieces)
    offsets = concat_offsets(chain_pieces)
    gammas = [offsets[k] + 1 for k in range(1, n + 1)] + [offsets[n] + gamma.n]

    isolated = OrderedGraph.edgeless(d[j - 2] - d[j - 1])
    tails = [_left(s, d, j - 2)] * (s - 1)
    parts = [chain, isolated, *tails]
    positions = union_offsets(parts)
    u_vertices = [positions[1] + v for v in isolated.vertices]
    w_vertices = [positions[k] + 1 for k in range(2, len(parts))]
    graph = union_intervally(*parts)
    return graph, gammas, u_vertices, w_vertices


def build_f_n(
    h: OrderedGraph,
    d,
    j: int,
    n: int,
    verify: bool = True,
    budget: Optional[int] = None,
) -> UnavoidableConstruction:
    """
    F_n for (h, H_i(d)) when d_{j-1} > d_j for some 3 <= j <= i.

    Gamma is S_{d_j - 1} ⊔ D_{>=j+1} with its leftmost and rightmost vertices
    joined. D is D_{>=j} with a copy of D_{>=j+1} inserted between its two
    rightmost vertices, sharing the rightmost one. The chain D ∘ Gamma^n ∘
    D_{<=j-1} is followed by d_{j-1} - d_j isolated vertices U and s - 1 left
    determiners D_{<=j-2}, whose leftmost vertices form W. Finally U ∪ W is
    joined completely to the leftmost vertices of the Gamma copies.

    Returns:
        UnavoidableConstruction whose dashed edges are the chain edges
        between consecutive gamma vertices
    """
    s = _star_size(h)
    d = validate_defining_sequence(d)
    i = len(d)
    if not 3 <= j <= i:
        raise PreconditionError(f"need 3 <= j <= i, got j={j}, i={i}")
    if d[j - 2] <= d[j - 1]:
        raise PreconditionError(f"need d_(j-1) > d_j at j={j}, got {d}")
    if n < 1:
        raise PreconditionError(f"need n >= 1, got {n}")

    graph, gammas, u_vertices, w_vertices = _f_n_layout(s, d, j, n)
    graph = graph.add_edges((g, v) for g in gammas[:-1] for v in u_vertices + w_vertices)
    dashed = list(zip(gammas, gammas[1:]))
    parameters = {"s": s, "d": ",".join(map(str, d)), "j": j, "n": n}
    return _finish(
        graph,
        h,
        d,
        "unavoidable/gamma-chain",
        parameters,
        verify,
        budget,
        dashed=dashed,
        gammas=gammas,
        u_vertices=u_vertices,
        w_vertices=w_vertices,
    )
