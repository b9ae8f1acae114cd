"""
The three basic colorings: star, bipartite and bend.

- star_coloring: an edge is red iff its distance to the root is odd, so every
  monochromatic component is a star and the root's edges are red.
- bipartite_coloring: an edge is red iff its left endpoint lies in A; for a
  proper 2-coloring (A, B) there is no monochromatic monotone P3.
- bend_coloring: on a tree, an edge is red iff its right endpoint is the root
  or it forms a bend with the next edge towards the root; there is no red
  monotone P3 and every blue component is one-sided.
"""

import logging
from typing import Dict, Iterable, Optional, Set, Tuple

import networkx as nx

from ordered_ramsey.colorings.coloring import EdgeColoring
from ordered_ramsey.core.graph import OrderedGraph
from ordered_ramsey.core.structure import is_forest
from ordered_ramsey.errors import PreconditionError

# Set up logging
logger = logging.getLogger(__name__)


def star_coloring(f: OrderedGraph, u: int, roots: Optional[Iterable[int]] = None) -> EdgeColoring:
    """
    Color by parity of edge distance to a root in each component.

    The distance of an edge is the number of edges on a shortest path that
    starts at the root and ends with that edge, so edges at the root have
    distance 1.

    Args:
        f: Host graph
        u: Root of u's component
        roots: Optional roots for other components (default: their leftmost vertex)

    Returns:
        EdgeColoring of f
    """
    if u not in f.vertices:
        raise PreconditionError(f"root {u} is not a vertex of the host")
    graph = f.to_networkx()
    chosen = {u, *(roots or ())}
    red = set()
    for comp in f.components():
        members = set(comp)
        comp_roots = members & chosen
        root = min(comp_roots) if comp_roots else comp[0]
        dist = nx.single_source_shortest_path_length(graph, root)
        for x, y in f.edges:
            if x in members and (min(dist[x], dist[y]) + 1) % 2 == 1:
                red.add((x, y))
    return EdgeColoring(host=f, red=frozenset(red))


def bipartite_coloring(f: OrderedGraph, partition: Tuple[Iterable[int], Iterable[int]]) -> EdgeColoring:
    """Red iff the left endpoint is in A. The partition need not be proper."""
    part_a, part_b = set(partition[0]), set(partition[1])
    if part_a & part_b or part_a | part_b != set(f.vertices):
        raise PreconditionError("partition must split the vertex set into two disjoint parts")
    return EdgeColoring(host=f, red=frozenset(e for e in f.edges if e[0] in part_a))


def proper_two_coloring(
    f: OrderedGraph,
    anchors_b: Iterable[int] = (),
    anchors_a: Iterable[int] = (),
) -> Optional[Tuple[Set[int], Set[int]]]:
    """
    Breadth-first proper 2-coloring of a bipartite graph.

    Each component is seeded from its leftmost anchor when it has one, and
    from its leftmost vertex (placed in A) otherwise.

    Args:
        f: Graph to split
        anchors_b: Vertices required in B
        anchors_a: Vertices required in A

    Returns:
        (A, B), or None when f is not bipartite or the anchors conflict
    """
    graph = f.to_networkx()
    wanted = {v: 0 for v in anchors_a}
    for v in anchors_b:
        if wanted.get(v) == 0:
            return None
        wanted[v] = 1
    side: Dict[int, int] = {}
    for comp in f.components():
        members = set(comp)
        comp_anchors = sorted(members & wanted.keys())
        start = comp_anchors[0] if comp_anchors else comp[0]
        side[start] = wanted.get(start, 0)
        for parent, child in nx.bfs_edges(graph, start):
            side[child] = 1 - side[parent]
        if any(side[x] == side[y] for x, y in f.edges if x in members):
            return None
        if any(side[a] != wanted[a] for a in comp_anchors):
            return None
    part_a = {v for v, s in side.items() if s == 0}
    return part_a, set(f.vertices) - part_a


def _forms_bend(common: int, a: int, b: int) -> bool:
    """Edges common-a and common-b form a bend when the shared vertex is not the middle one."""
    return common < min(a, b) or common > max(a, b)


def bend_coloring(f: OrderedGraph, u: int) -> EdgeColoring:
    """
    Bend coloring of a tree with respect to u.

    Raises:
        PreconditionError: If f is not a tree or u is not a vertex
    """
    if u not in f.vertices:
        raise PreconditionError(f"root {u} is not a vertex of the host")
    if not (f.is_connected() and is_forest(f)):
        raise PreconditionError("bend coloring requires a tree")
    parent = dict(nx.bfs_predecessors(f.to_networkx(), u))
    red = set()
    for x, y in f.edges:
        if y == u:
            red.add((x, y))
            continue
        child, near = (x, y) if parent.get(x) == y else (y, x)
        if near != u and _forms_bend(near, child, parent[near]):
            red.add((x, y))
    return EdgeColoring(host=f, red=frozenset(red))
