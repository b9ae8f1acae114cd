"""
Colorings showing that no forest or pseudoforest arrows a pair (H, H').

Each case names a property of one graph of the pair and a property of the
other. The coloring built for a case has no red copy of the first kind of
pattern and no blue copy of the second, so when the pair matches the case
with its roles exchanged the colors are swapped at the end. Orientation-
dependent sub-cases are handled by mirroring host and patterns and mirroring
the coloring back.

Every result is checked with the independent copy search before it is
returned.
"""

import logging
from itertools import permutations
from typing import Callable, Dict, List, Optional, Set, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict

from ordered_ramsey.arrow.search import find_avoiding_coloring
from ordered_ramsey.colorings.basic import bend_coloring, bipartite_coloring, proper_two_coloring, star_coloring
from ordered_ramsey.colorings.coloring import Color, EdgeColoring, merge_colorings, verify_avoidance
from ordered_ramsey.core.graph import Edge, OrderedGraph, contains, embedding_masks, mirror
from ordered_ramsey.core.structure import (
    contains_mixed_three_star,
    contains_monotone_p3,
    contains_p4,
    has_non_star_component,
    is_forest,
    is_monotone_path,
    is_partial_matching,
    is_pseudoforest,
    max_left_degree,
    max_right_degree,
)
from ordered_ramsey.errors import NotApplicableError, PreconditionError, VerificationError

# Set up logging
logger = logging.getLogger(__name__)

GraphTest = Callable[[OrderedGraph], bool]
# builds a coloring of one connected component with no red `first`-kind and no blue `second`-kind copy
ComponentBuilder = Callable[[OrderedGraph, OrderedGraph, OrderedGraph], Tuple[EdgeColoring, str]]


class Refutation(BaseModel):
    """A verified avoiding coloring plus the construction steps that produced it."""

    model_config = ConfigDict(frozen=True)

    coloring: EdgeColoring
    host_class: str  # forest | pseudoforest
    case: int
    swapped: bool
    steps: List[str]


def _has_cycle(g: OrderedGraph) -> bool:
    return not is_forest(g)


def _not_partial_matching(g: OrderedGraph) -> bool:
    return not is_partial_matching(g)


def _two_right(g: OrderedGraph) -> bool:
    return max_right_degree(g) >= 2


def _two_left(g: OrderedGraph) -> bool:
    return max_left_degree(g) >= 2


# case -> (property of the graph kept out of red, property of the graph kept out of blue)
PSEUDOFOREST_CASES: Dict[int, Tuple[GraphTest, GraphTest]] = {
    1: (_has_cycle, _not_partial_matching),
    2: (_two_right, _two_left),
    3: (contains_monotone_p3, contains_p4),
    4: (contains_monotone_p3, contains_mixed_three_star),
}
FOREST_CASES: Dict[int, Tuple[GraphTest, GraphTest]] = {
    1: (has_non_star_component, has_non_star_component),
    2: (_two_right, _two_left),
    3: (contains_monotone_p3, contains_monotone_p3),
    4: (contains_monotone_p3, contains_p4),
}


def _orientation(cases: Dict[int, Tuple[GraphTest, GraphTest]], case: int, h, h2) -> Optional[bool]:
    """False when (h, h2) matches the case as stated, True when it matches with roles exchanged."""
    if case not in cases:
        raise PreconditionError(f"unknown case {case}; expected one of {sorted(cases)}")
    first, second = cases[case]
    if first(h) and second(h2):
        return False
    if first(h2) and second(h):
        return True
    return None


def applicable_pseudoforest_cases(h: OrderedGraph, h2: OrderedGraph) -> List[int]:
    return [c for c in PSEUDOFOREST_CASES if _orientation(PSEUDOFOREST_CASES, c, h, h2) is not None]


def applicable_forest_cases(h: OrderedGraph, h2: OrderedGraph) -> List[int]:
    return [c for c in FOREST_CASES if _orientation(FOREST_CASES, c, h, h2) is not None]


def _cycle_edges(c: OrderedGraph) -> List[Edge]:
    try:
        cycle = nx.find_cycle(c.to_networkx())
    except nx.NetworkXNoCycle:
        return []
    return sorted((min(x, y), max(x, y)) for x, y in cycle)


def _cycle_vertices(edges: List[Edge]) -> List[int]:
    return sorted({v for e in edges for v in e})


def _bipartite_or_none(c: OrderedGraph) -> Optional[EdgeColoring]:
    partition = proper_two_coloring(c)
    return bipartite_coloring(c, partition) if partition is not None else None


def _red_left_in(edges, part_a: Set[int]) -> Set[Edge]:
    return {e for e in edges if e[0] in part_a}


def _per_component(f: OrderedGraph, first, second, build: ComponentBuilder, steps: List[str]) -> EdgeColoring:
    parts, offsets = [], []
    for comp in f.components():
        if len(comp) < 2:
            continue
        coloring, step = build(f.induced(comp), first, second)
        parts.append(coloring)
        offsets.append({i: v for i, v in enumerate(comp, 1)})
        steps.append(f"component {comp[0]}..{comp[-1]}: {step}")
    return merge_colorings(f, parts, offsets)


# pseudoforest case 1


def _one_edge_per_cycle(f: OrderedGraph, steps: List[str]) -> EdgeColoring:
    blue = set()
    for comp in f.components():
        cycle = _cycle_edges(f.induced(comp))
        if cycle:
            u, v = cycle[0]
            blue.add((comp[u - 1], comp[v - 1]))
    steps.append(f"one edge per cycle blue ({len(blue)} cycles), all other edges red")
    return EdgeColoring(host=f, red=f.edges - blue)


# pseudoforest case 2


def _peel_and_alternate(f: OrderedGraph, steps: List[str]) -> EdgeColoring:
    """Red iff the peeled leaf is the left endpoint; leftover cycles alternate."""
    adj = {v: set(nbrs) for v, nbrs in f.adjacency.items()}
    red: Set[Edge] = set()
    leaves = sorted(v for v in adj if len(adj[v]) == 1)
    peeled = 0
    while leaves:
        v = leaves.pop(0)
        if len(adj[v]) != 1:
            continue
        (u,) = adj[v]
        if v < u:
            red.add((v, u))
        adj[v].clear()
        adj[u].discard(v)
        peeled += 1
        if len(adj[u]) == 1:
            leaves.append(u)
            leaves.sort()
    cycles = 0
    for start in sorted(adj):
        if len(adj[start]) != 2:
            continue
        walk = [start]
        prev, cur = start, min(adj[start])
        while cur != start:
            walk.append(cur)
            (nxt,) = adj[cur] - {prev}
            prev, cur = cur, nxt
        walk_edges = [(min(a, b), max(a, b)) for a, b in zip(walk, walk[1:] + walk[:1])]
        for a in walk:
            adj[a].clear()
        cycles += 1
        if len(walk_edges) % 2 == 0:
            red.update(e for i, e in enumerate(walk_edges) if i % 2 == 0)
        else:
            # walk starts at the leftmost cycle vertex, so its two edges are first and last
            red.update(e for i, e in enumerate(walk_edges[1:-1]) if i % 2 == 0)
    steps.append(f"peeled {peeled} leaves, alternated {cycles} cycles")
    return EdgeColoring(host=f, red=frozenset(red))


# pseudoforest case 3


def _p4_patterns() -> List[OrderedGraph]:
    seen = []
    for order in permutations(range(1, 5)):
        g = OrderedGraph(n=4, edges=list(zip(order, order[1:])))
        if g not in seen:
            seen.append(g)
    return seen


def _p4_kind(p: OrderedGraph) -> str:
    """monotone | right-end | left-end | zigzag, by the monotone P3s inside an ordered P4."""
    if is_monotone_path(p):
        return "monotone"
    middles = [y for y in p.vertices if p.left_neighbors(y) and p.right_neighbors(y)]
    if any(len(p.left_neighbors(z)) >= 2 for y in middles for z in p.right_neighbors(y)):
        return "right-end"
    if any(len(p.right_neighbors(x)) >= 2 for y in middles for x in p.left_neighbors(y)):
        return "left-end"
    return "zigzag"


_KIND_ORDER = ("monotone", "right-end", "left-end", "zigzag")
P4_PATTERNS = sorted(_p4_patterns(), key=lambda p: (_KIND_ORDER.index(_p4_kind(p)), p.edge_list))


def _choose_p4(g: OrderedGraph) -> OrderedGraph:
    for p in P4_PATTERNS:
        if contains(g, p):
            return p
    raise NotApplicableError("graph contains no ordered P4")


def _anchored_partition(rest: OrderedGraph, context: str, anchors_b, anchors_a=()) -> Set[int]:
    """Side A of a proper 2-coloring of rest with the given anchors; the caller guarantees one exists."""
    partition = proper_two_coloring(rest, anchors_b=anchors_b, anchors_a=anchors_a)
    if partition is None:
        raise VerificationError(f"{context}: no anchored proper 2-coloring of {rest}")
    return partition[0]


def _monotone_p4_component(c: OrderedGraph, first, second) -> Tuple[EdgeColoring, str]:
    coloring = _bipartite_or_none(c)
    if coloring is not None:
        return coloring, "bipartite coloring"
    e = _cycle_edges(c)[0]
    rest = c.delete_edge(*e)
    part_a = _anchored_partition(rest, "monotone P4 component", anchors_b=[e[0]])
    return EdgeColoring(host=c, red=frozenset(_red_left_in(rest.edges, part_a))), (
        f"odd-cycle edge {e} blue with both ends in B, rest bipartite"
    )


def _monotone_reach(c: OrderedGraph, u: int) -> Set[int]:
    reach, frontier = {u}, [u]
    while frontier:
        x = frontier.pop()
        for y in c.right_neighbors(x):
            if y not in reach:
                reach.add(y)
                frontier.append(y)
    return reach


def _complete_with_search(c: OrderedGraph, first, second, fixed: Dict[Edge, Color]) -> EdgeColoring:
    red_masks = embedding_masks(c, first)
    blue_masks = embedding_masks(c, second)
    found, _ = find_avoiding_coloring(c, red_masks, blue_masks, fixed=fixed)
    if found is None:
        found, _ = find_avoiding_coloring(c, red_masks, blue_masks)
    if found is None:
        raise VerificationError(f"no avoiding coloring exists for component {c}")
    return EdgeColoring.from_mask(c, found)


def _right_end_component(c: OrderedGraph, first, second) -> Tuple[EdgeColoring, str]:
    coloring = _bipartite_or_none(c)
    if coloring is not None:
        return coloring, "bipartite coloring"
    cycle = _cycle_edges(c)
    v = max(_cycle_vertices(cycle))
    u = max(x for x, y in cycle if y == v)
    reach = _monotone_reach(c, u)
    tree = {e for e in c.edges if e[0] in reach}
    rest = c.spanning(c.edges - tree)
    partition = proper_two_coloring(rest, anchors_b=reach)
    if partition is not None:
        red = _red_left_in(rest.edges, partition[0])
        return EdgeColoring(host=c, red=frozenset(red)), f"monotone paths from {u} blue, rest bipartite"
    # the anchored bipartition can fail when the tree holds both ends of an odd path of the rest
    logger.info(f"Anchored bipartition infeasible on {c}; completing the rest by search")
    coloring = _complete_with_search(c, first, second, {e: Color.BLUE for e in tree})
    return coloring, f"monotone paths from {u} blue, rest completed by search"


def _left_end_component(c: OrderedGraph, first, second) -> Tuple[EdgeColoring, str]:
    coloring, step = _right_end_component(mirror(c), mirror(first), mirror(second))
    return coloring.mirrored(), f"mirrored: {step}"


def _zigzag_component(c: OrderedGraph, first, second) -> Tuple[EdgeColoring, str]:
    cycle = _cycle_edges(c)
    if not cycle:
        return bend_coloring(c, 1), "bend coloring from 1"
    u = min(_cycle_vertices(cycle))
    v = min(y for x, y in cycle if x == u)
    tree = c.delete_edge(u, v)
    bent = bend_coloring(tree, v)
    return EdgeColoring(host=c, red=bent.red | {(u, v)}), f"edge {u}-{v} red, bend coloring from {v}"


_P4_BUILDERS: Dict[str, ComponentBuilder] = {
    "monotone": _monotone_p4_component,
    "right-end": _right_end_component,
    "left-end": _left_end_component,
    "zigzag": _zigzag_component,
}


# pseudoforest case 4


def _three_star_component(c: OrderedGraph, first, second) -> Tuple[EdgeColoring, str]:
    """Second has a center with one left and two right neighbors."""
    coloring = _bipartite_or_none(c)
    if coloring is not None:
        return coloring, "bipartite coloring"
    cycle = _cycle_edges(c)
    vertices = _cycle_vertices(cycle)
    opening = [x for x in vertices if sum(1 for a, b in cycle if a == x) == 2]
    rest = c.spanning(c.edges - set(cycle))
    part_a = _anchored_partition(
        rest, "three-star component", anchors_b=opening, anchors_a=[x for x in vertices if x not in opening]
    )
    return EdgeColoring(host=c, red=frozenset(_red_left_in(rest.edges, part_a))), "cycle blue, rest bipartite"


def _one_left_two_right(g: OrderedGraph) -> bool:
    return any(len(g.left_neighbors(v)) >= 1 and len(g.right_neighbors(v)) >= 2 for v in g.vertices)


def _mirrored_builder(build: ComponentBuilder) -> ComponentBuilder:
    def wrapped(c, first, second):
        coloring, step = build(mirror(c), mirror(first), mirror(second))
        return coloring.mirrored(), f"mirrored: {step}"

    return wrapped


def _build_pseudoforest_case(f: OrderedGraph, first, second, case: int, steps: List[str]) -> EdgeColoring:
    if case == 1:
        return _one_edge_per_cycle(f, steps)
    if case == 2:
        return _peel_and_alternate(f, steps)
    if case == 3:
        p = _choose_p4(second)
        kind = _p4_kind(p)
        steps.append(f"ordered P4 {p} of kind {kind}")
        return _per_component(f, first, second, _P4_BUILDERS[kind], steps)
    if _one_left_two_right(second):
        return _per_component(f, first, second, _three_star_component, steps)
    return _per_component(f, first, second, _mirrored_builder(_three_star_component), steps)


def pseudoforest_refutation(f: OrderedGraph, h: OrderedGraph, h2: OrderedGraph, case: int) -> Refutation:
    """
    Color a pseudoforest with no red H and no blue H' using the given case.

    Cases: (1) one graph has a cycle and the other is not a partial matching;
    (2) one has a vertex with two right neighbors, the other one with two left
    neighbors; (3) one contains a monotone P3 and the other an ordered P4;
    (4) one contains a monotone P3 and the other a three-edge star that is
    neither a left nor a right star.

    Raises:
        PreconditionError: If f is not a pseudoforest
        NotApplicableError: If (h, h2) does not match the case
    """
    if not is_pseudoforest(f):
        raise PreconditionError(f"{f} is not a pseudoforest")
    swapped = _orientation(PSEUDOFOREST_CASES, case, h, h2)
    if swapped is None:
        raise NotApplicableError(f"pseudoforest case {case} does not apply to ({h}, {h2})")
    first, second = (h2, h) if swapped else (h, h2)
    steps: List[str] = []
    coloring = _build_pseudoforest_case(f, first, second, case, steps)
    if swapped:
        coloring = coloring.swapped()
        steps.append("colors swapped")
    verify_avoidance(coloring, h, h2, f"pseudoforest case {case}")
    logger.info(f"Refuted {f} with pseudoforest case {case}")
    return Refutation(coloring=coloring, host_class="pseudoforest", case=case, swapped=swapped, steps=steps)


def forest_refutation(f: OrderedGraph, h: OrderedGraph, h2: OrderedGraph, case: int) -> Refutation:
    """
    Color a forest with no red H and no blue H' using the given case.

    Cases: (1) both graphs have a component that is not a star; (2) as
    pseudoforest case 2; (3) both contain a monotone P3; (4) as pseudoforest
    case 3.

    Raises:
        PreconditionError: If f is not a forest
        NotApplicableError: If (h, h2) does not match the case
    """
    if not is_forest(f):
        raise PreconditionError(f"{f} is not a forest")
    swapped = _orientation(FOREST_CASES, case, h, h2)
    if swapped is None:
        raise NotApplicableError(f"forest case {case} does not apply to ({h}, {h2})")
    first, second = (h2, h) if swapped else (h, h2)
    steps: List[str] = []
    if case == 1:
        coloring = star_coloring(f, 1) if f.n else EdgeColoring(host=f)
        steps.append("star coloring of every component from its leftmost vertex")
    elif case == 2:
        coloring = _build_pseudoforest_case(f, first, second, 2, steps)
    elif case == 3:
        coloring = bipartite_coloring(f, proper_two_coloring(f))
        steps.append("bipartite coloring")
    else:
        coloring = _build_pseudoforest_case(f, first, second, 3, steps)
    if swapped:
        coloring = coloring.swapped()
        steps.append("colors swapped")
    verify_avoidance(coloring, h, h2, f"forest case {case}")
    logger.info(f"Refuted {f} with forest case {case}")
    return Refutation(coloring=coloring, host_class="forest", case=case, swapped=swapped, steps=steps)


def refute_pseudoforest(f: OrderedGraph, h: OrderedGraph, h2: OrderedGraph, case: int) -> EdgeColoring:
    return pseudoforest_refutation(f, h, h2, case).coloring


def refute_forest(f: OrderedGraph, h: OrderedGraph, h2: OrderedGraph, case: int) -> EdgeColoring:
    return forest_refutation(f, h, h2, case).coloring
