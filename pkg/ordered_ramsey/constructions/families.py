"""
Finite families of Ramsey graphs and the canonical refuting coloring.

- family_Fst: unions of minimal Ramsey graphs F_i^j of (H_i, H'_j) laid out on
  a grid, F_i^j strictly left of F_i^{j+1} and of F_{i+1}^j. Every minimal
  Ramsey graph of (H_1 ⊔ ... ⊔ H_s, H'_1 ⊔ ... ⊔ H'_t) is such a union.
- family_Fj: for a right star S_s and a right caterpillar H_i(d), level 1 is
  S_{s+d_1-1} and a level-j member is a vertex u with d_j - 1 leaves followed
  by s level-(j-1) members F_1, ..., F_s whose leftmost vertices are distinct,
  increasing and adjacent to u.
- canonical_h_coloring: the coloring of a host without level-i members that
  has no red S_s and no blue H_i(d).

Blocks may share vertices. The overlapping layouts are enumerated position by
position: each new host vertex takes the next vertex of one or more blocks, at
most one per block. The number of placement steps is bounded and a truncated
enumeration is flagged incomplete.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from itertools import combinations, product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Set, Tuple

from pydantic import BaseModel, ConfigDict

from ordered_ramsey.arrow.search import arrows, find_avoiding_coloring
from ordered_ramsey.colorings.coloring import EdgeColoring, verify_avoidance
from ordered_ramsey.config import FAMILY_PLACEMENT_BUDGET, VERIFY_EDGE_LIMIT
from ordered_ramsey.constructions.combinators import build_caterpillar, caterpillar_prefix, right_star, union_intervally
from ordered_ramsey.core.graph import Edge, Embedding, OrderedGraph, embedding_masks
from ordered_ramsey.core.structure import DefiningSequence, validate_defining_sequence
from ordered_ramsey.errors import (
    BudgetExceededError,
    HypothesisViolationError,
    PreconditionError,
    VerificationError,
)

# Set up logging
logger = logging.getLogger(__name__)

# block index, started blocks' pointers -> may the block place its first vertex now
StartRule = Callable[[int, Sequence[int]], bool]


class FamilyResult(BaseModel):
    """Members found, in a fixed order, and whether the overlap enumeration ran to the end."""

    model_config = ConfigDict(frozen=True)

    members: List[OrderedGraph]
    complete: bool = True
    placements: int = 0


class _Layout(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph: OrderedGraph
    starts: Tuple[int, ...]


def _sort_key(g: OrderedGraph) -> Tuple[int, int, str]:
    return g.n, g.num_edges, str(g)


def _merge_blocks(blocks: Sequence[OrderedGraph], may_start: StartRule, budget: int) -> Tuple[List[_Layout], bool, int]:
    """
    Every layout of the blocks on one vertex line with shared vertices allowed.

    Returns:
        (distinct layouts, complete flag, placement steps used)
    """
    sizes = [b.n for b in blocks]
    pointers = [0] * len(blocks)
    positions: List[List[int]] = [[] for _ in blocks]
    found: Dict[_Layout, None] = {}
    steps = 0

    def layout(count: int) -> _Layout:
        edges = set()
        for b, block in enumerate(blocks):
            edges.update((positions[b][u - 1], positions[b][v - 1]) for u, v in block.edges)
        return _Layout(graph=OrderedGraph.unchecked(count, edges), starts=tuple(p[0] for p in positions))

    def place(count: int) -> None:
        nonlocal steps
        if pointers == sizes:
            found.setdefault(layout(count), None)
            return
        eligible = [
            b for b in range(len(blocks)) if pointers[b] < sizes[b] and (pointers[b] > 0 or may_start(b, pointers))
        ]
        for size in range(1, len(eligible) + 1):
            for chosen in combinations(eligible, size):
                steps += 1
                if steps > budget:
                    raise BudgetExceededError(f"overlap enumeration stopped after {budget} placements", nodes=steps)
                for b in chosen:
                    pointers[b] += 1
                    positions[b].append(count + 1)
                place(count + 1)
                for b in chosen:
                    pointers[b] -= 1
                    positions[b].pop()

    complete = True
    try:
        place(0)
    except BudgetExceededError:
        complete = False
    return list(found), complete, min(steps, budget)


def _grid_start_rule(cols: int, sizes: Sequence[int], b: int, pointers: Sequence[int]) -> bool:
    """Block (i, j) starts only once (i-1, j) and (i, j-1) are fully placed."""
    i, j = divmod(b, cols)
    above = i == 0 or pointers[b - cols] == sizes[b - cols]
    before = j == 0 or pointers[b - 1] == sizes[b - 1]
    return above and before


def _merge_grid_choice(cols: int, budget: int, choice: Tuple[OrderedGraph, ...]) -> Tuple[List[OrderedGraph], bool, int]:
    sizes = [g.n for g in choice]
    rule = partial(_grid_start_rule, cols, sizes)
    layouts, complete, steps = _merge_blocks(choice, rule, budget)
    return [lay.graph for lay in layouts], complete, steps


def _verify_members(members: Sequence[OrderedGraph], h: OrderedGraph, h2: OrderedGraph, budget: Optional[int]) -> None:
    for g in members:
        if g.num_edges > VERIFY_EDGE_LIMIT:
            continue
        try:
            cert = arrows(g, h, h2, budget=budget)
        except BudgetExceededError:
            logger.warning(f"Family member {g} left unverified by the budget")
            continue
        if not cert.arrows:
            raise VerificationError(f"family member {g} does not arrow ({h}, {h2})")


def family_Fst(
    grid: Sequence[Sequence[Sequence[OrderedGraph]]],
    interleavings: int = FAMILY_PLACEMENT_BUDGET,
    h_parts: Optional[Sequence[OrderedGraph]] = None,
    h2_parts: Optional[Sequence[OrderedGraph]] = None,
    budget: Optional[int] = None,
    threads: int = 1,
) -> FamilyResult:
    """
    Unions of one minimal Ramsey graph per grid cell respecting the block order.

    Args:
        grid: grid[i][j] lists the minimal Ramsey graphs of (H_{i+1}, H'_{j+1})
        interleavings: Placement-step bound per choice of one graph per cell
        h_parts: H_1, ..., H_s; with h2_parts, members are checked to arrow the unions
        h2_parts: H'_1, ..., H'_t
        budget: Node budget for each arrow check
        threads: Worker processes over the choices of one graph per cell

    Returns:
        FamilyResult with members sorted by size and text form

    Raises:
        VerificationError: If a checked member does not arrow the pair
    """
    rows = len(grid)
    cols = len(grid[0]) if rows else 0
    if not rows or not cols or any(len(row) != cols for row in grid):
        raise PreconditionError("grid must be a nonempty rectangle")
    if any(not cell for row in grid for cell in row):
        raise PreconditionError("every grid cell needs at least one minimal Ramsey graph")
    choices = list(product(*(cell for row in grid for cell in row)))
    logger.info(f"Enumerating unions on a {rows}x{cols} grid over {len(choices)} cell choices")

    worker = partial(_merge_grid_choice, cols, interleavings)
    if threads > 1 and len(choices) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(worker, choices))
    else:
        outcomes = [worker(choice) for choice in choices]

    members: Set[OrderedGraph] = set()
    complete, placements = True, 0
    for found, done, steps in outcomes:
        members.update(found)
        complete = complete and done
        placements += steps
    if not complete:
        logger.warning(f"Union enumeration truncated; {len(members)} members found so far")
    ordered = sorted(members, key=_sort_key)
    if h_parts is not None and h2_parts is not None:
        _verify_members(ordered, union_intervally(*h_parts), union_intervally(*h2_parts), budget)
    return FamilyResult(members=ordered, complete=complete, placements=placements)


def _nondecreasing(d: DefiningSequence) -> bool:
    return all(a <= b for a, b in zip(d, d[1:]))


def _require_family_hypothesis(d: DefiningSequence) -> None:
    if len(d) > 2 and not _nondecreasing(d):
        raise PreconditionError(f"the family needs i <= 2 or a nondecreasing defining sequence, got {d}")


def _pointed_start_rule(b: int, pointers: Sequence[int]) -> bool:
    """F_{t+1} places its leftmost vertex strictly after F_t placed its own."""
    return b == 0 or pointers[b - 1] > 0


def _pointed_members(s: int, leaves: int, previous: Sequence[OrderedGraph], budget: int) -> Tuple[List[OrderedGraph], bool, int]:
    members: Dict[OrderedGraph, None] = {}
    complete, placements = True, 0
    for choice in product(previous, repeat=s):
        layouts, done, steps = _merge_blocks(choice, _pointed_start_rule, budget)
        complete = complete and done
        placements += steps
        shift = leaves + 1
        for lay in layouts:
            edges: List[Edge] = [(u + shift, v + shift) for u, v in lay.graph.edges]
            edges.extend((1, v) for v in range(2, leaves + 2))
            edges.extend((1, start + shift) for start in lay.starts)
            members.setdefault(OrderedGraph.unchecked(lay.graph.n + shift, edges), None)
    return list(members), complete, placements


def _anchored_arrow(g: OrderedGraph, s: int, target: OrderedGraph, budget: Optional[int]) -> bool:
    """Every coloring without a red S_s has a blue target copy through vertex 1."""
    red_masks = embedding_masks(g, right_star(s))
    blue_masks = embedding_masks(g, target, fixed={1: 1})
    found, _ = find_avoiding_coloring(g, red_masks, blue_masks, budget=budget)
    return found is None


def family_Fj(
    s: int,
    d,
    interleavings: int = FAMILY_PLACEMENT_BUDGET,
    verify: bool = True,
    budget: Optional[int] = None,
) -> List[FamilyResult]:
    """
    Levels 1..i of the pointed-union family for (S_s, H_i(d)).

    Args:
        s: Number of edges of the right star
        d: Defining sequence, d[0] = d_1
        interleavings: Placement-step bound per choice of F_1, ..., F_s
        verify: Check the anchored arrow property on members with at most
            VERIFY_EDGE_LIMIT edges
        budget: Node budget for each check

    Returns:
        One FamilyResult per level; a level built from a truncated level is
        itself flagged incomplete

    Raises:
        PreconditionError: If i > 2 and d is not nondecreasing
        VerificationError: If a checked member lacks the anchored arrow property
    """
    d = validate_defining_sequence(d)
    if s < 1:
        raise PreconditionError(f"the star needs at least one edge, got s={s}")
    _require_family_hypothesis(d)
    levels = [FamilyResult(members=[right_star(s + d[0] - 1)])]
    for j in range(2, len(d) + 1):
        previous = levels[-1]
        found, done, steps = _pointed_members(s, d[j - 1] - 1, previous.members, interleavings)
        complete = done and previous.complete
        if not complete:
            logger.warning(f"Level {j} of the pointed-union family is incomplete")
        logger.info(f"Level {j}: {len(found)} members after {steps} placements")
        levels.append(FamilyResult(members=sorted(found, key=_sort_key), complete=complete, placements=steps))

    if verify:
        for j, level in enumerate(levels, 1):
            target = caterpillar_prefix(d, j)
            for g in level.members:
                if g.num_edges <= VERIFY_EDGE_LIMIT and not _anchored_arrow(g, s, target, budget):
                    raise VerificationError(f"level {j} member {g} has a coloring without the anchored blue copy")
    return levels


def leftmost_levels(f: OrderedGraph, s: int, d: DefiningSequence) -> List[Set[int]]:
    """
    D_0, ..., D_i: D_j holds the vertices of f that are leftmost in a copy of a
    level-j family member (D_0 is every vertex).

    u is in D_1 iff it has at least s + d_1 - 1 right neighbors. For j >= 2, u
    is in D_j iff it has s right neighbors in D_{j-1} with at least d_j - 1
    further right neighbors left of all of them; taking the s rightmost such
    neighbors is optimal.
    """
    levels = [set(f.vertices)]
    levels.append({u for u in f.vertices if len(f.right_neighbors(u)) >= s + d[0] - 1})
    for j in range(2, len(d) + 1):
        below = levels[-1]
        current = set()
        for u in f.vertices:
            right = f.right_neighbors(u)
            anchors = [v for v in right if v in below]
            if len(anchors) >= s and sum(1 for v in right if v < anchors[-s]) >= d[j - 1] - 1:
                current.add(u)
        levels.append(current)
    return levels


def _member_edges(f: OrderedGraph, s: int, d: DefiningSequence, levels: List[Set[int]], u: int, j: int) -> Set[Edge]:
    right = f.right_neighbors(u)
    if j == 1:
        return {(u, v) for v in right[: s + d[0] - 1]}
    anchors = [v for v in right if v in levels[j - 1]][-s:]
    leaves = [v for v in right if v < anchors[0]][: d[j - 1] - 1]
    edges = {(u, v) for v in leaves + anchors}
    for v in anchors:
        edges |= _member_edges(f, s, d, levels, v, j - 1)
    return edges


def find_family_member(f: OrderedGraph, s: int, d) -> Optional[Tuple[OrderedGraph, Embedding]]:
    """A level-i family member contained in f and its embedding, if any."""
    d = validate_defining_sequence(d)
    levels = leftmost_levels(f, s, d)
    if not levels[-1]:
        return None
    edges = _member_edges(f, s, d, levels, min(levels[-1]), len(d))
    used = sorted({v for e in edges for v in e})
    member = f.spanning(edges).induced(used)
    return member, Embedding(mapping=tuple(used))


def _height_coloring(f: OrderedGraph, d: DefiningSequence, levels: List[Set[int]]) -> EdgeColoring:
    height = {u: max(j for j, level in enumerate(levels) if u in level) for u in f.vertices}
    red = set()
    for u, v in f.edges:
        between = sum(1 for z in f.right_neighbors(u) if z < v)
        if height[u] <= height[v] and between >= d[height[u]] - 1:
            red.add((u, v))
    return EdgeColoring(host=f, red=frozenset(red))


def _three_step_coloring(f: OrderedGraph, s: int, d: DefiningSequence, levels: List[Set[int]]) -> EdgeColoring:
    red = set()
    for u in f.vertices:
        right = f.right_neighbors(u)
        chosen = [v for k, v in enumerate(right) if v in levels[1] and k >= d[1] - 1]
        quota = min(s - 1, len(right))
        for v in right:
            if len(chosen) >= quota:
                break
            if v not in chosen:
                chosen.append(v)
        red.update((u, v) for v in chosen)
    return EdgeColoring(host=f, red=frozenset(red))


def canonical_h_coloring(f: OrderedGraph, s: int, d, method: str = "auto") -> EdgeColoring:
    """
    Coloring of f without a red S_s or a blue H_i(d).

    Args:
        f: Host without a level-i family member
        s: Number of edges of the right star
        d: Defining sequence; i <= 2 or nondecreasing
        method: "height" colors uv red iff h(u) <= h(v) and u has at least
            d_{h(u)+1} - 1 neighbors between u and v; "three-step" is the
            i = 2 coloring; "auto" picks height for nondecreasing d

    Returns:
        The coloring, checked by the independent copy search

    Raises:
        HypothesisViolationError: If f contains a level-i member; the witness
            is the (member, embedding) pair
        VerificationError: If the coloring has a forbidden copy
    """
    d = validate_defining_sequence(d)
    if s < 1:
        raise PreconditionError(f"the star needs at least one edge, got s={s}")
    _require_family_hypothesis(d)
    if method == "auto":
        method = "height" if _nondecreasing(d) else "three-step"
    if method not in ("height", "three-step"):
        raise PreconditionError(f"unknown coloring method {method!r}")
    if method == "three-step" and len(d) != 2:
        raise PreconditionError("the three-step coloring needs a caterpillar with two segments")
    if method == "height" and not _nondecreasing(d):
        raise PreconditionError(f"the height coloring needs a nondecreasing defining sequence, got {d}")

    witness = find_family_member(f, s, d)
    if witness is not None:
        member, embedding = witness
        raise HypothesisViolationError(f"host contains the family member {member} at {embedding.mapping}", witness=witness)
    levels = leftmost_levels(f, s, d)
    if method == "height":
        coloring = _height_coloring(f, d, levels)
    else:
        coloring = _three_step_coloring(f, s, d, levels)
    logger.info(f"{method} coloring of {f}: {len(coloring.red)} red, {len(coloring.blue)} blue")
    return verify_avoidance(coloring, right_star(s), build_caterpillar(d), f"{method} canonical coloring")
