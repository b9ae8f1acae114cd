"""
Arrow relation search: does every red/blue coloring of F contain a red H or a blue H'?

The copies of H and H' in F are precomputed once as bitmasks over F's sorted
edge list. A copy of H is a clause "some edge of this mask is blue", a copy of
H' is a clause "some edge of this mask is red", and the search looks for an
assignment satisfying every clause (an avoiding coloring). It branches on the
edge occurring in the most live clauses and propagates:

- unit: a copy with all edges but one colored its forbidden color forces the
  last edge to the other color;
- dominance: an uncolored edge lying in no live H-copy can be red and one lying
  in no live H'-copy can be blue without losing any solution.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from itertools import chain
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from ordered_ramsey.colorings.coloring import Color, EdgeColoring, avoids, verify_avoidance
from ordered_ramsey.config import get_node_budget
from ordered_ramsey.core.graph import Edge, OrderedGraph, embedding_masks
from ordered_ramsey.errors import BudgetExceededError, PreconditionError

# Set up logging
logger = logging.getLogger(__name__)

NAIVE_EDGE_LIMIT = 20

# (red, blue, live H-copies, live H'-copies)
_State = Tuple[int, int, List[int], List[int]]


class ArrowVerdict(str, Enum):
    ARROWS = "ARROWS"
    NOT_ARROWS = "NOT_ARROWS"


class ArrowCertificate(BaseModel):
    """Outcome of an arrow search; witness is present iff the verdict is NOT_ARROWS."""

    model_config = ConfigDict(frozen=True)

    verdict: ArrowVerdict
    witness: Optional[EdgeColoring] = None
    nodes: int = 0
    propagations: int = 0

    @property
    def arrows(self) -> bool:
        return self.verdict is ArrowVerdict.ARROWS


class SearchStats(BaseModel):
    nodes: int = 0
    propagations: int = 0


class _ClauseSearch:
    """Backtracking search over edge colors with unit propagation and a node budget."""

    def __init__(
        self,
        num_edges: int,
        red_masks: Sequence[int],
        blue_masks: Sequence[int],
        budget: int,
        dominance: bool = True,
    ):
        self.full = (1 << num_edges) - 1
        self.red_masks = list(red_masks)
        self.blue_masks = list(blue_masks)
        self.budget = budget
        self.dominance = dominance
        self.nodes = 0
        self.propagations = 0

    @property
    def stats(self) -> SearchStats:
        return SearchStats(nodes=self.nodes, propagations=self.propagations)

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"node budget of {self.budget} exhausted", nodes=self.nodes, partial=self.stats
            )

    def propagate(self, red: int, blue: int, live_red: List[int], live_blue: List[int]) -> Optional[_State]:
        """Close the partial coloring under the propagation rules; None on conflict."""
        while True:
            changed = False
            still_red = []
            for mask in live_red:
                if mask & blue:
                    continue
                free = mask & ~red
                if not free:
                    return None
                if free & (free - 1) == 0:
                    blue |= free
                    changed = True
                    self.propagations += 1
                else:
                    still_red.append(mask)
            still_blue = []
            for mask in live_blue:
                if mask & red:
                    continue
                free = mask & ~blue
                if not free:
                    return None
                if free & (free - 1) == 0:
                    red |= free
                    changed = True
                    self.propagations += 1
                else:
                    still_blue.append(mask)
            live_red, live_blue = still_red, still_blue
            if self.dominance and not changed:
                unset = self.full & ~(red | blue)
                in_red = 0
                for mask in live_red:
                    in_red |= mask
                in_blue = 0
                for mask in live_blue:
                    in_blue |= mask
                to_red = unset & ~in_red
                to_blue = unset & in_red & ~in_blue
                if to_red or to_blue:
                    red |= to_red
                    blue |= to_blue
                    changed = True
            if not changed:
                return red, blue, live_red, live_blue

    def branch_bit(self, unset: int, live_red: List[int], live_blue: List[int]) -> int:
        """The uncolored edge in the most live clauses (lowest index on ties)."""
        counts: Dict[int, int] = {}
        for mask in chain(live_red, live_blue):
            free = mask & unset
            while free:
                low = free & -free
                counts[low] = counts.get(low, 0) + 1
                free ^= low
        return max(counts, key=lambda bit: (counts[bit], -bit))

    def solve(self, red: int = 0, blue: int = 0, live_red=None, live_blue=None) -> Optional[int]:
        """Red mask of an avoiding coloring extending (red, blue), or None."""
        self._tick()
        state = self.propagate(
            red,
            blue,
            self.red_masks if live_red is None else live_red,
            self.blue_masks if live_blue is None else live_blue,
        )
        if state is None:
            return None
        red, blue, live_red, live_blue = state
        if not live_red and not live_blue:
            return red | (self.full & ~blue)
        bit = self.branch_bit(self.full & ~(red | blue), live_red, live_blue)
        found = self.solve(red | bit, blue, live_red, live_blue)
        if found is not None:
            return found
        return self.solve(red, blue | bit, live_red, live_blue)

    def iter_solutions(self, red: int = 0, blue: int = 0, live_red=None, live_blue=None) -> Iterator[int]:
        """Every avoiding coloring extending (red, blue); requires dominance off."""
        self._tick()
        state = self.propagate(
            red,
            blue,
            self.red_masks if live_red is None else live_red,
            self.blue_masks if live_blue is None else live_blue,
        )
        if state is None:
            return
        red, blue, live_red, live_blue = state
        unset = self.full & ~(red | blue)
        if not live_red and not live_blue:
            sub = unset
            while True:
                yield red | sub
                if not sub:
                    return
                sub = (sub - 1) & unset
        bit = self.branch_bit(unset, live_red, live_blue)
        yield from self.iter_solutions(red | bit, blue, live_red, live_blue)
        yield from self.iter_solutions(red, blue | bit, live_red, live_blue)


def _fixed_masks(host: OrderedGraph, fixed: Optional[Dict[Edge, Color]]) -> Tuple[int, int]:
    red = blue = 0
    for edge, color in (fixed or {}).items():
        bit = 1 << host.edge_index[edge]
        if color is Color.RED:
            red |= bit
        else:
            blue |= bit
    return red, blue


def find_avoiding_coloring(
    host: OrderedGraph,
    red_masks: Sequence[int],
    blue_masks: Sequence[int],
    fixed: Optional[Dict[Edge, Color]] = None,
    budget: Optional[int] = None,
) -> Tuple[Optional[int], SearchStats]:
    """
    Search for a coloring of host in which no red mask is all red and no blue mask is all blue.

    Args:
        host: Graph whose edge_list indexes the masks
        red_masks: Edge sets that must not be entirely red
        blue_masks: Edge sets that must not be entirely blue
        fixed: Edges whose color is prescribed
        budget: Node budget (default from config)

    Returns:
        (red mask of a solution or None, search statistics)

    Raises:
        BudgetExceededError: If the budget runs out first
    """
    search = _ClauseSearch(host.num_edges, red_masks, blue_masks, get_node_budget(budget))
    red, blue = _fixed_masks(host, fixed)
    found = search.solve(red, blue)
    return found, search.stats


def iter_avoiding_colorings(
    host: OrderedGraph,
    red_masks: Sequence[int],
    blue_masks: Sequence[int],
    fixed: Optional[Dict[Edge, Color]] = None,
    budget: Optional[int] = None,
) -> Iterator[int]:
    """Yield the red mask of every avoiding coloring (dominance pruning disabled)."""
    search = _ClauseSearch(host.num_edges, red_masks, blue_masks, get_node_budget(budget), dominance=False)
    red, blue = _fixed_masks(host, fixed)
    yield from search.iter_solutions(red, blue)


def _require_edges(h: OrderedGraph, h2: OrderedGraph) -> None:
    if h.num_edges == 0 or h2.num_edges == 0:
        raise PreconditionError("arrow relation requires H and H' to have at least one edge each")


def _solve_subproblem(args) -> Tuple[Optional[int], int, int, bool]:
    num_edges, live_red, live_blue, red, blue, budget = args
    search = _ClauseSearch(num_edges, live_red, live_blue, budget)
    try:
        found = search.solve(red, blue)
    except BudgetExceededError:
        return None, search.nodes, search.propagations, True
    return found, search.nodes, search.propagations, False


def _parallel_solve(host: OrderedGraph, search: _ClauseSearch, threads: int) -> Optional[int]:
    """
    Split the search tree breadth-first until there are `threads` open subproblems.

    Every subproblem runs to completion, so the witness returned (the least one
    by its text form) does not depend on scheduling. The subproblems share what
    is left of the node budget after the split, and any of them running out
    makes the whole search undecided.
    """
    frontier: List[_State] = [(0, 0, search.red_masks, search.blue_masks)]
    solutions: List[int] = []
    while frontier and len(frontier) < threads:
        red, blue, live_red, live_blue = frontier.pop(0)
        search._tick()
        state = search.propagate(red, blue, live_red, live_blue)
        if state is None:
            continue
        red, blue, live_red, live_blue = state
        if not live_red and not live_blue:
            solutions.append(red | (search.full & ~blue))
            continue
        bit = search.branch_bit(search.full & ~(red | blue), live_red, live_blue)
        frontier.append((red | bit, blue, live_red, live_blue))
        frontier.append((red, blue | bit, live_red, live_blue))

    exceeded = False
    if frontier:
        share = (search.budget - search.nodes) // len(frontier)
        jobs = [(host.num_edges, lr, lb, r, b, share) for r, b, lr, lb in frontier]
        logger.info(f"Searching {len(jobs)} subproblems on {threads} workers, {share} nodes each")
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for found, nodes, props, over in pool.map(_solve_subproblem, jobs):
                search.nodes += nodes
                search.propagations += props
                exceeded = exceeded or over
                if found is not None:
                    solutions.append(found)
    if exceeded or search.nodes > search.budget:
        raise BudgetExceededError(
            f"node budget of {search.budget} exhausted in a subproblem", nodes=search.nodes, partial=search.stats
        )
    if solutions:
        return min(solutions, key=lambda mask: EdgeColoring.from_mask(host, mask).to_text())
    return None


def arrows(
    f: OrderedGraph,
    h: OrderedGraph,
    h2: OrderedGraph,
    budget: Optional[int] = None,
    threads: int = 1,
) -> ArrowCertificate:
    """
    Decide F -> (H, H').

    Args:
        f: Host graph
        h: Graph forbidden in red
        h2: Graph forbidden in blue
        budget: Search node budget (default from config)
        threads: Worker processes; above 1 the tree is split and the least witness kept

    Returns:
        ArrowCertificate; a NOT_ARROWS witness has passed the independent copy search

    Raises:
        PreconditionError: If h or h2 has no edge
        BudgetExceededError: If the budget runs out before a definitive answer
    """
    _require_edges(h, h2)
    red_masks = embedding_masks(f, h)
    blue_masks = embedding_masks(f, h2)
    logger.info(
        f"Arrow search on {f.n} vertices, {f.num_edges} edges: "
        f"{len(red_masks)} copies of H, {len(blue_masks)} copies of H'"
    )
    search = _ClauseSearch(f.num_edges, red_masks, blue_masks, get_node_budget(budget))
    if threads > 1:
        found = _parallel_solve(f, search, threads)
    else:
        found = search.solve()
    logger.info(f"Arrow search finished after {search.nodes} nodes, {search.propagations} propagations")
    if found is None:
        return ArrowCertificate(verdict=ArrowVerdict.ARROWS, nodes=search.nodes, propagations=search.propagations)
    witness = verify_avoidance(EdgeColoring.from_mask(f, found), h, h2, "arrow search witness")
    return ArrowCertificate(
        verdict=ArrowVerdict.NOT_ARROWS,
        witness=witness,
        nodes=search.nodes,
        propagations=search.propagations,
    )


def arrows_naive(f: OrderedGraph, h: OrderedGraph, h2: OrderedGraph) -> ArrowCertificate:
    """Try all 2^|E(f)| colorings with the independent copy search. Reference oracle."""
    _require_edges(h, h2)
    if f.num_edges > NAIVE_EDGE_LIMIT:
        raise PreconditionError(f"naive arrow check is capped at {NAIVE_EDGE_LIMIT} edges, got {f.num_edges}")
    for red_mask in range(1 << f.num_edges):
        coloring = EdgeColoring.from_mask(f, red_mask)
        if avoids(coloring, h, h2):
            return ArrowCertificate(verdict=ArrowVerdict.NOT_ARROWS, witness=coloring, nodes=red_mask + 1)
    return ArrowCertificate(verdict=ArrowVerdict.ARROWS, nodes=1 << f.num_edges)
