"""
Minimal ordered Ramsey graphs and small ordered Ramsey numbers.

The arrow relation is monotone under taking ordered subgraphs. Deleting a
non-isolated vertex gives a subgraph of some single-edge deletion, so a graph
that arrows is minimal as soon as no single-edge deletion and no single
isolated-vertex deletion arrows.
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict

from ordered_ramsey.arrow.search import _ClauseSearch, _require_edges, arrows
from ordered_ramsey.config import ENUMERATE_MAX_VERTICES, RAMSEY_NUMBER_CAP, get_node_budget
from ordered_ramsey.core.graph import Edge, OrderedGraph, embedding_masks
from ordered_ramsey.errors import BudgetExceededError, CapExceededError

# Set up logging
logger = logging.getLogger(__name__)


class MinimalityCertificate(BaseModel):
    """is_minimal implies arrows and that no single deletion still arrows."""

    model_config = ConfigDict(frozen=True)

    is_minimal: bool
    arrows: bool
    failing_edge: Optional[Edge] = None
    failing_vertex: Optional[int] = None
    nodes: int = 0


def is_minimal_ramsey(
    f: OrderedGraph,
    h: OrderedGraph,
    h2: OrderedGraph,
    budget: Optional[int] = None,
) -> MinimalityCertificate:
    """
    Check that F arrows (H, H') and that no proper ordered subgraph does.

    Args:
        f: Candidate graph
        h: Graph forbidden in red
        h2: Graph forbidden in blue
        budget: Node budget for each arrow search

    Returns:
        MinimalityCertificate naming the first deletion that still arrows, if any
    """
    top = arrows(f, h, h2, budget=budget)
    nodes = top.nodes
    if not top.arrows:
        return MinimalityCertificate(is_minimal=False, arrows=False, nodes=nodes)
    for u, v in f.edge_list:
        cert = arrows(f.delete_edge(u, v), h, h2, budget=budget)
        nodes += cert.nodes
        if cert.arrows:
            logger.info(f"{f} is not minimal: deleting edge {u}-{v} still arrows")
            return MinimalityCertificate(is_minimal=False, arrows=True, failing_edge=(u, v), nodes=nodes)
    for v in f.isolated_vertices():
        cert = arrows(f.delete_vertex(v), h, h2, budget=budget)
        nodes += cert.nodes
        if cert.arrows:
            logger.info(f"{f} is not minimal: deleting isolated vertex {v} still arrows")
            return MinimalityCertificate(is_minimal=False, arrows=True, failing_vertex=v, nodes=nodes)
    return MinimalityCertificate(is_minimal=True, arrows=True, nodes=nodes)


class _ArrowMemo:
    """Arrow verdicts for one (H, H') pair, sharing a single node budget."""

    def __init__(self, h: OrderedGraph, h2: OrderedGraph, budget: int):
        self.h, self.h2 = h, h2
        self.budget = budget
        self.nodes = 0
        self.verdicts: Dict[OrderedGraph, bool] = {}

    def arrows(self, g: OrderedGraph, red_masks=None, blue_masks=None) -> bool:
        if g in self.verdicts:
            return self.verdicts[g]
        if red_masks is None:
            red_masks = embedding_masks(g, self.h)
            blue_masks = embedding_masks(g, self.h2)
        search = _ClauseSearch(g.num_edges, red_masks, blue_masks, self.budget - self.nodes)
        try:
            result = search.solve() is None
        finally:
            self.nodes += search.nodes
        self.verdicts[g] = result
        return result


def enumerate_minimal(
    h: OrderedGraph,
    h2: OrderedGraph,
    max_vertices: int = ENUMERATE_MAX_VERTICES,
    max_edges: Optional[int] = None,
    budget: Optional[int] = None,
) -> List[OrderedGraph]:
    """
    All minimal ordered Ramsey graphs of (H, H') within the given bounds.

    Edge subsets of the complete ordered graph are visited per vertex count,
    by edge count and then lexicographically. A candidate is only searched when
    it contains both graphs and every edge lies in some copy of one of them;
    when neither graph has isolated vertices, candidates with isolated vertices
    are skipped as well since removing one keeps every copy.

    Raises:
        BudgetExceededError: With the graphs found so far as `partial`
    """
    _require_edges(h, h2)
    memo = _ArrowMemo(h, h2, get_node_budget(budget))
    skip_isolated = not h.isolated_vertices() and not h2.isolated_vertices()
    found: List[OrderedGraph] = []
    try:
        for n in range(1, max_vertices + 1):
            all_edges = OrderedGraph.complete(n).edge_list
            top = len(all_edges) if max_edges is None else min(max_edges, len(all_edges))
            for k in range(top + 1):
                for chosen in combinations(all_edges, k):
                    g = OrderedGraph.unchecked(n, chosen)
                    if skip_isolated and g.isolated_vertices():
                        continue
                    if _is_minimal_candidate(g, memo):
                        logger.info(f"Minimal Ramsey graph found: {g}")
                        found.append(g)
            logger.info(f"Finished {n} vertices: {len(found)} minimal graphs, {memo.nodes} nodes")
    except BudgetExceededError as exc:
        logger.warning(f"Enumeration stopped by the budget with {len(found)} graphs found")
        raise BudgetExceededError(str(exc), nodes=memo.nodes, partial=found) from exc
    return found


def _is_minimal_candidate(g: OrderedGraph, memo: _ArrowMemo) -> bool:
    red_masks = embedding_masks(g, memo.h)
    blue_masks = embedding_masks(g, memo.h2)
    if not red_masks or not blue_masks:
        return False
    covered = 0
    for mask in red_masks + blue_masks:
        covered |= mask
    if covered != (1 << g.num_edges) - 1:
        return False
    if not memo.arrows(g, red_masks, blue_masks):
        return False
    if any(memo.arrows(g.delete_edge(u, v)) for u, v in g.edge_list):
        return False
    return not any(memo.arrows(g.delete_vertex(v)) for v in g.isolated_vertices())


def ordered_ramsey_number(
    h: OrderedGraph,
    h2: OrderedGraph,
    cap: int = RAMSEY_NUMBER_CAP,
    budget: Optional[int] = None,
) -> int:
    """
    Least r <= cap such that K_r arrows (H, H').

    Raises:
        CapExceededError: If no r <= cap works
    """
    _require_edges(h, h2)
    for r in range(max(h.n, h2.n), cap + 1):
        if arrows(OrderedGraph.complete(r), h, h2, budget=budget).arrows:
            logger.info(f"Ordered Ramsey number found: {r}")
            return r
    raise CapExceededError(f"no complete ordered graph on at most {cap} vertices arrows the pair")
