"""
Left and right determiners for a right star H and the caterpillars H_i(d), H_i^j(d).

A left determiner for (H, H_i(d)) forces, in every coloring without a red H,
a blue H_i(d) through its leftmost vertex. A right determiner for
(H, H_i^j(d)) forces, in every coloring without a red H or a blue H_i(d), a
blue H_i^j(d) through its rightmost vertex. Both also admit a good coloring:
one without the forbidden copies in which the forced copy is unique, induced
and isolated in the blue subgraph.

The builders return the graph together with the good coloring produced by the
recursion, so every determiner comes with its own certificate.
"""

import logging
from enum import Enum
from typing import FrozenSet, List, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ordered_ramsey.arrow.search import find_avoiding_coloring, iter_avoiding_colorings
from ordered_ramsey.colorings.coloring import EdgeColoring
from ordered_ramsey.constructions.combinators import (
    build_caterpillar_segment,
    caterpillar_prefix,
    concatenate,
    hang,
    hang_roots,
    right_star,
    single_vertex,
)
from ordered_ramsey.core.graph import Edge, Embedding, OrderedGraph, embedding_masks, find_embeddings
from ordered_ramsey.core.structure import DefiningSequence, is_right_star, validate_defining_sequence
from ordered_ramsey.errors import PreconditionError, VerificationError

# Set up logging
logger = logging.getLogger(__name__)


class DeterminerSide(str, Enum):
    LEFT = "left"
    RIGHT = "right"


class DeterminerSpec(BaseModel):
    """
    Parameters of a determiner.

    s is the number of edges of the right star H and d the defining sequence
    (d[0] = d_1 is the rightmost segment). Left determiners are for H_i(d),
    right ones for H_i^j(d) with 2 <= j <= i + 1.
    """

    model_config = ConfigDict(frozen=True)

    s: int
    d: DefiningSequence
    i: int
    j: Optional[int] = None
    side: DeterminerSide = DeterminerSide.LEFT

    @model_validator(mode="after")
    def _check_ranges(self):
        validate_defining_sequence(self.d)
        if self.s < 1:
            raise ValueError(f"the star needs at least one edge, got s={self.s}")
        if not 0 <= self.i <= len(self.d):
            raise ValueError(f"segment index i={self.i} is outside 0..{len(self.d)}")
        if self.side is DeterminerSide.LEFT and self.j is not None:
            raise ValueError("left determiners take no start index j")
        if self.side is DeterminerSide.RIGHT:
            if self.j is None or not 2 <= self.j <= self.i + 1:
                raise ValueError(f"right determiners need 2 <= j <= i + 1, got i={self.i}, j={self.j}")
        return self

    @classmethod
    def left(cls, s: int, d, i: int) -> "DeterminerSpec":
        return cls(s=s, d=tuple(d), i=i)

    @classmethod
    def right(cls, s: int, d, i: int, j: int) -> "DeterminerSpec":
        return cls(s=s, d=tuple(d), i=i, j=j, side=DeterminerSide.RIGHT)

    @classmethod
    def for_star(cls, h: OrderedGraph, d, i: int, j: Optional[int] = None) -> "DeterminerSpec":
        if not is_right_star(h):
            raise PreconditionError(f"{h} is not a right star")
        if j is None:
            return cls.left(h.num_edges, d, i)
        return cls.right(h.num_edges, d, i, j)

    def star(self) -> OrderedGraph:
        return right_star(self.s)

    def target(self) -> OrderedGraph:
        """The caterpillar whose copy the determiner forces."""
        if self.side is DeterminerSide.LEFT:
            return caterpillar_prefix(self.d, self.i)
        return build_caterpillar_segment(self.d, self.i, self.j)

    def forbidden(self) -> OrderedGraph:
        """
        The caterpillar a good coloring must avoid in blue.

        For left determiners this is H_{i+1}(d); when d has no entry d_{i+1},
        the weakest choice d_{i+1} = 1 is used, which every H_{i+1} contains.
        """
        if self.side is DeterminerSide.RIGHT:
            return caterpillar_prefix(self.d, self.i)
        extended = self.d if len(self.d) > self.i else self.d + (1,)
        return caterpillar_prefix(extended, self.i + 1)


class GoodColoring(BaseModel):
    """A good coloring and its distinguished blue copy of the determiner's target."""

    model_config = ConfigDict(frozen=True)

    coloring: EdgeColoring
    distinguished_copy: Embedding


class _Built(NamedTuple):
    graph: OrderedGraph
    red: FrozenSet[Edge]
    copy: Tuple[int, ...]


def _shifted(edges, shift: int) -> List[Edge]:
    return [(u + shift, v + shift) for u, v in edges]


def _left_parts(s: int, d: DefiningSequence, i: int) -> _Built:
    if i == 0:
        return _Built(single_vertex(), frozenset(), (1,))
    if i == 1:
        # s - 1 red edges to the rightmost leaves, the d_1 leftmost ones stay blue
        star = right_star(s + d[0] - 1)
        red = frozenset((1, v) for v in range(d[0] + 2, star.n + 1))
        return _Built(star, red, tuple(range(1, d[0] + 2)))

    sub = _left_parts(s, d, i - 1)
    leaves = d[i - 1] - 1
    graph = hang(leaves, s, sub.graph)
    roots = hang_roots(leaves, s, sub.graph)
    red = set()
    for t, root in enumerate(roots):
        red.update(_shifted(sub.red, root - 1))
        if t > 0:
            red.add((1, root))
    copy = (1, *range(2, leaves + 2), *(v + roots[0] - 1 for v in sub.copy))
    return _Built(graph, frozenset(red), copy)


def _right_parts(s: int, d: DefiningSequence, i: int, j: int) -> _Built:
    if j == i + 1:
        return _Built(single_vertex(), frozenset(), (1,))

    right = _right_parts(s, d, i, j + 1)
    left = _left_parts(s, d, j - 1)
    leaves = d[j - 1] - 1
    spokes = hang(leaves, s - 1, left.graph)
    base = concatenate(right.graph, spokes)
    x = right.graph.n
    y = base.n + 1
    graph = OrderedGraph.unchecked(y, base.edges | {(x, y)})

    red = set(right.red)
    for root in hang_roots(leaves, s - 1, left.graph):
        red.update(_shifted(left.red, root + x - 2))
        red.add((x, root + x - 1))
    copy = (*right.copy, *range(x + 1, x + leaves + 1), y)
    return _Built(graph, frozenset(red), copy)


def _build(spec: DeterminerSpec) -> _Built:
    if spec.side is DeterminerSide.LEFT:
        return _left_parts(spec.s, spec.d, spec.i)
    return _right_parts(spec.s, spec.d, spec.i, spec.j)


def _require_side(spec: DeterminerSpec, side: DeterminerSide) -> None:
    if spec.side is not side:
        raise PreconditionError(f"expected a {side.value} determiner spec, got a {spec.side.value} one")


def left_determiner(spec: DeterminerSpec) -> OrderedGraph:
    """
    Left determiner for (S_s, H_i(d)).

    A single vertex for i = 0 and S_{s+d_1-1} for i = 1; otherwise s copies of
    the determiner for i - 1 hung off a star with d_i - 1 leaves.
    """
    _require_side(spec, DeterminerSide.LEFT)
    return _left_parts(spec.s, spec.d, spec.i).graph


def right_determiner(spec: DeterminerSpec) -> OrderedGraph:
    """
    Right determiner for (S_s, H_i^j(d)).

    A single vertex for j = i + 1. Otherwise the right determiner for j + 1
    concatenated with s - 1 left determiners for j - 1 hung off a star with
    d_j - 1 leaves, plus a new rightmost vertex y joined to the hang center.
    """
    _require_side(spec, DeterminerSide.RIGHT)
    return _right_parts(spec.s, spec.d, spec.i, spec.j).graph


def build_determiner(spec: DeterminerSpec) -> OrderedGraph:
    return _build(spec).graph


def _anchor(spec: DeterminerSpec, candidate: OrderedGraph, target: OrderedGraph) -> dict:
    if spec.side is DeterminerSide.LEFT:
        return {1: 1}
    return {target.n: candidate.n}


def _distinguished_copy(coloring: EdgeColoring, spec: DeterminerSpec) -> Optional[Embedding]:
    """
    The anchored blue copy of the target if the coloring is good, else None.

    Good means no red star, no blue forbidden caterpillar, exactly one anchored
    blue copy of the target, and no blue edge other than the copy's own
    touching any vertex of the copy.
    """
    host = coloring.host
    blue = coloring.blue_graph()
    if find_embeddings(coloring.red_graph(), spec.star(), limit=1):
        return None
    if find_embeddings(blue, spec.forbidden(), limit=1):
        return None
    target = spec.target()
    copies = find_embeddings(blue, target, limit=2, fixed=_anchor(spec, host, target))
    if len(copies) != 1:
        return None
    copy = copies[0]
    inside = set(copy.mapping)
    touching = {e for e in coloring.blue if e[0] in inside or e[1] in inside}
    if touching != set(copy.edge_image(target)):
        return None
    return copy


def good_coloring_of(determiner: OrderedGraph, spec: DeterminerSpec) -> GoodColoring:
    """
    The good coloring the recursive construction gives a determiner.

    Raises:
        PreconditionError: If determiner is not the graph built for spec
        VerificationError: If the coloring fails a good-coloring condition
    """
    built = _build(spec)
    if determiner != built.graph:
        raise PreconditionError("graph is not the determiner built for these parameters")
    coloring = EdgeColoring(host=built.graph, red=built.red)
    copy = _distinguished_copy(coloring, spec)
    if copy is None or copy.mapping != built.copy:
        logger.error(f"Good coloring check failed for {spec}")
        raise VerificationError(f"recursive coloring of the {spec.side.value} determiner is not good")
    return GoodColoring(coloring=coloring, distinguished_copy=copy)


def _forces_anchored_copy(candidate: OrderedGraph, spec: DeterminerSpec, budget: Optional[int]) -> bool:
    target = spec.target()
    red_masks = embedding_masks(candidate, spec.star())
    anchored = embedding_masks(candidate, target, fixed=_anchor(spec, candidate, target))
    blue_masks = anchored
    if spec.side is DeterminerSide.RIGHT:
        blue_masks = embedding_masks(candidate, spec.forbidden()) + anchored
    found, stats = find_avoiding_coloring(candidate, red_masks, blue_masks, budget=budget)
    logger.debug(f"Forcing check finished after {stats.nodes} nodes")
    if found is not None:
        logger.info(f"Coloring without the anchored copy: {EdgeColoring.from_mask(candidate, found).to_text()}")
    return found is None


def _has_good_coloring(candidate: OrderedGraph, spec: DeterminerSpec, budget: Optional[int]) -> bool:
    if candidate == build_determiner(spec):
        built = _build(spec)
        if _distinguished_copy(EdgeColoring(host=candidate, red=built.red), spec) is not None:
            return True
    red_masks = embedding_masks(candidate, spec.star())
    blue_masks = embedding_masks(candidate, spec.forbidden())
    for mask in iter_avoiding_colorings(candidate, red_masks, blue_masks, budget=budget):
        if _distinguished_copy(EdgeColoring.from_mask(candidate, mask), spec) is not None:
            return True
    return False


def verify_determiner(candidate: OrderedGraph, spec: DeterminerSpec, budget: Optional[int] = None) -> bool:
    """
    Check both determiner conditions on a candidate graph.

    Args:
        candidate: Graph to check
        spec: Determiner parameters, including the side
        budget: Node budget for each search

    Returns:
        True when every admissible coloring has the anchored blue copy and a
        good coloring exists

    Raises:
        BudgetExceededError: If a search runs out of budget
    """
    if candidate.n < 1:
        return False
    if not _forces_anchored_copy(candidate, spec, budget):
        logger.info(f"{candidate} does not force the anchored copy")
        return False
    if not _has_good_coloring(candidate, spec, budget):
        logger.info(f"{candidate} has no good coloring")
        return False
    return True
