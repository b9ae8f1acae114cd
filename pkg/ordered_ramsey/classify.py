"""
Verdicts on pairs of ordered graphs: whether a forest or pseudoforest can be
Ramsey for the pair, and whether the pair is Ramsey finite.

Every verdict carries a short tag naming the characterization it comes from
and a reason a reader can re-check (a structural flag, a component, an
offending index). UNKNOWN is returned wherever only a necessary condition
is known.
"""

import logging
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from ordered_ramsey.colorings.refuters import applicable_forest_cases
from ordered_ramsey.core.graph import OrderedGraph, mirror
from ordered_ramsey.core.structure import (
    component_graphs,
    decompose_loosely,
    extract_defining_sequence,
    is_forest,
    is_left_star,
    is_monotone_matching,
    is_monotone_path,
    is_partial_matching,
    is_proper_pseudoforest,
    is_right_star,
    max_left_degree,
    max_right_degree,
)
from ordered_ramsey.errors import NotApplicableError, PreconditionError

# Set up logging
logger = logging.getLogger(__name__)

K2 = OrderedGraph.unchecked(2, [(1, 2)])
MONOTONE_P3 = OrderedGraph.unchecked(3, [(1, 2), (2, 3)])


class Answer(str, Enum):
    YES = "YES"
    NO = "NO"
    UNKNOWN = "UNKNOWN"


class Verdict(BaseModel):
    """Answer plus the characterization it rests on and a checkable reason."""

    model_config = ConfigDict(frozen=True)

    answer: Answer
    theorem: str
    case: Optional[int] = None
    reason: str = ""
    details: Dict[str, Any] = {}


def _require_edges(*graphs: OrderedGraph) -> None:
    if any(g.num_edges == 0 for g in graphs):
        raise PreconditionError("classification requires graphs with at least one edge")


def _all_right_stars(g: OrderedGraph) -> bool:
    return all(is_right_star(c) for c in component_graphs(g))


def _all_left_stars(g: OrderedGraph) -> bool:
    return all(is_left_star(c) for c in component_graphs(g))


def _all_one_sided_stars(g: OrderedGraph) -> bool:
    return all(is_right_star(c) or is_left_star(c) for c in component_graphs(g))


def _all_monotone_paths(g: OrderedGraph) -> bool:
    return all(is_monotone_path(c) for c in component_graphs(g))


def _forest_case_holds(case: int, first: OrderedGraph, second: OrderedGraph) -> bool:
    if case == 1:
        return is_partial_matching(first)
    if case == 2:
        return _all_right_stars(first) and max_left_degree(second) <= 1
    if case == 3:
        return _all_left_stars(first) and max_right_degree(second) <= 1
    return _all_one_sided_stars(first) and _all_monotone_paths(second)


def forest_case_roles(h: OrderedGraph, h2: OrderedGraph) -> List[Tuple[int, bool]]:
    """
    Every (case, swapped) under which a forest Ramsey graph for (h, h2) is known.

    In each case a property of one graph meets a property of the other;
    swapped is True when h2 plays the first role. Isolated vertices are
    ignored. The list is sorted, so its head is the lowest applicable case.
    """
    if not (is_forest(h) and is_forest(h2)):
        return []
    first, second = h.strip_isolated(), h2.strip_isolated()
    roles = []
    for case in (1, 2, 3, 4):
        if _forest_case_holds(case, first, second):
            roles.append((case, False))
        elif _forest_case_holds(case, second, first):
            roles.append((case, True))
    return roles


def ramsey_forest_case(h: OrderedGraph, h2: OrderedGraph) -> Verdict:
    """
    Decide whether some forest arrows (h, h2).

    YES carries the lowest applicable case and, in details, whether a
    partial matching arrows the pair (exactly when both graphs are partial
    matchings). NO carries the blocking refuter cases.
    """
    _require_edges(h, h2)
    both_matchings = is_partial_matching(h) and is_partial_matching(h2)
    if not (is_forest(h) and is_forest(h2)):
        return Verdict(
            answer=Answer.NO,
            theorem="forest-characterization",
            reason="a monochromatic subgraph of a colored forest is a forest, and one graph has a cycle",
        )
    roles = forest_case_roles(h, h2)
    if roles:
        case, swapped = roles[0]
        logger.info(f"Forest case {case} applies (swapped={swapped})")
        return Verdict(
            answer=Answer.YES,
            theorem="forest-characterization",
            case=case,
            reason=f"case {case} holds with {'the second' if swapped else 'the first'} graph in the first role",
            details={"swapped": swapped, "partial_matching_ramsey_graph": both_matchings},
        )
    blocking = applicable_forest_cases(h.strip_isolated(), h2.strip_isolated())
    return Verdict(
        answer=Answer.NO,
        theorem="forest-characterization",
        reason=f"forest refuter cases {blocking} apply",
        details={"refuter_cases": blocking, "partial_matching_ramsey_graph": False},
    )


def ramsey_pseudoforest_connected(h: OrderedGraph, h2: OrderedGraph) -> Verdict:
    """
    For connected h, h2: is the least density of a Ramsey graph exactly 1 and
    attained by a pseudoforest?

    Raises:
        PreconditionError: If a graph is disconnected or edgeless
    """
    _require_edges(h, h2)
    if not (h.is_connected() and h2.is_connected()):
        raise PreconditionError("pseudoforest characterization needs connected graphs")
    for first, second in ((h, h2), (h2, h)):
        if first == K2 and is_proper_pseudoforest(second):
            return Verdict(
                answer=Answer.YES,
                theorem="pseudoforest-characterization",
                reason="K2 against a connected proper pseudoforest, which is its own Ramsey graph",
            )
    if h == MONOTONE_P3 and h2 == MONOTONE_P3:
        return Verdict(
            answer=Answer.YES,
            theorem="pseudoforest-characterization",
            reason="both graphs are monotone P3; the monotone P5 with chord 2-4 arrows them",
        )
    return Verdict(
        answer=Answer.NO,
        theorem="pseudoforest-characterization",
        reason="neither K2 against a proper pseudoforest nor two monotone P3",
    )


def ramsey_finite_connected(h: OrderedGraph) -> Verdict:
    """A connected ordered graph is Ramsey finite iff it is a left or a right star."""
    _require_edges(h)
    if not h.is_connected():
        raise PreconditionError("connected finiteness needs a connected graph")
    if is_right_star(h) or is_left_star(h):
        return Verdict(answer=Answer.YES, theorem="connected-finiteness", reason="one-sided star")
    return Verdict(answer=Answer.NO, theorem="connected-finiteness", reason="not a left or right star")


def ramsey_finite_structural_filter(h: OrderedGraph) -> Verdict:
    """
    Necessary condition for Ramsey finiteness of h: every component that is
    not a monotone P3 is a right star, or every such component is a left star.
    """
    others = [c for c in component_graphs(h) if c != MONOTONE_P3]
    if all(is_right_star(c) for c in others) or all(is_left_star(c) for c in others):
        return Verdict(
            answer=Answer.UNKNOWN,
            theorem="disconnected-necessary-condition",
            reason="necessary condition holds; it is not sufficient",
        )
    two_sided = [c for c in others if not (is_right_star(c) or is_left_star(c))]
    reason = f"component {two_sided[0]} is not a one-sided star" if two_sided else "right and left stars are mixed"
    return Verdict(answer=Answer.NO, theorem="disconnected-necessary-condition", reason=reason)


def is_almost_increasing(d) -> bool:
    """i <= 2, or d_1 <= d_3 and d_2 <= ... <= d_i."""
    d = tuple(d)
    if len(d) <= 2:
        return True
    return d[0] <= d[2] and all(d[k] <= d[k + 1] for k in range(1, len(d) - 1))


def _star_and_caterpillar(h: OrderedGraph, h2: OrderedGraph) -> Optional[Tuple[OrderedGraph, Tuple[int, ...]]]:
    """(star, defining sequence) for a right star with a right caterpillar, in either order."""
    for star, cat in ((h, h2), (h2, h)):
        if is_right_star(star):
            d = extract_defining_sequence(cat)
            if d is not None:
                return star, d
    return None


def caterpillar_pair_verdict(h: OrderedGraph, h2: OrderedGraph) -> Verdict:
    """
    Finiteness of a one-sided star against a caterpillar of the same orientation.

    Raises:
        NotApplicableError: If the pair is not of that shape
    """
    found = _star_and_caterpillar(h, h2)
    orientation = "right"
    if found is None:
        found = _star_and_caterpillar(mirror(h), mirror(h2))
        orientation = "left"
    if found is None:
        raise NotApplicableError("pair is not a one-sided star with a caterpillar of the same orientation")
    star, d = found
    details = {"orientation": orientation, "defining_sequence": list(d), "star_edges": star.num_edges}
    if star.num_edges == 1 or d == (1,):
        return Verdict(
            answer=Answer.YES,
            theorem="caterpillar-finiteness",
            reason="one graph is K2",
            details=details,
        )
    if len(d) <= 2 or all(d[k] <= d[k + 1] for k in range(len(d) - 1)):
        return Verdict(
            answer=Answer.YES,
            theorem="caterpillar-finiteness",
            reason="defining sequence is nondecreasing or has at most two segments",
            details=details,
        )
    if not is_almost_increasing(d):
        return Verdict(
            answer=Answer.NO,
            theorem="caterpillar-finiteness",
            reason="defining sequence is not almost increasing",
            details=details,
        )
    return Verdict(
        answer=Answer.UNKNOWN,
        theorem="caterpillar-finiteness",
        reason="almost increasing but not nondecreasing (d_2 < d_1 <= d_3)",
        details=details,
    )


def monotone_matching_finite(h: OrderedGraph, h2: OrderedGraph) -> Verdict:
    """(H, K2) is always finite; (H, monotone matching) is when H has no isolated vertices."""
    if K2 in (h, h2):
        return Verdict(answer=Answer.YES, theorem="matching-finiteness", reason="one graph is K2")
    for other, matching in ((h, h2), (h2, h)):
        if is_monotone_matching(matching) and other.num_edges and not other.isolated_vertices():
            return Verdict(
                answer=Answer.YES,
                theorem="matching-finiteness",
                reason="monotone matching against a graph without isolated vertices",
            )
    return Verdict(
        answer=Answer.UNKNOWN,
        theorem="matching-finiteness",
        reason="no monotone matching against a graph without isolated vertices",
    )


def _block_pair_finite(a: OrderedGraph, b: OrderedGraph) -> bool:
    if monotone_matching_finite(a, b).answer is Answer.YES:
        return True
    try:
        return caterpillar_pair_verdict(a, b).answer is Answer.YES
    except NotApplicableError:
        return False


def interval_union_finite(h: OrderedGraph, h2: OrderedGraph) -> Verdict:
    """
    Finiteness from the loosely connected blocks of both graphs: if every
    block pair is known to be finite, so is the pair.
    """
    _require_edges(h, h2)
    if h.isolated_vertices() or h2.isolated_vertices():
        return Verdict(answer=Answer.UNKNOWN, theorem="interval-union-finiteness", reason="isolated vertices")
    blocks, blocks2 = decompose_loosely(h), decompose_loosely(h2)
    for a in blocks:
        for b in blocks2:
            if not _block_pair_finite(a, b):
                return Verdict(
                    answer=Answer.UNKNOWN,
                    theorem="interval-union-finiteness",
                    reason=f"block pair ({a}, {b}) is not known to be finite",
                )
    return Verdict(
        answer=Answer.YES,
        theorem="interval-union-finiteness",
        reason=f"all {len(blocks)}x{len(blocks2)} block pairs are finite",
        details={"blocks": [str(a) for a in blocks], "blocks2": [str(b) for b in blocks2]},
    )


def classify_pair(h: OrderedGraph, h2: OrderedGraph) -> List[Verdict]:
    """Run every classifier whose hypothesis the pair satisfies."""
    _require_edges(h, h2)
    verdicts = [ramsey_forest_case(h, h2)]
    if h.is_connected() and h2.is_connected():
        verdicts.append(ramsey_pseudoforest_connected(h, h2))
    if h == h2:
        if h.is_connected():
            verdicts.append(ramsey_finite_connected(h))
        verdicts.append(ramsey_finite_structural_filter(h))
    try:
        verdicts.append(caterpillar_pair_verdict(h, h2))
    except NotApplicableError:
        logger.debug("Pair is not a star with a caterpillar")
    verdicts.append(monotone_matching_finite(h, h2))
    verdicts.append(interval_union_finite(h, h2))
    return verdicts
