"""
Bonnets and tangled paths: small ordered obstructions to caterpillar shape.

A connected ordered tree in which every vertex has at most one left neighbor,
and which contains neither obstruction, is a right caterpillar.
is_right_caterpillar_certified runs that cross-check on a concrete graph.
"""

import logging
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from ordered_ramsey.config import TANGLED_PATH_BOUND
from ordered_ramsey.core.graph import Embedding, OrderedGraph, find_embeddings, mirror
from ordered_ramsey.core.structure import (
    DefiningSequence,
    crossing,
    extract_defining_sequence,
    is_forest,
    max_left_degree,
)

# Set up logging
logger = logging.getLogger(__name__)

# u1 < u2 <= u3 < u4 <= u5 with edges u1u2, u1u5, u3u4; at most one equality
_BONNETS = {
    "bonnet": OrderedGraph(n=5, edges=[(1, 2), (1, 5), (3, 4)]),
    "bonnet-u2=u3": OrderedGraph(n=4, edges=[(1, 2), (1, 4), (2, 3)]),
    "bonnet-u4=u5": OrderedGraph(n=4, edges=[(1, 2), (1, 4), (3, 4)]),
}
BONNET_PATTERNS: Dict[str, OrderedGraph] = {
    **_BONNETS,
    **{f"mirrored-{name}": mirror(g) for name, g in _BONNETS.items()},
}


class SearchStatus(str, Enum):
    FOUND = "FOUND"
    NOT_FOUND = "NOT_FOUND"
    BOUND_EXCEEDED = "BOUND_EXCEEDED"


class CaterpillarStatus(str, Enum):
    CATERPILLAR = "CATERPILLAR"
    OBSTRUCTED = "OBSTRUCTED"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    UNDETERMINED = "UNDETERMINED"
    INCONSISTENT = "INCONSISTENT"


class BonnetWitness(BaseModel):
    model_config = ConfigDict(frozen=True)

    pattern: str
    embedding: Embedding


class TangledPathResult(BaseModel):
    """FOUND is sound; NOT_FOUND is only complete when the bound did not truncate the search."""

    model_config = ConfigDict(frozen=True)

    status: SearchStatus
    path: Optional[Tuple[int, ...]] = None
    bound: int


class CaterpillarCertificate(BaseModel):
    model_config = ConfigDict(frozen=True)

    status: CaterpillarStatus
    hypothesis_holds: bool
    sequence: Optional[DefiningSequence] = None
    bonnet: Optional[BonnetWitness] = None
    tangled: Optional[TangledPathResult] = None


def detect_bonnet(g: OrderedGraph) -> Optional[BonnetWitness]:
    for name, pattern in BONNET_PATTERNS.items():
        found = find_embeddings(g, pattern, limit=1)
        if found:
            return BonnetWitness(pattern=name, embedding=found[0])
    return None


def is_tangled(path: List[int]) -> bool:
    """
    Whether some interior vertex that is leftmost or rightmost on the path splits
    it into two subpaths with a pair of crossing edges.
    """
    lo, hi = min(path), max(path)
    steps = list(zip(path, path[1:]))
    for i in range(1, len(path) - 1):
        if path[i] not in (lo, hi):
            continue
        before, after = steps[:i], steps[i:]
        if any(crossing(e, f) for e in before for f in after):
            return True
    return False


def detect_tangled_path(g: OrderedGraph, bound: int = TANGLED_PATH_BOUND) -> TangledPathResult:
    """
    Search all simple paths with at most `bound` vertices for a tangled one.

    Each path is examined once, from its smaller end vertex.
    """
    adj = g.adjacency
    truncated = False

    def walk(path: List[int], on_path: set) -> Optional[List[int]]:
        nonlocal truncated
        if len(path) >= 4 and path[0] < path[-1] and is_tangled(path):
            return path
        extensions = [w for w in sorted(adj[path[-1]]) if w not in on_path]
        if len(path) >= bound:
            truncated = truncated or bool(extensions)
            return None
        for w in extensions:
            path.append(w)
            on_path.add(w)
            hit = walk(path, on_path)
            if hit is not None:
                return hit
            path.pop()
            on_path.discard(w)
        return None

    for start in g.vertices:
        hit = walk([start], {start})
        if hit is not None:
            return TangledPathResult(status=SearchStatus.FOUND, path=tuple(hit), bound=bound)
    if truncated:
        logger.warning(f"Tangled-path search truncated at {bound} vertices")
        return TangledPathResult(status=SearchStatus.BOUND_EXCEEDED, bound=bound)
    return TangledPathResult(status=SearchStatus.NOT_FOUND, bound=bound)


def is_right_caterpillar_certified(g: OrderedGraph, bound: int = TANGLED_PATH_BOUND) -> CaterpillarCertificate:
    """
    Cross-check caterpillar extraction against the bonnet/tangled-path criterion.

    For a connected tree with max left degree <= 1 and no obstruction the
    extraction must succeed; a failure there is reported as INCONSISTENT.
    """
    sequence = extract_defining_sequence(g)
    hypothesis = g.is_connected() and is_forest(g) and max_left_degree(g) <= 1
    if not hypothesis:
        return CaterpillarCertificate(
            status=CaterpillarStatus.CATERPILLAR if sequence else CaterpillarStatus.NOT_APPLICABLE,
            hypothesis_holds=False,
            sequence=sequence,
        )
    bonnet = detect_bonnet(g)
    tangled = detect_tangled_path(g, bound)
    if bonnet is not None or tangled.status is SearchStatus.FOUND:
        status = CaterpillarStatus.OBSTRUCTED
    elif tangled.status is SearchStatus.BOUND_EXCEEDED:
        status = CaterpillarStatus.UNDETERMINED
    elif sequence is not None:
        status = CaterpillarStatus.CATERPILLAR
    else:
        logger.error(f"Obstruction-free tree {g} is not a right caterpillar")
        status = CaterpillarStatus.INCONSISTENT
    return CaterpillarCertificate(
        status=status, hypothesis_holds=True, sequence=sequence, bonnet=bonnet, tangled=tangled
    )
