"""
Ordered graphs and order-preserving embeddings.

An ordered graph lives on the vertices 1..n with the numeric order. Two
ordered graphs are isomorphic exactly when they are equal, so every graph in
the toolkit is kept in this canonical form and compared structurally.
"""

import logging
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# Set up logging
logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def _normalize_edges(edges: Iterable[Iterable[int]]) -> FrozenSet[Edge]:
    normalized = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        normalized.add((u, v) if u < v else (v, u))
    return frozenset(normalized)


class OrderedGraph(BaseModel):
    """Ordered graph on vertices 1..n; edges are stored as pairs (u, v) with u < v."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    edges: FrozenSet[Edge] = frozenset()

    @field_validator("edges", mode="before")
    @classmethod
    def _coerce_edges(cls, value):
        return _normalize_edges(value)

    @model_validator(mode="after")
    def _check_endpoints(self):
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{self.n}")
        return self

    @classmethod
    def unchecked(cls, n: int, edges: Iterable[Edge]) -> "OrderedGraph":
        """Build from edges already known to be normalized and in range."""
        return cls.model_construct(n=n, edges=frozenset(edges))

    @classmethod
    def complete(cls, n: int) -> "OrderedGraph":
        return cls.unchecked(n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))

    @classmethod
    def edgeless(cls, n: int) -> "OrderedGraph":
        return cls.unchecked(n, ())

    def __str__(self) -> str:
        body = ",".join(f"{u}-{v}" for u, v in self.edge_list)
        return f"n={self.n};e={body}"

    @cached_property
    def edge_list(self) -> List[Edge]:
        return sorted(self.edges)

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_list)}

    @cached_property
    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        adj: Dict[int, Set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(nbrs) for v, nbrs in adj.items()}

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def left_neighbors(self, v: int) -> List[int]:
        return sorted(w for w in self.adjacency[v] if w < v)

    def right_neighbors(self, v: int) -> List[int]:
        return sorted(w for w in self.adjacency[v] if w > v)

    def isolated_vertices(self) -> List[int]:
        return [v for v in self.vertices if not self.adjacency[v]]

    def induced(self, vertices: Iterable[int]) -> "OrderedGraph":
        """Induced subgraph on the given vertices, relabeled order-preservingly to 1..k."""
        kept = sorted(set(vertices))
        position = {v: i for i, v in enumerate(kept, 1)}
        edges = [(position[u], position[v]) for u, v in self.edges if u in position and v in position]
        return OrderedGraph.unchecked(len(kept), edges)

    def spanning(self, edges: Iterable[Edge]) -> "OrderedGraph":
        """Subgraph on the same vertex set keeping only the given edges."""
        keep = frozenset(edges)
        return OrderedGraph.unchecked(self.n, self.edges & keep)

    def strip_isolated(self) -> "OrderedGraph":
        isolated = set(self.isolated_vertices())
        return self.induced(v for v in self.vertices if v not in isolated)

    def delete_edge(self, u: int, v: int) -> "OrderedGraph":
        return OrderedGraph.unchecked(self.n, self.edges - {(min(u, v), max(u, v))})

    def delete_vertex(self, v: int) -> "OrderedGraph":
        return self.induced(w for w in self.vertices if w != v)

    def add_edges(self, edges: Iterable[Edge]) -> "OrderedGraph":
        return OrderedGraph(n=self.n, edges=self.edges | _normalize_edges(edges))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def components(self) -> List[Tuple[int, ...]]:
        """Connected components as sorted vertex tuples, ordered by their leftmost vertex."""
        comps = [tuple(sorted(c)) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps)

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1


class Embedding(BaseModel):
    """Strictly increasing map from pattern vertices to host vertices."""

    model_config = ConfigDict(frozen=True)

    mapping: Tuple[int, ...]

    def image(self, v: int) -> int:
        return self.mapping[v - 1]

    def edge_image(self, pattern: OrderedGraph) -> List[Edge]:
        return sorted((self.image(u), self.image(v)) for u, v in pattern.edges)


def iter_embeddings(
    host: OrderedGraph,
    pattern: OrderedGraph,
    fixed: Optional[Dict[int, int]] = None,
) -> Iterator[Tuple[int, ...]]:
    """
    Yield every order-preserving embedding of pattern into host.

    Pattern vertices are placed left to right; each one is only tried at host
    vertices adjacent to the images of its already placed left neighbors.

    Args:
        host: Graph searched for copies
        pattern: Graph whose copies are sought
        fixed: Optional pattern vertex -> host vertex constraints

    Yields:
        Tuples whose (i-1)-th entry is the image of pattern vertex i
    """
    k, n = pattern.n, host.n
    if k > n:
        return
    back = [[]] + [pattern.left_neighbors(i) for i in range(1, k + 1)]
    adj = host.adjacency
    fixed = fixed or {}
    mapping = [0] * (k + 1)

    def extend(i: int, lo: int) -> Iterator[Tuple[int, ...]]:
        if i > k:
            yield tuple(mapping[1:])
            return
        hi = n - (k - i)
        if i in fixed:
            candidates: Iterable[int] = [fixed[i]] if lo <= fixed[i] <= hi else []
        elif back[i]:
            candidates = sorted(v for v in adj[mapping[back[i][0]]] if lo <= v <= hi)
        else:
            candidates = range(lo, hi + 1)
        for v in candidates:
            if all(mapping[p] in adj[v] for p in back[i]):
                mapping[i] = v
                yield from extend(i + 1, v + 1)

    yield from extend(1, 1)


def find_embeddings(
    host: OrderedGraph,
    pattern: OrderedGraph,
    limit: Optional[int] = None,
    fixed: Optional[Dict[int, int]] = None,
) -> List[Embedding]:
    """Return up to `limit` embeddings of pattern into host (all of them when limit is None)."""
    found = []
    for mapping in iter_embeddings(host, pattern, fixed):
        found.append(Embedding(mapping=mapping))
        if limit is not None and len(found) >= limit:
            break
    return found


def contains(host: OrderedGraph, pattern: OrderedGraph) -> bool:
    return next(iter_embeddings(host, pattern), None) is not None


def embedding_masks(
    host: OrderedGraph,
    pattern: OrderedGraph,
    fixed: Optional[Dict[int, int]] = None,
) -> List[int]:
    """
    Edge sets of all copies of pattern in host, as bitmasks over host.edge_list.

    Distinct embeddings with the same edge image give a single mask. A pattern
    without edges yields the empty mask once if it embeds at all.
    """
    index = host.edge_index
    masks = set()
    for mapping in iter_embeddings(host, pattern, fixed):
        mask = 0
        for u, v in pattern.edges:
            mask |= 1 << index[(mapping[u - 1], mapping[v - 1])]
        masks.add(mask)
    return sorted(masks)


def mirror(g: OrderedGraph) -> OrderedGraph:
    """Reverse the vertex order: i -> n + 1 - i."""
    n = g.n
    return OrderedGraph.unchecked(n, ((n + 1 - v, n + 1 - u) for u, v in g.edges))
