"""
Shared fixtures and brute-force helpers for the test suite.

The helpers here enumerate graphs and colorings directly so that the
package's search code can be checked against them.
"""

from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, List

import numpy as np
import pytest

from ordered_ramsey.core.graph import OrderedGraph
from ordered_ramsey.constructions.combinators import left_star, monotone_matching, monotone_path, right_star


def all_graphs(n: int) -> Iterator[OrderedGraph]:
    """Every ordered graph on exactly n vertices."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield OrderedGraph(n=n, edges=[p for k, p in enumerate(pairs) if mask >> k & 1])


def graphs_up_to(n: int) -> Iterator[OrderedGraph]:
    for k in range(1, n + 1):
        yield from all_graphs(k)


def left_degree_one_trees(n: int) -> Iterator[OrderedGraph]:
    """Every tree on 1..n in which each vertex has at most one left neighbor."""
    for parents in product(*(range(1, v) for v in range(2, n + 1))):
        yield OrderedGraph(n=n, edges=[(p, v) for v, p in enumerate(parents, start=2)])


def random_tree(rng: np.random.Generator, n: int) -> OrderedGraph:
    """Uniformly random attachment tree on 1..n with its labels shuffled."""
    labels = rng.permutation(n) + 1
    edges = []
    for v in range(1, n):
        parent = int(rng.integers(0, v))
        edges.append((int(labels[parent]), int(labels[v])))
    return OrderedGraph(n=n, edges=edges)


def random_graph(rng: np.random.Generator, n: int, p: float) -> OrderedGraph:
    """Each pair of 1..n becomes an edge independently with probability p."""
    pairs = list(combinations(range(1, n + 1), 2))
    keep = rng.random(len(pairs)) < p
    return OrderedGraph(n=n, edges=[e for e, k in zip(pairs, keep) if k])


def brute_density_m2(g: OrderedGraph) -> Fraction:
    """max (e(J) - 1) / (v(J) - 2) over vertex subsets J with at least three vertices."""
    best = None
    for k in range(3, g.n + 1):
        for subset in combinations(g.vertices, k):
            inside = set(subset)
            e = sum(1 for u, v in g.edges if u in inside and v in inside)
            value = Fraction(e - 1, k - 2)
            if best is None or value > best:
                best = value
    return best


def copy_masks(f: OrderedGraph, pattern: OrderedGraph) -> List[int]:
    """Bitmasks over f.edge_list of every order-preserving copy of pattern."""
    index = {e: i for i, e in enumerate(f.edge_list)}
    masks = []
    for image in combinations(f.vertices, pattern.n):
        edges = [(image[u - 1], image[v - 1]) for u, v in pattern.edge_list]
        if all(e in index for e in edges):
            masks.append(sum(1 << index[e] for e in edges))
    return masks


def brute_arrows(f: OrderedGraph, h: OrderedGraph, h2: OrderedGraph) -> bool:
    """Try every red set; True iff each one has a red h or a blue h2."""
    red_copies, blue_copies = copy_masks(f, h), copy_masks(f, h2)
    full = (1 << f.num_edges) - 1
    for red in range(full + 1):
        blue = full ^ red
        if not any(m & red == m for m in red_copies) and not any(m & blue == m for m in blue_copies):
            return False
    return True


def supergraph_chain(rng: np.random.Generator, g: OrderedGraph, steps: int) -> List[OrderedGraph]:
    """g followed by graphs that each add one random missing edge."""
    chain = [g]
    missing = [e for e in OrderedGraph.complete(g.n).edge_list if e not in g.edges]
    order = rng.permutation(len(missing))
    for k in order[:steps]:
        chain.append(chain[-1].add_edges([missing[int(k)]]))
    return chain


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def k2():
    return monotone_path(1)


@pytest.fixture
def p3():
    return monotone_path(2)


@pytest.fixture
def s2():
    return right_star(2)


@pytest.fixture
def ls2():
    return left_star(2)


@pytest.fixture
def m2():
    return monotone_matching(2)


@pytest.fixture
def k3():
    return OrderedGraph.complete(3)
