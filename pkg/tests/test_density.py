"""Tests for exact graph densities."""

from fractions import Fraction
from itertools import combinations

import pytest

from conftest import all_graphs, brute_density_m2, random_graph
from ordered_ramsey.constructions.combinators import monotone_path, right_star
from ordered_ramsey.core.density import density_m, density_m2, density_m2_asym
from ordered_ramsey.core.graph import OrderedGraph
from ordered_ramsey.errors import PreconditionError


@pytest.mark.parametrize(
    "graph, expected",
    [
        (OrderedGraph.complete(3), Fraction(1)),
        (OrderedGraph.complete(4), Fraction(3, 2)),
        (monotone_path(3), Fraction(3, 4)),
        (OrderedGraph.edgeless(3), Fraction(0)),
    ],
)
def test_density_m(graph, expected):
    assert density_m(graph) == expected


def test_density_m_of_empty_graph():
    with pytest.raises(PreconditionError):
        density_m(OrderedGraph.edgeless(0))


@pytest.mark.parametrize(
    "graph, expected",
    [
        (OrderedGraph.complete(3), Fraction(2)),
        (OrderedGraph.complete(4), Fraction(5, 2)),
        (monotone_path(2), Fraction(1)),
        (right_star(3), Fraction(1)),
    ],
)
def test_density_m2(graph, expected):
    assert density_m2(graph) == expected


def test_density_m2_single_edge():
    with pytest.raises(PreconditionError):
        density_m2(monotone_path(1))
    assert density_m2(monotone_path(1), allow_single_edge=True) == Fraction(1, 2)


def test_density_m2_matches_subset_oracle():
    for g in all_graphs(5):
        if g.num_edges >= 2:
            assert density_m2(g) == brute_density_m2(g)


def test_density_m_matches_subset_oracle():
    for g in all_graphs(5):
        if not g.num_edges:
            continue
        best = max(
            Fraction(sum(1 for u, v in g.edges if u in s and v in s), len(s))
            for k in range(1, 6)
            for s in map(set, combinations(g.vertices, k))
        )
        assert density_m(g) == best


def test_asymmetric_density(k2, k3):
    assert density_m2_asym(k3, k3) == Fraction(2)
    assert density_m2_asym(k3, k2) == Fraction(2)
    with pytest.raises(PreconditionError):
        density_m2_asym(k2, k3)


def test_asymmetric_density_equals_symmetric_on_equal_graphs():
    for g in all_graphs(4):
        if g.num_edges >= 2:
            assert density_m2_asym(g, g) == density_m2(g)


def test_densities_on_sampled_larger_graphs(rng):
    checked = 0
    while checked < 1000:
        n = int(rng.integers(6, 9))
        g = random_graph(rng, n, float(rng.uniform(0.15, 0.6)))
        if g.num_edges < 2:
            continue
        assert density_m2(g) == brute_density_m2(g)
        best = max(
            Fraction(sum(1 for u, v in g.edges if u in s and v in s), len(s))
            for k in range(1, n + 1)
            for s in map(set, combinations(g.vertices, k))
        )
        assert density_m(g) == best
        checked += 1
