"""Tests for structural predicates, caterpillar sequences and interval decompositions."""

import networkx as nx
import numpy as np
import pytest

from conftest import all_graphs
from ordered_ramsey.constructions.combinators import (
    build_caterpillar,
    left_star,
    monotone_matching,
    monotone_path,
    right_star,
    union_intervally,
)
from ordered_ramsey.core.graph import OrderedGraph, mirror
from ordered_ramsey.core.structure import (
    classify_structure,
    contains_mixed_three_star,
    contains_monotone_p3,
    contains_p4,
    crossing,
    decompose_loosely,
    displayed_vertices,
    extract_defining_sequence,
    extract_left_defining_sequence,
    has_non_star_component,
    is_forest,
    is_loosely_connected,
    is_monotone_matching,
    is_monotone_path,
    is_partial_matching,
    is_proper_pseudoforest,
    is_pseudoforest,
    is_star_forest,
    max_left_degree,
    max_right_degree,
    validate_defining_sequence,
)
from ordered_ramsey.errors import PreconditionError


class TestPredicates:
    def test_forest_and_pseudoforest(self, k3):
        assert is_forest(monotone_path(3))
        assert not is_forest(k3)
        assert is_pseudoforest(k3)
        assert is_proper_pseudoforest(k3)
        assert not is_pseudoforest(OrderedGraph.complete(4))

    def test_forest_agrees_with_networkx(self):
        for g in all_graphs(5):
            assert is_forest(g) == nx.is_forest(g.to_networkx())

    def test_matchings(self, m2):
        assert is_partial_matching(OrderedGraph(n=5, edges=[(1, 4), (2, 3)]))
        assert is_monotone_matching(m2)
        assert not is_monotone_matching(OrderedGraph(n=4, edges=[(1, 3), (2, 4)]))
        assert not is_monotone_matching(OrderedGraph(n=5, edges=[(1, 2), (3, 4)]))

    def test_paths_and_stars(self, p3, s2, ls2):
        assert is_monotone_path(p3)
        assert not is_monotone_path(s2)
        report = classify_structure(s2)
        assert report.is_right_star and not report.is_left_star
        assert classify_structure(ls2).is_left_star
        assert report.max_right_degree == 2 and report.max_left_degree == 1
        assert report.is_connected

    def test_star_forest(self, s2, p3):
        assert is_star_forest(union_intervally(s2, left_star(3)))
        # a monotone P3 is a star, a P4 is not
        assert is_star_forest(p3)
        assert not is_star_forest(monotone_path(3))
        assert has_non_star_component(union_intervally(s2, monotone_path(3)))

    def test_one_sided_degrees(self):
        g = OrderedGraph(n=4, edges=[(1, 3), (2, 3), (3, 4)])
        assert max_left_degree(g) == 2
        assert max_right_degree(g) == 1

    def test_pattern_predicates(self, s2, k3):
        assert contains_monotone_p3(k3)
        assert not contains_monotone_p3(s2)
        assert contains_p4(monotone_path(3))
        assert contains_p4(OrderedGraph(n=4, edges=[(1, 3), (2, 3), (2, 4)]))
        assert not contains_p4(k3)
        assert not contains_p4(right_star(3))
        assert contains_mixed_three_star(OrderedGraph(n=4, edges=[(1, 2), (2, 3), (2, 4)]))
        assert not contains_mixed_three_star(right_star(3))


class TestDefiningSequence:
    @pytest.mark.parametrize(
        "graph, expected",
        [
            (build_caterpillar((1, 2)), (1, 2)),
            (monotone_path(3), (1, 1, 1)),
            (right_star(3), (3,)),
            (OrderedGraph.complete(3), None),
            (left_star(2), None),
            (OrderedGraph(n=4, edges=[(1, 2), (1, 4), (2, 3)]), None),
        ],
    )
    def test_extract(self, graph, expected):
        assert extract_defining_sequence(graph) == expected

    def test_small_caterpillar_edges(self):
        assert build_caterpillar((1, 2)).edges == frozenset({(1, 2), (1, 3), (3, 4)})

    def test_extract_inverts_build(self, rng):
        for _ in range(50):
            d = tuple(int(x) for x in rng.integers(1, 4, size=int(rng.integers(1, 5))))
            assert extract_defining_sequence(build_caterpillar(d)) == d

    def test_left_caterpillar(self):
        assert extract_left_defining_sequence(mirror(build_caterpillar((2, 1, 3)))) == (2, 1, 3)

    @pytest.mark.parametrize("d", [(), (0,), (2, -1)])
    def test_invalid_sequences(self, d):
        with pytest.raises(PreconditionError):
            validate_defining_sequence(d)


class TestIntervals:
    def test_loosely_connected(self):
        assert is_loosely_connected(OrderedGraph(n=4, edges=[(1, 3), (2, 4)]))
        assert not is_loosely_connected(monotone_matching(2))

    def test_decompose(self, s2, p3):
        assert decompose_loosely(union_intervally(s2, p3)) == [s2, p3]
        assert decompose_loosely(monotone_matching(3)) == [monotone_path(1)] * 3

    def test_decompose_rejects_isolated_vertices(self):
        with pytest.raises(PreconditionError):
            decompose_loosely(OrderedGraph(n=3, edges=[(1, 2)]))

    def test_decompose_reassembles(self):
        for g in all_graphs(5):
            if g.isolated_vertices():
                continue
            blocks = decompose_loosely(g)
            assert union_intervally(*blocks) == g
            assert all(is_loosely_connected(b) for b in blocks)

    @pytest.mark.parametrize(
        "e, f, expected",
        [((1, 3), (2, 4), True), ((2, 4), (1, 3), True), ((1, 4), (2, 3), False), ((1, 2), (2, 3), False)],
    )
    def test_crossing(self, e, f, expected):
        assert crossing(e, f) is expected

    def test_displayed_vertices(self):
        assert displayed_vertices(OrderedGraph(n=4, edges=[(1, 3), (3, 4)])) == [1, 3, 4]
