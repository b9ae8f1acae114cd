"""Tests for minimality checks, minimal-graph enumeration and ordered Ramsey numbers."""

import pytest

from ordered_ramsey.arrow.minimal import enumerate_minimal, is_minimal_ramsey, ordered_ramsey_number
from ordered_ramsey.arrow.search import arrows
from ordered_ramsey.constructions.combinators import monotone_path, right_star
from ordered_ramsey.core.graph import OrderedGraph
from ordered_ramsey.errors import BudgetExceededError, CapExceededError


class TestIsMinimal:
    def test_star_is_minimal(self, s2):
        cert = is_minimal_ramsey(right_star(3), s2, s2)
        assert cert.is_minimal and cert.arrows
        assert cert.failing_edge is None and cert.failing_vertex is None

    def test_larger_star_names_an_edge(self, s2):
        cert = is_minimal_ramsey(right_star(4), s2, s2)
        assert cert.arrows and not cert.is_minimal
        assert cert.failing_edge == (1, 2)

    def test_isolated_vertex_is_reported(self, s2):
        padded = OrderedGraph(n=5, edges=right_star(3).edges)
        cert = is_minimal_ramsey(padded, s2, s2)
        assert not cert.is_minimal
        assert cert.failing_vertex == 5

    def test_non_arrowing_graph(self, s2):
        cert = is_minimal_ramsey(right_star(2), s2, s2)
        assert not cert.arrows and not cert.is_minimal


class TestEnumerate:
    def test_single_edges(self, k2):
        assert enumerate_minimal(k2, k2, 3) == [k2]

    def test_right_stars(self, s2):
        assert enumerate_minimal(s2, s2, 5) == [right_star(3)]

    def test_members_are_minimal(self, p3, k2):
        found = enumerate_minimal(p3, k2, 4)
        assert found == [p3]
        for g in found:
            assert is_minimal_ramsey(g, p3, k2).is_minimal

    def test_edge_bound(self, s2):
        assert enumerate_minimal(s2, s2, 5, max_edges=2) == []

    def test_budget_keeps_partial_results(self, p3):
        with pytest.raises(BudgetExceededError) as excinfo:
            enumerate_minimal(p3, p3, 6, budget=200)
        assert isinstance(excinfo.value.partial, list)


class TestRamseyNumber:
    @pytest.mark.parametrize(
        "h, h2, expected",
        [
            (monotone_path(1), monotone_path(1), 2),
            (right_star(2), right_star(2), 4),
            (monotone_path(2), monotone_path(2), 5),
            (monotone_path(1), monotone_path(2), 3),
        ],
    )
    def test_small_values(self, h, h2, expected):
        r = ordered_ramsey_number(h, h2)
        assert r == expected
        assert arrows(OrderedGraph.complete(r), h, h2).arrows
        assert r == max(h.n, h2.n) or not arrows(OrderedGraph.complete(r - 1), h, h2).arrows

    def test_cap(self, p3):
        with pytest.raises(CapExceededError):
            ordered_ramsey_number(p3, p3, cap=4)
