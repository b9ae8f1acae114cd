"""Tests for left and right determiners."""

import pytest

from ordered_ramsey.constructions.combinators import monotone_path, right_star, single_vertex
from ordered_ramsey.constructions.determiners import (
    DeterminerSide,
    DeterminerSpec,
    build_determiner,
    good_coloring_of,
    left_determiner,
    right_determiner,
    verify_determiner,
)
from ordered_ramsey.core.graph import OrderedGraph
from ordered_ramsey.errors import PreconditionError


class TestSpec:
    def test_constructors(self):
        spec = DeterminerSpec.left(2, [1, 1], 2)
        assert spec.side is DeterminerSide.LEFT and spec.d == (1, 1) and spec.j is None
        assert DeterminerSpec.right(2, (1, 1), 2, 3).side is DeterminerSide.RIGHT
        assert DeterminerSpec.for_star(right_star(2), (1, 1), 2) == spec

    def test_for_star_needs_a_right_star(self):
        with pytest.raises(PreconditionError):
            DeterminerSpec.for_star(monotone_path(2), (1,), 1)

    @pytest.mark.parametrize(
        "build",
        [
            lambda: DeterminerSpec.left(0, (1,), 1),
            lambda: DeterminerSpec.left(2, (1,), 2),
            lambda: DeterminerSpec.right(2, (1, 1), 2, 1),
            lambda: DeterminerSpec.right(2, (1, 1), 1, 3),
            lambda: DeterminerSpec(s=2, d=(1,), i=1, j=2),
        ],
    )
    def test_invalid_parameters(self, build):
        with pytest.raises(ValueError):
            build()

    def test_targets(self):
        assert DeterminerSpec.left(2, (1,), 1).target() == monotone_path(1)
        assert DeterminerSpec.left(2, (1,), 1).forbidden() == monotone_path(2)
        assert DeterminerSpec.right(2, (1, 1), 2, 3).target() == single_vertex()


class TestLeft:
    def test_level_zero_is_a_vertex(self):
        spec = DeterminerSpec.left(2, (1,), 0)
        assert left_determiner(spec) == single_vertex()
        assert verify_determiner(single_vertex(), spec)

    def test_level_one_is_a_star(self, s2):
        spec = DeterminerSpec.left(2, (1,), 1)
        assert left_determiner(spec) == s2
        assert verify_determiner(s2, spec)

    def test_longer_first_segment(self):
        spec = DeterminerSpec.left(2, (2,), 1)
        g = left_determiner(spec)
        assert g == right_star(3)
        assert verify_determiner(g, spec)
        assert not verify_determiner(right_star(2), spec)
        good = good_coloring_of(g, spec)
        assert good.distinguished_copy.mapping == (1, 2, 3)
        assert good.coloring.red == frozenset({(1, 4)})

    def test_single_edge_is_not_enough(self, k2):
        assert not verify_determiner(k2, DeterminerSpec.left(2, (1,), 1))

    def test_second_level(self):
        spec = DeterminerSpec.left(2, (1, 1), 2)
        g = left_determiner(spec)
        assert (g.n, g.num_edges) == (7, 6)
        assert verify_determiner(g, spec)
        good = good_coloring_of(g, spec)
        assert good.distinguished_copy.mapping == (1, 2, 3)

    def test_side_is_checked(self):
        with pytest.raises(PreconditionError):
            left_determiner(DeterminerSpec.right(2, (1, 1), 2, 3))


class TestRight:
    def test_end_is_a_vertex(self):
        spec = DeterminerSpec.right(2, (1, 1), 2, 3)
        assert right_determiner(spec) == single_vertex()
        assert verify_determiner(single_vertex(), spec)

    def test_one_step(self):
        spec = DeterminerSpec.right(2, (1, 1), 2, 2)
        g = right_determiner(spec)
        assert g == OrderedGraph(n=5, edges=[(1, 2), (2, 3), (2, 4), (1, 5)])
        assert verify_determiner(g, spec)
        good = good_coloring_of(g, spec)
        assert good.distinguished_copy.mapping == (1, 5)
        assert good.coloring.red == frozenset({(1, 2), (2, 4)})

    def test_two_steps(self):
        spec = DeterminerSpec.right(2, (1, 1, 1), 3, 2)
        g = right_determiner(spec)
        assert (g.n, g.num_edges) == (13, 12)
        assert verify_determiner(g, spec)
        good = good_coloring_of(g, spec)
        assert good.distinguished_copy.mapping == (1, 9, 13)
        assert good.coloring.blue == frozenset({(1, 9), (9, 13), (2, 3), (3, 4), (6, 7), (10, 11)})

    def test_end_for_a_single_segment(self):
        spec = DeterminerSpec.right(2, (2,), 1, 2)
        assert right_determiner(spec) == single_vertex()
        assert verify_determiner(single_vertex(), spec)

    def test_side_is_checked(self):
        with pytest.raises(PreconditionError):
            right_determiner(DeterminerSpec.left(2, (1,), 1))


def test_good_coloring_needs_the_built_graph():
    spec = DeterminerSpec.left(2, (1,), 1)
    assert build_determiner(spec) == right_star(2)
    with pytest.raises(PreconditionError):
        good_coloring_of(right_star(3), spec)
