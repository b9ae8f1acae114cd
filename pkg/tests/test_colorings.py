"""Tests for edge colorings and the three basic colorings."""

import pytest

from conftest import all_graphs, random_tree
from ordered_ramsey.colorings.basic import bend_coloring, bipartite_coloring, proper_two_coloring, star_coloring
from ordered_ramsey.colorings.coloring import (
    Color,
    EdgeColoring,
    avoids,
    find_monochromatic_copy,
    merge_colorings,
    parse_coloring,
    verify_avoidance,
)
from ordered_ramsey.constructions.combinators import monotone_path, right_star, union_intervally
from ordered_ramsey.core.graph import OrderedGraph, contains
from ordered_ramsey.core.structure import (
    component_graphs,
    contains_monotone_p3,
    is_forest,
    is_star_forest,
    max_left_degree,
    max_right_degree,
)
from ordered_ramsey.errors import GraphFormatError, PreconditionError, VerificationError


class TestEdgeColoring:
    def test_red_edges_must_belong_to_host(self, p3):
        with pytest.raises(ValueError):
            EdgeColoring(host=p3, red=frozenset({(1, 3)}))

    def test_masks_and_text(self, k3):
        coloring = EdgeColoring.from_mask(k3, 0b101)
        assert coloring.red == frozenset({(1, 2), (2, 3)})
        assert coloring.blue == frozenset({(1, 3)})
        assert coloring.red_mask() == 0b101
        assert coloring.to_text() == "1 2 R\n1 3 B\n2 3 R\n"
        assert parse_coloring(coloring.to_text(), k3) == coloring

    def test_swapped_and_mirrored(self, p3):
        coloring = EdgeColoring(host=p3, red=frozenset({(1, 2)}))
        assert coloring.swapped().red == frozenset({(2, 3)})
        mirrored = coloring.mirrored()
        assert mirrored.host == p3
        assert mirrored.red == frozenset({(2, 3)})
        assert mirrored.color_of(1, 2) is Color.BLUE

    def test_color_graphs(self, k3):
        coloring = EdgeColoring(host=k3, red=frozenset({(1, 2), (1, 3)}))
        assert coloring.red_graph() == right_star(2)
        assert coloring.blue_graph() == OrderedGraph(n=3, edges=[(2, 3)])

    @pytest.mark.parametrize(
        "text, line",
        [("1 2 G\n1 3 B\n2 3 B\n", 1), ("1 2 R\n1 2 B\n", 2), ("1 2 R\n3 4 B\n", 2), ("1 x R\n", 1)],
    )
    def test_parse_errors(self, k3, text, line):
        with pytest.raises(GraphFormatError) as excinfo:
            parse_coloring(text, k3)
        assert excinfo.value.line == line

    def test_parse_requires_every_edge(self, k3):
        with pytest.raises(GraphFormatError):
            parse_coloring("1 2 R\n", k3)


class TestAvoidance:
    def test_triangle_coloring_avoids_monotone_paths(self, k3, p3):
        coloring = parse_coloring("1 2 R\n2 3 B\n1 3 R\n", k3)
        assert avoids(coloring, p3, p3)
        assert verify_avoidance(coloring, p3, p3, "test") is coloring

    def test_monochromatic_copy_found(self, k3, p3):
        coloring = EdgeColoring(host=k3, red=k3.edges)
        copy = find_monochromatic_copy(coloring, p3, Color.RED)
        assert copy.mapping == (1, 2, 3)
        assert find_monochromatic_copy(coloring, p3, Color.BLUE) is None
        with pytest.raises(VerificationError):
            verify_avoidance(coloring, p3, p3, "test")

    def test_merge_colorings(self, k2):
        host = union_intervally(k2, k2)
        parts = [EdgeColoring(host=k2, red=k2.edges), EdgeColoring(host=k2)]
        merged = merge_colorings(host, parts, [{1: 1, 2: 2}, {1: 3, 2: 4}])
        assert merged.red == frozenset({(1, 2)})
        assert merged.blue == frozenset({(3, 4)})


class TestStarColoring:
    def test_root_edges_are_red(self, s2):
        assert star_coloring(s2, 1).red == s2.edges

    def test_path_alternates(self):
        coloring = star_coloring(monotone_path(3), 1)
        assert [coloring.color_of(u, u + 1) for u in (1, 2, 3)] == [Color.RED, Color.BLUE, Color.RED]

    def test_inner_root(self):
        assert star_coloring(monotone_path(3), 2).red == frozenset({(1, 2), (2, 3)})

    def test_roots_of_other_components(self):
        host = union_intervally(monotone_path(2), monotone_path(2))
        coloring = star_coloring(host, 1, roots=[5])
        assert coloring.red == frozenset({(1, 2), (4, 5), (5, 6)})

    def test_rejects_unknown_root(self, p3):
        with pytest.raises(PreconditionError):
            star_coloring(p3, 4)

    def test_monochromatic_components_are_stars(self, rng):
        for _ in range(1000):
            n = int(rng.integers(2, 12))
            f = random_tree(rng, n)
            u = int(rng.integers(1, n + 1))
            coloring = star_coloring(f, u)
            assert is_star_forest(coloring.red_graph())
            assert is_star_forest(coloring.blue_graph())
            assert all(coloring.color_of(*e) is Color.RED for e in f.edges if u in e)


class TestBipartiteColoring:
    def test_proper_partition_has_no_monochromatic_monotone_path(self, p3):
        for g in all_graphs(5):
            partition = proper_two_coloring(g)
            if partition is None:
                continue
            coloring = bipartite_coloring(g, partition)
            assert find_monochromatic_copy(coloring, p3, Color.RED) is None
            assert find_monochromatic_copy(coloring, p3, Color.BLUE) is None

    def test_odd_cycle_has_no_proper_partition(self, k3):
        assert proper_two_coloring(k3) is None

    def test_anchors(self):
        a, b = proper_two_coloring(monotone_path(3), anchors_b=[2])
        assert a == {1, 3} and b == {2, 4}
        assert proper_two_coloring(monotone_path(3), anchors_b=[1], anchors_a=[1]) is None
        assert proper_two_coloring(monotone_path(2), anchors_b=[1, 3], anchors_a=[2]) is not None
        assert proper_two_coloring(monotone_path(2), anchors_b=[1, 2]) is None

    def test_partition_must_cover_vertices(self, p3):
        with pytest.raises(PreconditionError):
            bipartite_coloring(p3, ({1}, {2}))


class TestBendColoring:
    def test_no_red_monotone_path(self, rng, p3):
        for _ in range(1000):
            n = int(rng.integers(2, 12))
            f = random_tree(rng, n)
            coloring = bend_coloring(f, int(rng.integers(1, n + 1)))
            assert not contains(coloring.red_graph(), p3)
            for part in component_graphs(coloring.blue_graph()):
                assert max_left_degree(part) <= 1 or max_right_degree(part) <= 1

    def test_requires_a_tree(self, k3, k2):
        with pytest.raises(PreconditionError):
            bend_coloring(k3, 1)
        with pytest.raises(PreconditionError):
            bend_coloring(union_intervally(k2, k2), 1)

    def test_small_trees(self):
        for g in all_graphs(5):
            if g.is_connected() and is_forest(g):
                assert not contains_monotone_p3(bend_coloring(g, 1).red_graph())
