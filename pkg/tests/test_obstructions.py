"""Tests for bonnets, tangled paths and the caterpillar cross-check."""

import pytest

from conftest import all_graphs, left_degree_one_trees
from ordered_ramsey.constructions.combinators import build_caterpillar, monotone_path
from ordered_ramsey.core.graph import OrderedGraph
from ordered_ramsey.core.obstructions import (
    BONNET_PATTERNS,
    CaterpillarStatus,
    SearchStatus,
    detect_bonnet,
    detect_tangled_path,
    is_right_caterpillar_certified,
    is_tangled,
)
from ordered_ramsey.core.structure import extract_defining_sequence, is_forest, max_left_degree


def test_bonnet_detected_in_itself():
    witness = detect_bonnet(BONNET_PATTERNS["bonnet"])
    assert witness is not None
    assert witness.pattern == "bonnet"
    assert witness.embedding.mapping == (1, 2, 3, 4, 5)


def test_caterpillar_has_no_bonnet():
    assert detect_bonnet(build_caterpillar((2, 1, 3))) is None


@pytest.mark.parametrize(
    "path, expected",
    [([2, 4, 1, 3], True), ([1, 2, 3, 4], False), ([1, 3, 2, 4], False)],
)
def test_is_tangled(path, expected):
    assert is_tangled(path) is expected


def test_tangled_path_found():
    result = detect_tangled_path(OrderedGraph(n=4, edges=[(2, 4), (1, 4), (1, 3)]))
    assert result.status is SearchStatus.FOUND
    assert result.path == (2, 4, 1, 3)


def test_tangled_path_search_reports_truncation():
    result = detect_tangled_path(monotone_path(5), bound=3)
    assert result.status is SearchStatus.BOUND_EXCEEDED
    assert detect_tangled_path(monotone_path(5)).status is SearchStatus.NOT_FOUND


def test_certified_caterpillar():
    cert = is_right_caterpillar_certified(build_caterpillar((2, 1)))
    assert cert.status is CaterpillarStatus.CATERPILLAR
    assert cert.hypothesis_holds
    assert cert.sequence == (2, 1)


def test_certificate_outside_hypothesis(k3):
    cert = is_right_caterpillar_certified(k3)
    assert cert.status is CaterpillarStatus.NOT_APPLICABLE
    assert not cert.hypothesis_holds


def test_obstruction_criterion_agrees_with_extraction():
    # connected trees with left degree at most one on up to 6 vertices
    for n in range(2, 7):
        for g in all_graphs(n):
            if g.num_edges != n - 1 or not is_forest(g) or max_left_degree(g) > 1:
                continue
            cert = is_right_caterpillar_certified(g)
            assert cert.status is not CaterpillarStatus.INCONSISTENT
            assert (cert.status is CaterpillarStatus.CATERPILLAR) == (extract_defining_sequence(g) is not None)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_obstruction_criterion_on_larger_trees(n):
    for g in left_degree_one_trees(n):
        cert = is_right_caterpillar_certified(g)
        assert cert.hypothesis_holds
        assert cert.status is not CaterpillarStatus.INCONSISTENT
        assert (cert.status is CaterpillarStatus.CATERPILLAR) == (extract_defining_sequence(g) is not None)


def test_left_degree_one_trees_are_counted():
    trees = list(left_degree_one_trees(5))
    assert len(trees) == 24
    assert all(g.is_connected() and max_left_degree(g) == 1 for g in trees)
