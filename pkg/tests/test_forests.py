"""Tests for the forest Ramsey-graph constructions."""

import numpy as np
import pytest

from ordered_ramsey.arrow.search import arrows
from ordered_ramsey.classify import Answer, ramsey_forest_case
from ordered_ramsey.colorings.coloring import avoids
from ordered_ramsey.colorings.refuters import applicable_forest_cases, forest_refutation
from ordered_ramsey.config import VERIFY_EDGE_LIMIT
from ordered_ramsey.constructions.combinators import (
    left_star,
    monotone_path,
    right_star,
    union_intervally,
)
from ordered_ramsey.constructions.forests import (
    VerificationStatus,
    build_forest_ramsey,
    build_pseudoforest_ramsey_monP3,
    verify_construction,
)
from ordered_ramsey.core.graph import OrderedGraph
from ordered_ramsey.core.structure import is_forest, is_pseudoforest
from ordered_ramsey.errors import CapExceededError, NotCoveredError, PreconditionError, VerificationError

from conftest import graphs_up_to, random_graph

K2 = monotone_path(1)
P3 = monotone_path(2)
S2 = right_star(2)
LS2 = left_star(2)
SMALL = [K2, P3, S2, LS2]


def test_matching_case_is_the_complete_blowup():
    c = build_forest_ramsey(K2, P3)
    assert c.graph == P3
    assert c.provenance == "forest/matching-blowup"
    assert c.parameters["case"] == 1
    assert c.status is VerificationStatus.VERIFIED


def test_right_star_blowup():
    c = build_forest_ramsey(S2, P3)
    assert c.parameters == {"case": 2, "swapped": False, "padding": 0}
    assert c.provenance == "forest/right-star-blowup"
    assert (c.graph.n, c.graph.num_edges) == (9, 8)
    assert is_forest(c.graph) and c.graph.is_connected()
    assert c.status is VerificationStatus.VERIFIED


def test_left_star_blowup_mirrors_the_right_one():
    c = build_forest_ramsey(LS2, P3)
    assert c.provenance == "forest/left-star-blowup"
    assert arrows(c.graph, LS2, P3).arrows


def test_isolated_vertices_are_padded():
    h = OrderedGraph(n=4, edges=S2.edges)
    c = build_forest_ramsey(h, P3)
    assert c.parameters["padding"] == 1
    assert c.graph.n == 19
    assert c.status is VerificationStatus.VERIFIED


def test_spanned_stars_case():
    stars = union_intervally(S2, LS2)
    c = build_forest_ramsey(stars, P3, verify=False)
    assert c.parameters["case"] == 4
    assert c.provenance == "forest/spanned-stars"
    assert is_forest(c.graph)
    assert c.status is VerificationStatus.UNVERIFIED


def test_not_covered():
    with pytest.raises(NotCoveredError):
        build_forest_ramsey(P3, P3)


def test_needs_edges():
    with pytest.raises(PreconditionError):
        build_forest_ramsey(OrderedGraph.edgeless(2), K2)


@pytest.mark.parametrize("h", SMALL)
@pytest.mark.parametrize("h2", SMALL)
def test_classifier_and_constructions_agree(h, h2):
    verdict = ramsey_forest_case(h, h2)
    if verdict.answer is Answer.YES:
        c = build_forest_ramsey(h, h2)
        assert is_forest(c.graph)
        assert c.status is VerificationStatus.VERIFIED
    else:
        assert verdict.answer is Answer.NO
        case = applicable_forest_cases(h, h2)[0]
        for f in graphs_up_to(4):
            if is_forest(f):
                forest_refutation(f, h, h2, case)


def test_pseudoforest_for_monotone_paths():
    f = build_pseudoforest_ramsey_monP3()
    assert is_pseudoforest(f) and not is_forest(f)
    assert arrows(f, P3, P3).arrows


def test_verify_construction_rejects_a_wrong_graph():
    with pytest.raises(VerificationError):
        verify_construction(S2, S2, S2, "test", {})


def test_verify_construction_skips_large_graphs():
    c = verify_construction(S2, S2, S2, "test", {}, limit=1)
    assert c.status is VerificationStatus.UNVERIFIED


def forest_patterns(max_edges: int):
    """Every ordered forest with 1..max_edges edges and no isolated vertices."""
    return [
        g
        for g in graphs_up_to(2 * max_edges)
        if 1 <= g.num_edges <= max_edges and not g.isolated_vertices() and is_forest(g)
    ]


@pytest.fixture(scope="module")
def candidate_forests():
    rng = np.random.default_rng(31)
    hosts = [f for f in graphs_up_to(4) if is_forest(f)]
    while len(hosts) < 90:
        f = random_graph(rng, int(rng.integers(5, 7)), 0.3)
        if is_forest(f):
            hosts.append(f)
    return hosts


def test_forest_patterns_are_counted():
    assert len(forest_patterns(2)) == 7
    assert len(forest_patterns(3)) == 68


@pytest.mark.slow
def test_classifier_and_constructions_agree_on_all_small_forests(candidate_forests):
    patterns = forest_patterns(3)
    for h in patterns:
        for h2 in patterns:
            verdict = ramsey_forest_case(h, h2)
            blocking = applicable_forest_cases(h, h2)
            if verdict.answer is Answer.YES:
                assert not blocking
                try:
                    c = build_forest_ramsey(h, h2)
                except CapExceededError:
                    continue
                assert is_forest(c.graph)
                assert c.status is VerificationStatus.VERIFIED or c.graph.num_edges > VERIFY_EDGE_LIMIT
            else:
                assert verdict.answer is Answer.NO and blocking
                for f in candidate_forests:
                    assert avoids(forest_refutation(f, h, h2, blocking[0]).coloring, h, h2)


@pytest.mark.slow
def test_refuters_color_every_forest_up_to_six_vertices():
    forests = [f for f in graphs_up_to(6) if is_forest(f)]
    patterns = forest_patterns(2)
    for h in patterns:
        for h2 in patterns:
            if ramsey_forest_case(h, h2).answer is Answer.YES:
                continue
            case = applicable_forest_cases(h, h2)[0]
            for f in forests:
                assert avoids(forest_refutation(f, h, h2, case).coloring, h, h2)
