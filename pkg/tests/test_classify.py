"""Tests for the pair classifiers."""

import pytest

from ordered_ramsey.classify import (
    Answer,
    caterpillar_pair_verdict,
    classify_pair,
    interval_union_finite,
    is_almost_increasing,
    monotone_matching_finite,
    ramsey_finite_connected,
    ramsey_finite_structural_filter,
    ramsey_forest_case,
    ramsey_pseudoforest_connected,
)
from ordered_ramsey.constructions.combinators import (
    build_caterpillar,
    left_star,
    monotone_matching,
    monotone_path,
    right_star,
    union_intervally,
)
from ordered_ramsey.core.graph import OrderedGraph, mirror
from ordered_ramsey.errors import NotApplicableError, PreconditionError

K2 = monotone_path(1)
P3 = monotone_path(2)
S2 = right_star(2)
LS2 = left_star(2)
K3 = OrderedGraph.complete(3)


class TestForestCase:
    def test_matching_case(self):
        verdict = ramsey_forest_case(K2, P3)
        assert verdict.answer is Answer.YES
        assert verdict.case == 1
        assert verdict.theorem == "forest-characterization"
        assert not verdict.details["swapped"]

    def test_partial_matching_flag(self):
        verdict = ramsey_forest_case(K2, monotone_matching(2))
        assert verdict.details["partial_matching_ramsey_graph"]
        assert not ramsey_forest_case(K2, P3).details["partial_matching_ramsey_graph"]

    def test_swapped_roles(self):
        verdict = ramsey_forest_case(P3, S2)
        assert verdict.case == 2
        assert verdict.details["swapped"]

    def test_refuted_pair(self):
        verdict = ramsey_forest_case(P3, P3)
        assert verdict.answer is Answer.NO
        assert verdict.details["refuter_cases"] == [3]

    def test_cycle(self):
        assert ramsey_forest_case(K3, K2).answer is Answer.NO

    def test_needs_edges(self):
        with pytest.raises(PreconditionError):
            ramsey_forest_case(OrderedGraph.edgeless(3), K2)

    @pytest.mark.parametrize("h", [K2, P3, S2, LS2, monotone_path(3), union_intervally(S2, LS2)])
    @pytest.mark.parametrize("h2", [K2, P3, S2, LS2])
    def test_mirror_invariance(self, h, h2):
        assert ramsey_forest_case(mirror(h), mirror(h2)).answer is ramsey_forest_case(h, h2).answer


class TestPseudoforest:
    @pytest.mark.parametrize(
        "h, h2, expected",
        [
            (K2, K3, Answer.YES),
            (K3, K2, Answer.YES),
            (P3, P3, Answer.YES),
            (S2, S2, Answer.NO),
            (K2, P3, Answer.NO),
        ],
    )
    def test_answers(self, h, h2, expected):
        verdict = ramsey_pseudoforest_connected(h, h2)
        assert verdict.answer is expected
        assert verdict.theorem == "pseudoforest-characterization"

    def test_disconnected_input(self):
        with pytest.raises(PreconditionError):
            ramsey_pseudoforest_connected(monotone_matching(2), P3)


class TestFiniteness:
    def test_connected(self):
        assert ramsey_finite_connected(S2).answer is Answer.YES
        assert ramsey_finite_connected(LS2).answer is Answer.YES
        assert ramsey_finite_connected(P3).answer is Answer.NO
        with pytest.raises(PreconditionError):
            ramsey_finite_connected(monotone_matching(2))

    def test_structural_filter(self):
        assert ramsey_finite_structural_filter(union_intervally(S2, LS2)).answer is Answer.NO
        assert ramsey_finite_structural_filter(union_intervally(P3, S2)).answer is Answer.UNKNOWN
        assert ramsey_finite_structural_filter(union_intervally(monotone_path(3), S2)).answer is Answer.NO

    @pytest.mark.parametrize(
        "d, expected",
        [((2, 1, 3), True), ((2, 1, 1), False), ((1, 2), True), ((1, 3, 2), False), ((1, 1, 2, 2), True)],
    )
    def test_almost_increasing(self, d, expected):
        assert is_almost_increasing(d) is expected


class TestCaterpillarPairs:
    @pytest.mark.parametrize(
        "d, expected",
        [
            ((2, 1, 1), Answer.NO),
            ((1, 2, 3), Answer.YES),
            ((2, 1, 3), Answer.UNKNOWN),
            ((3, 1), Answer.YES),
        ],
    )
    def test_right_orientation(self, d, expected):
        verdict = caterpillar_pair_verdict(S2, build_caterpillar(d))
        assert verdict.answer is expected
        assert verdict.details["orientation"] == "right"
        assert verdict.details["defining_sequence"] == list(d)
        assert verdict.details["star_edges"] == 2

    def test_order_of_arguments(self):
        assert caterpillar_pair_verdict(build_caterpillar((2, 1, 1)), S2).answer is Answer.NO

    def test_left_orientation(self):
        verdict = caterpillar_pair_verdict(LS2, mirror(build_caterpillar((2, 1, 1))))
        assert verdict.answer is Answer.NO
        assert verdict.details["orientation"] == "left"

    def test_single_edge_star(self):
        assert caterpillar_pair_verdict(K2, build_caterpillar((2, 1, 1))).answer is Answer.YES

    def test_not_applicable(self):
        with pytest.raises(NotApplicableError):
            caterpillar_pair_verdict(P3, P3)


class TestMatchings:
    def test_single_edge(self):
        assert monotone_matching_finite(P3, K2).answer is Answer.YES

    def test_matching_against_graph_without_isolated_vertices(self):
        assert monotone_matching_finite(P3, monotone_matching(2)).answer is Answer.YES
        padded = OrderedGraph(n=4, edges=P3.edges)
        assert monotone_matching_finite(padded, monotone_matching(2)).answer is Answer.UNKNOWN

    def test_interval_unions(self):
        stars = union_intervally(S2, S2)
        assert interval_union_finite(stars, K2).answer is Answer.YES
        assert interval_union_finite(OrderedGraph(n=7, edges=stars.edges), K2).answer is Answer.UNKNOWN
        assert interval_union_finite(P3, P3).answer is Answer.UNKNOWN


def test_classify_pair_runs_every_applicable_classifier():
    verdicts = classify_pair(S2, S2)
    theorems = [v.theorem for v in verdicts]
    assert theorems[0] == "forest-characterization"
    assert verdicts[0].answer is Answer.YES
    assert "connected-finiteness" in theorems
    assert "pseudoforest-characterization" in theorems
    assert theorems[-1] == "interval-union-finiteness"


def test_classify_pair_skips_connected_classifiers():
    theorems = [v.theorem for v in classify_pair(monotone_matching(2), P3)]
    assert "pseudoforest-characterization" not in theorems
    assert "connected-finiteness" not in theorems
