"""Tests for the graph text formats."""

import pytest

from ordered_ramsey.core.graph import OrderedGraph
from ordered_ramsey.core.io import format_dsl, format_graph, load_graph, parse_dsl, parse_graph
from ordered_ramsey.errors import GraphFormatError


def test_parse_graph_with_comments():
    text = "# a monotone path\nn 3\n1 2  # first edge\n\n2 3\n"
    assert parse_graph(text) == OrderedGraph(n=3, edges=[(1, 2), (2, 3)])


def test_format_graph_header():
    g = OrderedGraph(n=3, edges=[(2, 3), (1, 2)])
    assert format_graph(g, ["built by hand"]) == "# built by hand\nn 3\n1 2\n2 3\n"
    assert parse_graph(format_graph(g)) == g


def test_format_dsl():
    g = OrderedGraph(n=4, edges=[(2, 3), (1, 2)])
    assert format_dsl(g) == "n=4;e=1-2,2-3"
    assert parse_dsl(format_dsl(g)) == g


@pytest.mark.parametrize(
    "text, line",
    [
        ("n 3\n1 2\n3 1\n", 3),
        ("n 3\n1 4\n", 2),
        ("n 3\n1 2\n1 2\n", 3),
        ("1 2\n", 1),
        ("n x\n", 1),
        ("n 3\n1 2 3\n", 2),
    ],
)
def test_parse_graph_errors_name_the_line(text, line):
    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph(text)
    assert excinfo.value.line == line


def test_parse_graph_requires_header():
    with pytest.raises(GraphFormatError):
        parse_graph("# nothing here\n")


def test_parse_dsl():
    assert parse_dsl("n=4;e=1-2,2-4") == OrderedGraph(n=4, edges=[(1, 2), (2, 4)])
    assert parse_dsl("n=2") == OrderedGraph.edgeless(2)
    assert parse_dsl("n=2;e=") == OrderedGraph.edgeless(2)


@pytest.mark.parametrize("text", ["e=1-2", "n=2;e=1-3", "n=3;e=1-2,1-2", "n=3;e=12", "n=3;x=1"])
def test_parse_dsl_errors(text):
    with pytest.raises(GraphFormatError):
        parse_dsl(text)


def test_dsl_is_the_string_form():
    g = OrderedGraph(n=5, edges=[(1, 2), (2, 3), (3, 4), (4, 5), (2, 4)])
    assert parse_dsl(str(g)) == g


def test_load_graph_from_file_and_inline(tmp_path):
    path = tmp_path / "p3.txt"
    path.write_text("n 3\n1 2\n2 3\n")
    assert load_graph(str(path)) == load_graph("n=3;e=1-2,2-3")


def test_load_graph_missing_file(tmp_path):
    with pytest.raises(GraphFormatError):
        load_graph(str(tmp_path / "absent.txt"))
