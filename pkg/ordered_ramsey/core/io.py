"""
Text formats for ordered graphs.

File format: first content line ``n <count>``, then one ``<u> <v>`` line per
edge with 1 <= u < v <= n; ``#`` starts a comment. Inline form used on the
command line: ``n=5;e=1-2,2-4``.
"""

import logging
from pathlib import Path
from typing import Iterable, List, Optional

from ordered_ramsey.core.graph import Edge, OrderedGraph
from ordered_ramsey.errors import GraphFormatError

# Set up logging
logger = logging.getLogger(__name__)


def _parse_int(token: str, line: Optional[int]) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {token!r}", line) from None


def _check_edge(u: int, v: int, n: int, seen: set, line: Optional[int]) -> Edge:
    if not (1 <= u < v <= n):
        raise GraphFormatError(f"edge {u} {v} must satisfy 1 <= u < v <= {n}", line)
    if (u, v) in seen:
        raise GraphFormatError(f"duplicate edge {u} {v}", line)
    seen.add((u, v))
    return (u, v)


def parse_graph(text: str) -> OrderedGraph:
    """
    Parse the line-based graph format.

    Args:
        text: File contents

    Returns:
        The parsed OrderedGraph

    Raises:
        GraphFormatError: With the 1-based number of the offending line
    """
    n: Optional[int] = None
    edges: List[Edge] = []
    seen: set = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise GraphFormatError("first line must be 'n <count>'", lineno)
            n = _parse_int(tokens[1], lineno)
            if n < 0:
                raise GraphFormatError("vertex count must be nonnegative", lineno)
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected '<u> <v>', got {content!r}", lineno)
        u, v = _parse_int(tokens[0], lineno), _parse_int(tokens[1], lineno)
        edges.append(_check_edge(u, v, n, seen, lineno))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header")
    return OrderedGraph.unchecked(n, edges)


def parse_dsl(text: str) -> OrderedGraph:
    """Parse the inline form ``n=<count>;e=u-v,u-v,...`` (the ``e=`` part may be empty or absent)."""
    fields = {}
    for part in text.strip().split(";"):
        part = part.strip()
        if not part:
            continue
        key, sep, value = part.partition("=")
        if not sep or key.strip() not in ("n", "e"):
            raise GraphFormatError(f"unknown field {part!r}")
        fields[key.strip()] = value.strip()
    if "n" not in fields:
        raise GraphFormatError("missing 'n=<count>'")
    n = _parse_int(fields["n"], None)
    if n < 0:
        raise GraphFormatError("vertex count must be nonnegative")
    edges: List[Edge] = []
    seen: set = set()
    for item in filter(None, (s.strip() for s in fields.get("e", "").split(","))):
        left, sep, right = item.partition("-")
        if not sep:
            raise GraphFormatError(f"edge {item!r} must look like 'u-v'")
        edges.append(_check_edge(_parse_int(left, None), _parse_int(right, None), n, seen, None))
    return OrderedGraph.unchecked(n, edges)


def format_graph(g: OrderedGraph, header: Iterable[str] = ()) -> str:
    """Serialize to the line-based format; header lines become ``#`` comments."""
    lines = [f"# {h}" for h in header]
    lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edge_list)
    return "\n".join(lines) + "\n"


def format_dsl(g: OrderedGraph) -> str:
    return str(g)


def load_graph(source: str) -> OrderedGraph:
    """Read a graph from a file path, or parse the argument itself as inline form."""
    if source.lstrip().startswith("n="):
        return parse_dsl(source)
    path = Path(source)
    if path.is_file():
        logger.debug(f"Reading graph file {path}")
        return parse_graph(path.read_text())
    raise GraphFormatError(f"{source!r} is neither a graph file nor an inline graph")

