"""
ResultStore - persistent cache of definitive arrow answers and minimal families.

Records are keyed by the inline form of the graphs involved, which is
canonical for ordered graphs. Only definitive answers are stored: a search
that ran out of budget leaves no trace here.
"""

import json
import logging
import os
from typing import List, Optional

from pydantic import BaseModel
from sqlite_utils import Database
from sqlite_utils.db import NotFoundError

from ordered_ramsey.arrow.search import ArrowCertificate, ArrowVerdict
from ordered_ramsey.colorings.coloring import parse_coloring
from ordered_ramsey.config import RESULTS_DB_PATH, ensure_data_directory
from ordered_ramsey.core.graph import OrderedGraph
from ordered_ramsey.core.io import format_dsl, parse_dsl

# Set up logging
logger = logging.getLogger(__name__)

ARROW_TABLE = "arrow_results"
FAMILY_TABLE = "minimal_families"


class StoredFamily(BaseModel):
    """A cached enumerate_minimal result."""

    h: str
    h2: str
    max_vertices: int
    max_edges: int
    members: List[str]


class ResultStore:
    """
    SQLite-backed cache for arrow certificates and minimal-graph enumerations.

    The tables are created on first use; a store at a fresh path is empty.
    """

    def __init__(self, path: Optional[str] = None):
        """
        Open (or create) the result database.

        Args:
            path: Database file; defaults to RESULTS_DB_PATH in the data directory
        """
        self.path = path or RESULTS_DB_PATH
        logger.info(f"Opening result store: {self.path}")
        if path is None:
            ensure_data_directory()
        directory = os.path.dirname(self.path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        self.db = Database(self.path)
        self.db[ARROW_TABLE].create(
            {"f": str, "h": str, "h2": str, "verdict": str, "witness": str, "nodes": int},
            pk=("f", "h", "h2"),
            if_not_exists=True,
        )
        self.db[FAMILY_TABLE].create(
            {"h": str, "h2": str, "max_vertices": int, "max_edges": int, "members": str},
            pk=("h", "h2", "max_vertices", "max_edges"),
            if_not_exists=True,
        )

    def get_arrow(self, f: OrderedGraph, h: OrderedGraph, h2: OrderedGraph) -> Optional[ArrowCertificate]:
        """
        Look up a cached arrow certificate.

        Returns:
            The certificate, or None on a miss
        """
        try:
            row = self.db[ARROW_TABLE].get((format_dsl(f), format_dsl(h), format_dsl(h2)))
        except NotFoundError:
            logger.debug(f"Cache miss for {f}")
            return None
        witness = parse_coloring(row["witness"], f) if row["witness"] else None
        logger.debug(f"Cache hit for {f}: {row['verdict']}")
        return ArrowCertificate(verdict=ArrowVerdict(row["verdict"]), witness=witness, nodes=row["nodes"])

    def put_arrow(self, f: OrderedGraph, h: OrderedGraph, h2: OrderedGraph, cert: ArrowCertificate) -> None:
        self.db[ARROW_TABLE].insert(
            {
                "f": format_dsl(f),
                "h": format_dsl(h),
                "h2": format_dsl(h2),
                "verdict": cert.verdict.value,
                "witness": cert.witness.to_text() if cert.witness is not None else "",
                "nodes": cert.nodes,
            },
            replace=True,
        )
        logger.info(f"Stored {cert.verdict.value} for {f}")

    def get_family(
        self, h: OrderedGraph, h2: OrderedGraph, max_vertices: int, max_edges: Optional[int] = None
    ) -> Optional[List[OrderedGraph]]:
        key = (format_dsl(h), format_dsl(h2), max_vertices, -1 if max_edges is None else max_edges)
        try:
            row = self.db[FAMILY_TABLE].get(key)
        except NotFoundError:
            logger.debug(f"No cached family for ({h}, {h2})")
            return None
        return [parse_dsl(text) for text in json.loads(row["members"])]

    def put_family(
        self,
        h: OrderedGraph,
        h2: OrderedGraph,
        max_vertices: int,
        members: List[OrderedGraph],
        max_edges: Optional[int] = None,
    ) -> None:
        self.db[FAMILY_TABLE].insert(
            {
                "h": format_dsl(h),
                "h2": format_dsl(h2),
                "max_vertices": max_vertices,
                "max_edges": -1 if max_edges is None else max_edges,
                "members": json.dumps([format_dsl(g) for g in members]),
            },
            replace=True,
        )
        logger.info(f"Stored {len(members)} minimal graphs for ({h}, {h2})")

    def arrow_rows(self) -> List[dict]:
        return list(self.db[ARROW_TABLE].rows)

    def families(self) -> List[StoredFamily]:
        return [
            StoredFamily(
                h=row["h"],
                h2=row["h2"],
                max_vertices=row["max_vertices"],
                max_edges=row["max_edges"],
                members=json.loads(row["members"]),
            )
            for row in self.db[FAMILY_TABLE].rows
        ]
