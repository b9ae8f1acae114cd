"""Ordered-graph representation, containment, structure and densities."""

from ordered_ramsey.core.density import density_m, density_m2, density_m2_asym
from ordered_ramsey.core.graph import (
    Edge,
    Embedding,
    OrderedGraph,
    contains,
    embedding_masks,
    find_embeddings,
    iter_embeddings,
    mirror,
)
from ordered_ramsey.core.io import format_dsl, format_graph, load_graph, parse_dsl, parse_graph
from ordered_ramsey.core.obstructions import (
    detect_bonnet,
    detect_tangled_path,
    is_right_caterpillar_certified,
)
from ordered_ramsey.core.structure import (
    DefiningSequence,
    StructureReport,
    classify_structure,
    crossing,
    decompose_loosely,
    displayed_vertices,
    extract_defining_sequence,
    extract_left_defining_sequence,
    is_loosely_connected,
)

__all__ = [
    "DefiningSequence",
    "Edge",
    "Embedding",
    "OrderedGraph",
    "StructureReport",
    "classify_structure",
    "contains",
    "crossing",
    "decompose_loosely",
    "density_m",
    "density_m2",
    "density_m2_asym",
    "detect_bonnet",
    "detect_tangled_path",
    "displayed_vertices",
    "embedding_masks",
    "extract_defining_sequence",
    "extract_left_defining_sequence",
    "find_embeddings",
    "format_dsl",
    "format_graph",
    "is_loosely_connected",
    "is_right_caterpillar_certified",
    "iter_embeddings",
    "load_graph",
    "mirror",
    "parse_dsl",
    "parse_graph",
]
