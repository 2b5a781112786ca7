"""Monochromatic vertex-disconnection numbers of undirected graphs.

A vertex cut is monochromatic when all its vertices share one color; a
coloring passes when every nonadjacent pair has a monochromatic cut
separating it.  The library computes the maximum number of colors any passing
coloring can use, produces a certified coloring, and verifies certificates
independently.
"""

from .analysis import (
    BoundReport,
    ClassificationResult,
    GateError,
    bound_blocks,
    bound_half_order,
    classify,
    triangle_blocks_value,
)
from .blocks import Block, BlockDecomposition, DfsRecord, decompose, naive_cut_vertices
from .catalog import (
    Catalog,
    CatalogEntry,
    CatalogError,
    build_catalog,
    generate_minimal_blocks,
    is_minimally_two_connected,
    load_catalog,
    save_catalog,
    theta_graph,
    triangle_free,
)
from .graph import (
    Graph,
    GraphFormatError,
    GuardError,
    complete_graph,
    cycle_graph,
    format_matrix,
    induced_subgraph,
    is_connected,
    is_k_connected,
    load_graph,
    parse_matrix,
    path_graph,
    remove_vertices,
    separates,
    simplify,
    star_graph,
    to_dot,
)
from .iso import canonical_form, find_isomorphism, transfer_coloring
from .solve import (
    MvdResult,
    counting_formula,
    mvd_compose,
    mvd_closed_form,
    mvd_exact,
    mvd_via_blocks,
    stitch_colorings,
)
from .verify import MvdVerdict, is_mvd_coloring, monochromatic_cut_exists, restrict

__all__ = [
    "Block",
    "BlockDecomposition",
    "BoundReport",
    "Catalog",
    "CatalogEntry",
    "CatalogError",
    "ClassificationResult",
    "DfsRecord",
    "GateError",
    "Graph",
    "GraphFormatError",
    "GuardError",
    "MvdResult",
    "MvdVerdict",
    "bound_blocks",
    "bound_half_order",
    "build_catalog",
    "canonical_form",
    "classify",
    "complete_graph",
    "counting_formula",
    "cycle_graph",
    "decompose",
    "find_isomorphism",
    "format_matrix",
    "generate_minimal_blocks",
    "induced_subgraph",
    "is_connected",
    "is_k_connected",
    "is_minimally_two_connected",
    "is_mvd_coloring",
    "load_catalog",
    "load_graph",
    "monochromatic_cut_exists",
    "mvd_closed_form",
    "mvd_compose",
    "mvd_exact",
    "mvd_via_blocks",
    "naive_cut_vertices",
    "parse_matrix",
    "path_graph",
    "remove_vertices",
    "restrict",
    "save_catalog",
    "separates",
    "simplify",
    "star_graph",
    "stitch_colorings",
    "theta_graph",
    "to_dot",
    "transfer_coloring",
    "triangle_blocks_value",
    "triangle_free",
]

__version__ = "0.1.0"
