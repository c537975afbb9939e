"""Hypergraph representation and elementary set computations"""

from hyperconf.hypergraph.core import (
    Configuration,
    CoverProfile,
    Hypergraph,
    Params,
    TGraph,
    build,
    check_uniformity,
    config_bound,
    cover_profile,
    mask_of,
    span,
    t_shadow,
    t_tight_components,
    vertices_of,
)
from hyperconf.hypergraph.io import (
    parse_hypergraph,
    read_hypergraph,
    serialize_hypergraph,
    write_hypergraph,
)

__all__ = [
    # Types
    "Hypergraph",
    "Params",
    "Configuration",
    "TGraph",
    "CoverProfile",
    # Operations
    "build",
    "check_uniformity",
    "span",
    "config_bound",
    "t_shadow",
    "cover_profile",
    "t_tight_components",
    "mask_of",
    "vertices_of",
    # Text format
    "parse_hypergraph",
    "serialize_hypergraph",
    "read_hypergraph",
    "write_hypergraph",
]
