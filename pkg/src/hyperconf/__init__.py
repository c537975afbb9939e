"""
Hyperconf - (s,k)-configuration toolkit for r-uniform hypergraphs

Configuration search, cleaning, density reductions, exact extremal numbers
at small n and the closed-form limit values they support.
"""

__version__ = "0.1.0"
__author__ = "Hyperconf Team"

from hyperconf.hypergraph import Hypergraph, Params, build, read_hypergraph, write_hypergraph
from hyperconf.search import find_configuration, is_free

__all__ = [
    "Hypergraph",
    "Params",
    "build",
    "read_hypergraph",
    "write_hypergraph",
    "find_configuration",
    "is_free",
]
