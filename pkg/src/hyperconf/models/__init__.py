"""Data models for the hyperconf toolkit"""

from hyperconf.models.certificate import Certificate
from hyperconf.models.search import ConfigQuery, SearchBudget
from hyperconf.models.solver import PackConstraints, SolverOptions
from hyperconf.models.run import Command, OutputFormat, RunConfig

__all__ = [
    # Certificates
    "Certificate",
    # Search options
    "SearchBudget",
    "ConfigQuery",
    # Solver options
    "SolverOptions",
    "PackConstraints",
    # Command line
    "Command",
    "OutputFormat",
    "RunConfig",
]
