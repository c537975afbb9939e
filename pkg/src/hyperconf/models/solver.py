"""
Option models for the extremal solver and the greedy packer.
"""

from typing import FrozenSet, Optional

from pydantic import ConfigDict, Field, field_validator

from hyperconf.hypergraph.core import Hypergraph
from hyperconf.models.base import CheckedModel
from hyperconf.utils.config import get_config


class SolverOptions(CheckedModel):
    """Limits and switches for :func:`hyperconf.solver.exact_f`."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    node_limit: int = Field(default_factory=lambda: get_config().solver_node_limit, gt=0)
    time_limit: float = Field(default_factory=lambda: get_config().solver_time_limit, gt=0)
    symmetry_pruning: bool = False
    incumbent_seed: Optional[Hypergraph] = None
    seed: int = Field(default=0, ge=0, description="Seed of the greedy starting incumbent")


class PackConstraints(CheckedModel):
    """
    Constraints a greedily packed hypergraph must satisfy.

    k-freeness is always enforced. ``minus_free`` lists extra sizes l for
    which the result must be l-minus-free; ``no_three_minus_with_two`` and
    ``split_disjoint`` add the two structural cleaning properties.
    """

    model_config = ConfigDict(frozen=True)

    minus_free: FrozenSet[int] = Field(default_factory=frozenset)
    no_three_minus_with_two: bool = False
    split_disjoint: bool = False
    candidate_limit: int = Field(default_factory=lambda: get_config().pack_candidate_limit, gt=0)
    max_attempts: int = Field(default_factory=lambda: get_config().pack_max_attempts, gt=0)

    @field_validator("minus_free")
    @classmethod
    def _sizes_at_least_two(cls, v: FrozenSet[int]) -> FrozenSet[int]:
        if any(ell < 2 for ell in v):
            raise ValueError("minus_free sizes must be >= 2")
        return v
