"""
Option models for configuration searches.
"""

from typing import ClassVar, FrozenSet, Optional, Tuple, Type

from pydantic import ConfigDict, Field, field_validator, model_validator

from hyperconf.exceptions.errors import InvalidQuery, ValidationException
from hyperconf.hypergraph.core import Params, config_bound
from hyperconf.models.base import CheckedModel
from hyperconf.utils.config import get_config


class SearchBudget(CheckedModel):
    """Node and result limits for one search."""

    model_config = ConfigDict(frozen=True)

    max_nodes: int = Field(default_factory=lambda: get_config().search_max_nodes, gt=0)
    max_results: int = Field(default_factory=lambda: get_config().search_max_results, gt=0)


class ConfigQuery(CheckedModel):
    """
    What a configuration search looks for.

    ``ell`` edges spanning at most ``s_max`` vertices, containing every edge of
    ``must_contain``, none of ``disjoint_from``, and whose vertex set contains
    ``must_cover`` when given.

    Invalid field combinations raise :class:`InvalidQuery`.

    Example:
        >>> ConfigQuery(ell=2, s_max=4)
        ConfigQuery(ell=2, s_max=4, must_contain=frozenset(), must_cover=None, disjoint_from=frozenset())
    """

    model_config = ConfigDict(frozen=True)
    error_class: ClassVar[Type[ValidationException]] = InvalidQuery

    ell: int = Field(..., ge=1, description="Number of edges")
    s_max: int = Field(..., ge=1, description="Span ceiling")
    must_contain: FrozenSet[int] = Field(default_factory=frozenset)
    must_cover: Optional[Tuple[int, ...]] = None
    disjoint_from: FrozenSet[int] = Field(default_factory=frozenset)

    @field_validator("must_cover")
    @classmethod
    def _canonical_cover(cls, v: Optional[Tuple[int, ...]]) -> Optional[Tuple[int, ...]]:
        if v is None:
            return None
        if len(set(v)) != len(v):
            raise ValueError("must_cover has repeated vertices")
        if any(x < 0 for x in v):
            raise ValueError("must_cover has negative vertex ids")
        return tuple(sorted(v))

    @model_validator(mode="after")
    def _consistent(self) -> "ConfigQuery":
        if len(self.must_contain) > self.ell:
            raise ValueError(f"must_contain has more than ell={self.ell} edges")
        if self.must_contain & self.disjoint_from:
            raise ValueError("must_contain and disjoint_from overlap")
        return self

    @classmethod
    def for_params(cls, params: Params, ell: int, minus: bool = False, **kwargs) -> "ConfigQuery":
        """Query for ell-configurations (or ell-minus ones) of the given params."""
        return cls(ell=ell, s_max=config_bound(params, ell, minus), **kwargs)
