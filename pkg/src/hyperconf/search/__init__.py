"""Configuration search, freeness predicates and disjoint collections"""

from hyperconf.search.cancellation import SearchToken, create_search_token
from hyperconf.search.configurations import (
    contains_two_configuration,
    contains_two_configuration_filter,
    disjointness_splits,
    edges_in_configurations,
    find_overlapping_pair,
    maximal_disjoint_collection,
    sub_configurations,
    two_configs_through_edge,
    two_configs_through_tset,
)
from hyperconf.search.engine import (
    check_query,
    enumerate_configurations,
    find_configuration,
    find_witness,
    is_free,
    iter_configurations,
)

__all__ = [
    # Engine
    "check_query",
    "iter_configurations",
    "find_configuration",
    "enumerate_configurations",
    "is_free",
    "find_witness",
    # Derived queries
    "two_configs_through_edge",
    "two_configs_through_tset",
    "maximal_disjoint_collection",
    "edges_in_configurations",
    "find_overlapping_pair",
    "disjointness_splits",
    "sub_configurations",
    "contains_two_configuration",
    "contains_two_configuration_filter",
    # Budget
    "SearchToken",
    "create_search_token",
]
