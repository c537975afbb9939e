"""Custom exceptions for the hyperconf toolkit"""

from hyperconf.exceptions.errors import (
    BadArgs,
    BadT,
    BudgetExhausted,
    CaseAnalysisExhausted,
    ClaimViolation,
    ComponentTooLarge,
    ConfigurationException,
    DuplicateEdge,
    HyperconfException,
    HypergraphException,
    HypergraphParseError,
    HypergraphTooLarge,
    HypothesisViolated,
    IndexOutOfRange,
    InvalidParams,
    InvalidQuery,
    LedgerBoundViolated,
    NonUniformEdge,
    NoTwoConfiguration,
    NotKFree,
    NotSupporting,
    PreconditionException,
    PreconditionViolated,
    SearchException,
    TheoremViolation,
    ValidationException,
    VertexOutOfRange,
)

__all__ = [
    "HyperconfException",
    "ConfigurationException",
    # Hypergraph input
    "HypergraphException",
    "NonUniformEdge",
    "VertexOutOfRange",
    "DuplicateEdge",
    "IndexOutOfRange",
    "BadT",
    "HypergraphParseError",
    "HypergraphTooLarge",
    # Validation
    "ValidationException",
    "InvalidParams",
    "InvalidQuery",
    "BadArgs",
    "NotSupporting",
    "HypothesisViolated",
    # Search
    "SearchException",
    "BudgetExhausted",
    # Preconditions
    "PreconditionException",
    "NotKFree",
    "PreconditionViolated",
    "ComponentTooLarge",
    "NoTwoConfiguration",
    # Theorem checks
    "TheoremViolation",
    "ClaimViolation",
    "CaseAnalysisExhausted",
    "LedgerBoundViolated",
]
