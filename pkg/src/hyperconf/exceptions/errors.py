"""
Custom exceptions for the hyperconf toolkit.

This module defines all custom exception classes used throughout the package.
"""

from typing import Any, Dict, Optional


class HyperconfException(Exception):
    """Base exception for all hyperconf errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary for structured output."""
        return {
            "error": self.__class__.__name__,
            "message": self.message,
            "details": self.details,
        }


class ConfigurationException(HyperconfException):
    """Exception raised for configuration errors."""

    pass


# Hypergraph construction and parsing


class HypergraphException(HyperconfException):
    """Exception raised for malformed hypergraph input."""

    pass


class NonUniformEdge(HypergraphException):
    pass


class VertexOutOfRange(HypergraphException):
    pass


class DuplicateEdge(HypergraphException):
    pass


class IndexOutOfRange(HypergraphException):
    pass


class BadT(HypergraphException):
    pass


class HypergraphParseError(HypergraphException):
    pass


class HypergraphTooLarge(HypergraphException):
    pass


# Argument validation


class ValidationException(HyperconfException):
    """Exception raised for invalid arguments or parameters."""

    pass


class InvalidParams(ValidationException):
    pass


class InvalidQuery(ValidationException):
    pass


class BadArgs(ValidationException):
    pass


class NotSupporting(ValidationException):
    """J misses a member of the t-shadow."""

    pass


class HypothesisViolated(ValidationException):
    """A stated hypothesis of an inequality does not hold."""

    def __init__(self, which: str, message: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        self.which = which
        payload = {"which": which}
        payload.update(details or {})
        super().__init__(message or f"Hypothesis violated: {which}", payload)


# Search


class SearchException(HyperconfException):
    """Exception raised by configuration searches."""

    pass


class BudgetExhausted(SearchException):
    """The search hit its node budget before finishing (result unknown)."""

    pass


# Preconditions of pipelines (all carry a witness in details["witness"])


class PreconditionException(HyperconfException):
    """Exception raised when an input does not satisfy an operation's precondition."""

    @property
    def witness(self) -> Any:
        return self.details.get("witness")


class NotKFree(PreconditionException):
    pass


class PreconditionViolated(PreconditionException):
    pass


class ComponentTooLarge(PreconditionException):
    pass


class NoTwoConfiguration(PreconditionException):
    pass


# Proven inequalities that failed on valid input: always a defect


class TheoremViolation(HyperconfException):
    """Exception raised when a proven inequality fails on input satisfying its hypotheses."""

    pass


class ClaimViolation(TheoremViolation):
    pass


class CaseAnalysisExhausted(TheoremViolation):
    pass


class LedgerBoundViolated(TheoremViolation):
    pass
