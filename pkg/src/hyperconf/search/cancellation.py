"""
Budget token for long-running searches.

A token counts search-tree nodes and watches an optional wall-clock deadline.
Searches call :meth:`SearchToken.tick` once per node; configuration searches
turn an exhausted token into :class:`BudgetExhausted`, while the extremal
solver stops and reports an incomplete result.
"""

import time
from typing import Optional

from hyperconf.exceptions.errors import BudgetExhausted

# wall clock is read once per this many ticks
_CLOCK_STRIDE = 1024


class SearchToken:
    """Node counter with an optional node limit, deadline and manual cancel."""

    def __init__(self, max_nodes: Optional[int] = None, time_limit: Optional[float] = None):
        self.max_nodes = max_nodes
        self.time_limit = time_limit
        self.nodes = 0
        self._cancelled = False
        self._started = time.monotonic()
        self._deadline = self._started + time_limit if time_limit is not None else None
        self.reason: Optional[str] = None

    def cancel(self, reason: str = "cancelled") -> None:
        """Stop the search at its next node."""
        self._cancelled = True
        self.reason = self.reason or reason

    @property
    def is_cancelled(self) -> bool:
        return self._cancelled

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self._started

    def tick(self) -> bool:
        """Count one node; return True once the search must stop."""
        self.nodes += 1
        if self._cancelled:
            return True
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            self.cancel("node_limit")
            return True
        if self._deadline is not None and self.nodes % _CLOCK_STRIDE == 0:
            if time.monotonic() > self._deadline:
                self.cancel("time_limit")
                return True
        return False

    def throw_if_exhausted(self) -> None:
        """Count one node and raise BudgetExhausted once the budget is spent."""
        if self.tick():
            raise BudgetExhausted(
                f"Search stopped after {self.nodes} nodes ({self.reason})",
                details={"nodes": self.nodes, "max_nodes": self.max_nodes, "reason": self.reason},
            )

    def __enter__(self) -> "SearchToken":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        pass


def create_search_token(
    max_nodes: Optional[int] = None, time_limit: Optional[float] = None
) -> SearchToken:
    """Create a new search token (no limits by default)."""
    return SearchToken(max_nodes=max_nodes, time_limit=time_limit)
