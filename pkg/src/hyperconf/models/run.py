"""
Run configuration for the command line.
"""

from enum import Enum
from pathlib import Path
from typing import FrozenSet, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Command(str, Enum):
    CHECK = "check"
    SHADOW = "shadow"
    COMPONENTS = "components"
    CLEAN = "clean"
    REDUCE = "reduce"
    BOUNDS = "bounds"
    SOLVE = "solve"
    PACK = "pack"
    VERIFY_CLAIMS = "verify-claims"


class OutputFormat(str, Enum):
    TEXT = "text"
    STRUCTURED = "structured"


# fields each command cannot run without
_REQUIRED = {
    Command.CHECK: ("input", "t", "k", "ell"),
    Command.SHADOW: ("input", "t"),
    Command.COMPONENTS: ("input", "t"),
    Command.CLEAN: ("input", "t", "k"),
    Command.REDUCE: ("input", "t", "k"),
    Command.BOUNDS: (),
    Command.SOLVE: ("r", "t", "k", "n"),
    Command.PACK: ("r", "t", "k", "n"),
    Command.VERIFY_CLAIMS: (),
}


class RunConfig(BaseModel):
    """
    One command-line run.

    Hypergraph files fix r, n and the edges; t and k always come from the
    command line.

    Example:
        >>> RunConfig(command="solve", r=3, t=2, k=2, n=7).command
        <Command.SOLVE: 'solve'>
    """

    model_config = ConfigDict(frozen=True)

    command: Command
    r: Optional[int] = Field(default=None, ge=2)
    t: Optional[int] = Field(default=None, ge=1)
    k: Optional[int] = Field(default=None, ge=2)
    ell: Optional[int] = Field(default=None, ge=2, description="Configuration size for check")
    minus: bool = False
    n: Optional[int] = Field(default=None, ge=1)

    input: Optional[Path] = None
    output: Optional[Path] = None
    csv: Optional[Path] = None
    output_format: OutputFormat = OutputFormat.TEXT

    # search and solver budgets (settings apply when unset)
    max_nodes: Optional[int] = Field(default=None, gt=0)
    node_limit: Optional[int] = Field(default=None, gt=0)
    time_limit: Optional[float] = Field(default=None, gt=0)
    symmetry_pruning: bool = False
    seed: int = Field(default=0, ge=0)
    workers: int = Field(default=1, ge=1)

    # command options
    clean_first: bool = False
    table: bool = False
    minus_free: FrozenSet[int] = Field(default_factory=frozenset)
    no_three_minus_with_two: bool = False
    split_disjoint: bool = False
    r_max: Optional[int] = Field(default=None, ge=2)
    t_max: Optional[int] = Field(default=None, ge=1)
    k_max: Optional[int] = Field(default=None, ge=2)
    samples: Optional[int] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _required_fields(self) -> "RunConfig":
        missing = [name for name in _REQUIRED[self.command] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.command.value} needs {', '.join(missing)}")
        if self.command is Command.REDUCE and self.k not in (5, 7):
            raise ValueError(f"reduce supports k=5 and k=7, got k={self.k}")
        return self
