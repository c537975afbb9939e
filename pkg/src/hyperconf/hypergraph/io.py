"""
Text format for hypergraphs.

Line 1 holds ``r n m``; each of the next m non-comment lines holds the r
vertex ids of one edge in strictly increasing order, separated by single
spaces. Lines starting with ``#`` are comments. Serialization always writes
the canonical edge order with LF line endings and a trailing newline.
"""

from pathlib import Path
from typing import List, Union

from hyperconf.exceptions.errors import HypergraphException, HypergraphParseError
from hyperconf.hypergraph.core import Hypergraph, build
from hyperconf.utils.helpers import ensure_parent
from hyperconf.utils.logger import get_logger

logger = get_logger(__name__)


def _ints(line: str, line_no: int) -> List[int]:
    tokens = line.split(" ")
    if any(tok == "" for tok in tokens):
        raise HypergraphParseError(
            f"Line {line_no}: values must be separated by single spaces",
            details={"line": line_no, "text": line},
        )
    if not all(tok.isascii() and tok.isdigit() for tok in tokens):
        raise HypergraphParseError(
            f"Line {line_no}: expected base-10 integers", details={"line": line_no, "text": line}
        )
    return [int(tok) for tok in tokens]


def parse_hypergraph(text: str) -> Hypergraph:
    """
    Parse the text format into a canonical hypergraph.

    Args:
        text: File contents

    Returns:
        Hypergraph

    Raises:
        HypergraphParseError: Malformed header, edge line or edge count
        HypergraphException: Subclasses raised by :func:`build` (duplicates, range)

    Example:
        >>> parse_hypergraph("3 4 2\\n0 1 2\\n1 2 3\\n").edges
        ((0, 1, 2), (1, 2, 3))
    """
    header = None
    edges: List[List[int]] = []
    edge_lines: List[int] = []

    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line or line.startswith("#"):
            continue
        values = _ints(line, line_no)
        if header is None:
            if len(values) != 3:
                raise HypergraphParseError(
                    f"Line {line_no}: header must be 'r n m'", details={"line": line_no}
                )
            header = values
            continue
        if any(a >= b for a, b in zip(values, values[1:])):
            raise HypergraphParseError(
                f"Line {line_no}: vertex ids must be strictly increasing",
                details={"line": line_no, "edge": values},
            )
        edges.append(values)
        edge_lines.append(line_no)

    if header is None:
        raise HypergraphParseError("Missing header line 'r n m'", details={"line": 1})

    r, n, m = header
    if len(edges) != m:
        raise HypergraphParseError(
            f"Header declares {m} edges but {len(edges)} were found",
            details={"declared": m, "found": len(edges)},
        )
    for values, line_no in zip(edges, edge_lines):
        if len(values) != r:
            raise HypergraphParseError(
                f"Line {line_no}: expected {r} vertex ids, got {len(values)}",
                details={"line": line_no, "edge": values},
            )

    try:
        return build(r, n, edges)
    except HypergraphParseError:
        raise
    except HypergraphException as e:
        logger.debug(f"Rejected parsed hypergraph: {e.message}")
        raise


def serialize_hypergraph(F: Hypergraph) -> str:
    """Render ``F`` in the canonical text format."""
    lines = [f"{F.r} {F.n} {F.m}"]
    lines.extend(" ".join(str(v) for v in e) for e in F.edges)
    return "\n".join(lines) + "\n"


def read_hypergraph(path: Union[str, Path]) -> Hypergraph:
    """Read and parse a hypergraph file."""
    file_path = Path(path)
    try:
        text = file_path.read_text(encoding="utf-8")
    except OSError as e:
        raise HypergraphParseError(
            f"Cannot read hypergraph file: {file_path}", details={"path": str(file_path)}
        ) from e
    except UnicodeDecodeError as e:
        raise HypergraphParseError(
            f"Hypergraph file is not valid UTF-8: {file_path}",
            details={"path": str(file_path), "offset": e.start},
        ) from e
    logger.debug(f"Read hypergraph file {file_path}")
    return parse_hypergraph(text)


def write_hypergraph(F: Hypergraph, path: Union[str, Path]) -> Path:
    """Write ``F`` to ``path`` (parent directories are created)."""
    file_path = ensure_parent(path)
    with open(file_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_hypergraph(F))
    return file_path
