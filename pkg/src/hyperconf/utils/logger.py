"""
structlog setup for the toolkit.

Log records always go to stderr (or a given stream); stdout belongs to
command results. Records emitted inside a :func:`run_context` carry the run
id and command name.
"""

import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional, TextIO

import structlog

_SHARED: List[structlog.types.Processor] = [
    structlog.contextvars.merge_contextvars,
    structlog.stdlib.add_logger_name,
    structlog.stdlib.add_log_level,
    structlog.processors.TimeStamper(fmt="iso"),
    structlog.processors.StackInfoRenderer(),
    structlog.processors.format_exc_info,
]


def _handler(handler: logging.Handler, renderer: structlog.types.Processor) -> logging.Handler:
    handler.setFormatter(
        structlog.stdlib.ProcessorFormatter(
            foreign_pre_chain=_SHARED,
            processors=[structlog.stdlib.ProcessorFormatter.remove_processors_meta, renderer],
        )
    )
    return handler


def setup_logging(
    log_level: str = "INFO",
    log_file: Optional[str] = None,
    pretty_print: bool = True,
    stream: Optional[TextIO] = None,
) -> None:
    """
    Configure structlog and the root handlers.

    Args:
        log_level: DEBUG, INFO, WARNING, ERROR or CRITICAL
        log_file: Also write JSON records to this file
        pretty_print: Console rendering instead of JSON on the stream
        stream: Console stream (default: sys.stderr)
    """
    level = getattr(logging, log_level.upper(), logging.INFO)

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            *_SHARED,
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )

    console = structlog.dev.ConsoleRenderer() if pretty_print else structlog.processors.JSONRenderer()
    handlers = [_handler(logging.StreamHandler(stream or sys.stderr), console)]
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(_handler(logging.FileHandler(log_file), structlog.processors.JSONRenderer()))

    root = logging.getLogger()
    for old in list(root.handlers):
        if isinstance(old.formatter, structlog.stdlib.ProcessorFormatter):
            root.removeHandler(old)
            old.close()
    for handler in handlers:
        root.addHandler(handler)
    root.setLevel(level)


@contextmanager
def run_context(run_id: str, command: str) -> Iterator[None]:
    """Bind ``run_id`` and ``command`` to every record logged inside the block."""
    with structlog.contextvars.bound_contextvars(run_id=run_id, command=command):
        yield


def get_logger(name: str = "hyperconf") -> structlog.stdlib.BoundLogger:
    """
    Logger for a module, normally ``get_logger(__name__)``.

    Example:
        >>> logger = get_logger(__name__)
        >>> logger.info("Search finished after 1024 nodes")
    """
    return structlog.get_logger(name)
