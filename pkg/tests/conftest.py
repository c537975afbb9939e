"""
Pytest configuration and shared fixtures for hyperconf tests.

This module provides common test fixtures and configuration used across
all test modules.
"""

import logging
import os
import sys
from pathlib import Path

import pytest
import structlog

# Add src directory to Python path
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))

from hyperconf.hypergraph import build  # noqa: E402
from hyperconf.utils.config import configure  # noqa: E402


@pytest.fixture(autouse=True)
def default_settings(monkeypatch):
    """Fresh settings per test, unaffected by a developer's .env or HYPERCONF_* variables."""
    for key in list(os.environ):
        if key.startswith("HYPERCONF_"):
            monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(Path(__file__).parent)
    configure()
    yield
    configure()
    root = logging.getLogger()
    for handler in list(root.handlers):
        if isinstance(handler.formatter, structlog.stdlib.ProcessorFormatter):
            root.removeHandler(handler)
            handler.close()


@pytest.fixture(scope="session")
def fixtures_dir():
    """Path to test fixtures directory."""
    return Path(__file__).parent / "fixtures"


@pytest.fixture
def path_pair():
    """Two triples sharing a pair: the smallest 2-configuration at (3, 2)."""
    return build(3, 4, [[0, 1, 2], [1, 2, 3]])


@pytest.fixture
def fano():
    """The Fano plane: 7 triples, every pair of points on exactly one line."""
    return build(
        3,
        7,
        [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]],
    )


@pytest.fixture
def k4_triples():
    """All four triples on {0, 1, 2, 3}."""
    return build(3, 6, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])


@pytest.fixture
def write_graph(tmp_path):
    """Write a hypergraph file and return its path."""

    def _write(r, n, edges, name="graph.txt"):
        path = tmp_path / name
        lines = [f"{r} {n} {len(edges)}"] + [" ".join(map(str, e)) for e in edges]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    return _write


# Pytest configuration
def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "slow: marks tests as slow (deselect with '-m \"not slow\"')"
    )
    config.addinivalue_line(
        "markers", "integration: marks tests as integration tests"
    )
    config.addinivalue_line(
        "markers", "unit: marks tests as unit tests"
    )
