# tests/conftest.py
"""Shared fixtures.

Logs go to a throwaway directory; the variable must be set before any
``src`` module configures the root logger.
"""

import os
import tempfile

os.environ.setdefault("LOG_DIR", tempfile.mkdtemp(prefix="domset-logs-"))

import pytest

from src.core.config import Config
from src.graphs import Graph


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Reload config.yaml from the repository for every test."""
    monkeypatch.delenv("DOMSET_CONFIG", raising=False)
    Config.reset()
    yield
    Config.reset()


@pytest.fixture
def path3():
    """Path 0 - 1 - 2."""
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def edgeless3():
    return Graph.empty(3)


@pytest.fixture
def k4():
    return Graph.complete(4)


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@pytest.fixture
def small_config(tmp_path, monkeypatch):
    """Point DOMSET_CONFIG at a config with tiny enumeration guards."""
    path = tmp_path / "config.yaml"
    path.write_text(
        "guards:\n"
        "  oracle_max_n: 6\n"
        "  exhaustive_max_n: 6\n"
        "  classify_max_n: 4\n"
        "  monte_carlo_max_n: 4\n"
        "harness:\n"
        "  workers: 2\n"
        "  master_seed: 7\n",
        encoding="utf-8",
    )
    monkeypatch.setenv("DOMSET_CONFIG", str(path))
    Config.reset()
    return path
