# src/graphs/sampling.py
"""Seeded G(n, p) sampling and labeled-graph enumeration.

Sampling uses numpy's ``Generator(PCG64(seed))``. One uniform double is drawn
per vertex pair, in row-major order over pairs (v, w) with v < w ascending, and
the pair becomes an edge iff its draw is < p. PCG64's output stream and
``Generator.random`` are fixed by numpy across platforms, so a (n, p, seed)
triple always yields the same edge set.
"""

from itertools import combinations
from typing import Iterator

import numpy as np

from ..core.errors import ParameterError
from ..core.seeding import MASK64
from .model import Graph


def gnp_sample(n: int, p: float, seed: int) -> Graph:
    """Sample G(n, p) deterministically from ``seed``."""
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"p must be in [0, 1], got {p}")
    if not 0 <= seed <= MASK64:
        raise ParameterError(f"seed must be an unsigned 64-bit integer, got {seed}")

    rng = np.random.Generator(np.random.PCG64(seed))
    draws = rng.random(n * (n - 1) // 2)
    rows = [0] * n
    for (v, w), keep in zip(combinations(range(n), 2), draws < p):
        if keep:
            rows[v] |= 1 << w
            rows[w] |= 1 << v
    return Graph(n, tuple(rows))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, 2**C(n, 2) of them.

    Graph number ``code`` contains the i-th pair of the row-major pair order
    iff bit i of ``code`` is set.
    """
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pair for i, pair in enumerate(pairs) if code >> i & 1))
