# src/graphs/domination.py
"""Domination predicates and the brute-force ground-truth oracles."""

from itertools import combinations
from typing import Sequence, Tuple

from ..core.config import load_config
from ..core.errors import GuardLimitError, ParameterError
from ..core.logger import get_logger
from .model import Graph, VertexSet

log = get_logger(__name__)


def is_dominating_bits(closed: Sequence[int], bits: int) -> bool:
    """True iff ``bits`` meets every closed neighborhood in ``closed``."""
    return all(nb & bits for nb in closed)


def is_dominating(g: Graph, s: VertexSet) -> bool:
    """True iff every vertex is in ``s`` or adjacent to a member of ``s``."""
    if s.n != g.n:
        raise ParameterError(f"vertex set is over {s.n} vertices, graph has {g.n}")
    return is_dominating_bits(g.closed_neighborhoods(), s.bits)


def oracle_search(g: Graph) -> Tuple[int, VertexSet, int]:
    """Enumerate subsets by increasing cardinality; stop at the first dominating one.

    Subsets of equal size are tried in ``itertools.combinations`` order.
    Returns (size, witness, subsets examined).
    """
    limit = load_config().value("guards", "oracle_max_n", 25)
    if g.n < 1:
        raise ParameterError("oracle needs n >= 1")
    if g.n > limit:
        raise GuardLimitError("domination_number_oracle", g.n, limit)

    closed = g.closed_neighborhoods()
    examined = 0
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            examined += 1
            bits = 0
            for v in combo:
                bits |= 1 << v
            if is_dominating_bits(closed, bits):
                log.debug(f"oracle: gamma={size} on n={g.n} after {examined} subsets")
                return size, VertexSet(g.n, bits), examined
    raise AssertionError("V always dominates")  # unreachable for n >= 1


def domination_number_oracle(g: Graph) -> Tuple[int, VertexSet]:
    """Return gamma(G) and a minimum dominating set witness."""
    size, witness, _ = oracle_search(g)
    return size, witness


def maximal_independent_set(g: Graph, order: Sequence[int]) -> VertexSet:
    """Greedy maximal independent set taking vertices in ``order``."""
    if sorted(order) != list(range(g.n)):
        raise ParameterError("order must be a permutation of 0..n-1")
    chosen = 0
    blocked = 0
    for v in order:
        if not blocked >> v & 1:
            chosen |= 1 << v
            blocked |= g.closed(v)
    return VertexSet(g.n, chosen)


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(not g.adj[v] & s.bits for v in s)
