# src/solvers/exhaustive.py
"""Naive exhaustive search over all 2**n vertex subsets.

Subsets are visited in increasing binary-counter order (bit v = vertex v) in
numpy chunks. The optimum is the first subset of minimum size met in that
order, i.e. the minimum-size dominating set with the smallest integer code.
Both the subsets examined and the dominating subsets found are reported.
"""

from typing import Iterator, Tuple

import numpy as np

from ..core.config import load_config
from ..core.errors import GuardLimitError
from ..core.schemas import SolveReport
from ..graphs import Graph, VertexSet
from .base import BaseSolver

CHUNK = 1 << 20
# subset codes and the bound 2**n must fit in uint64
MAX_CODE_BITS = 63


def _guard(g: Graph, what: str) -> None:
    limit = min(load_config().value("guards", "exhaustive_max_n", 25), MAX_CODE_BITS)
    if g.n > limit:
        raise GuardLimitError(what, g.n, limit)


def _dominating_chunks(g: Graph) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
    """Yield (subset codes, dominating mask) chunk by chunk."""
    closed = [np.uint64(nb) for nb in g.closed_neighborhoods()]
    total = 1 << g.n
    for start in range(0, total, CHUNK):
        codes = np.arange(start, min(start + CHUNK, total), dtype=np.uint64)
        ok = np.ones(codes.shape, dtype=bool)
        for nb in closed:
            ok &= (codes & nb) != 0
        yield codes, ok


def count_dominating_sets(g: Graph) -> int:
    """Exact number of dominating subsets of V."""
    _guard(g, "count_dominating_sets")
    return sum(int(ok.sum()) for _, ok in _dominating_chunks(g))


class ExhaustiveSolver(BaseSolver):
    """Examine every subset and keep the smallest dominating one."""

    name = "exhaustive"

    def solve(self, g: Graph) -> SolveReport:
        self._require_vertices(g)
        _guard(g, "exhaustive_solve")

        best_size = g.n + 1
        best_code = 0
        dominating = 0
        examined = 0
        for codes, ok in _dominating_chunks(g):
            examined += len(codes)
            hits = codes[ok]
            dominating += len(hits)
            if len(hits) == 0:
                continue
            sizes = np.bitwise_count(hits)
            i = int(np.argmin(sizes))
            # strict: earlier chunks hold smaller codes
            if int(sizes[i]) < best_size:
                best_size = int(sizes[i])
                best_code = int(hits[i])

        opt = VertexSet(g.n, best_code).to_list()
        report = SolveReport(
            algorithm=self.name,
            n=g.n,
            opt_size=len(opt),
            opt_set=opt,
            expansions=examined,
            dominating_subsets=dominating,
        )
        self._log_report(report)
        return report


def exhaustive_solve(g: Graph) -> SolveReport:
    return ExhaustiveSolver().solve(g)
