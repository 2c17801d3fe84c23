# src/solvers/oracle.py
"""Solver adapter around the by-cardinality brute-force oracle."""

from ..core.schemas import SolveReport
from ..graphs import Graph, oracle_search
from .base import BaseSolver


class OracleSolver(BaseSolver):
    """gamma(G) by enumerating subsets of size 1, 2, ... until one dominates.

    ``expansions`` counts the subsets examined.
    """

    name = "oracle"

    def solve(self, g: Graph) -> SolveReport:
        self._require_vertices(g)
        size, witness, examined = oracle_search(g)
        report = SolveReport(
            algorithm=self.name,
            n=g.n,
            opt_size=size,
            opt_set=witness.to_list(),
            expansions=examined,
        )
        self._log_report(report)
        return report
