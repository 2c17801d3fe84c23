# src/solvers/base.py
"""Abstract Base Class for all solvers.

Each concrete solver sets ``name`` (its registry key and the ``algorithm``
field of its reports) and implements ``solve``.
"""

from abc import ABC, abstractmethod
from typing import ClassVar

from ..core.errors import ParameterError
from ..core.logger import get_logger
from ..core.schemas import SolveReport
from ..graphs import Graph

log = get_logger(__name__)


class BaseSolver(ABC):
    name: ClassVar[str] = ""

    @abstractmethod
    def solve(self, g: Graph) -> SolveReport:
        """Find a minimum dominating set of ``g`` and report how much work it took."""
        raise NotImplementedError

    def _require_vertices(self, g: Graph) -> None:
        if g.n < 1:
            raise ParameterError(f"{self.name} needs a graph with n >= 1")

    def _log_report(self, report: SolveReport) -> None:
        log.info(
            f"{report.algorithm}: n={report.n} opt_size={report.opt_size} "
            f"expansions={report.expansions} capped={report.capped}"
        )
