# src/solvers/branch_bound.py
"""Best-first branch-and-bound for MIN DOMINATING SET.

The search starts from the root (all vertices, depth 0). Each step pops a
minimum-potential node from the frontier and counts one expansion. A popped
node at depth n is a minimum dominating set and ends the search; any other
node pushes its children that still dominate the graph. Infeasible children
are dropped for good.

Feasibility is tracked incrementally: every frontier entry carries, per
vertex, the number of members of its implied set that dominate that vertex.
The left child has the parent's set, so it shares the parent's counts. The
right child removes vertex d, decrementing the counts over N[d]; it is
infeasible iff one of them reaches 0.
"""

from typing import List, Set, Tuple

from ..core.config import load_config
from ..core.errors import ParameterError
from ..core.logger import get_logger
from ..core.schemas import SolveReport
from ..graphs import Graph
from .base import BaseSolver
from .frontier import LEFT, RIGHT, Frontier, TieRule
from .tree import BBNode, node_set

log = get_logger(__name__)


class BranchAndBoundSolver(BaseSolver):
    """Best-first search ordered by the potential u(x, d)."""

    name = "bb"
    frontier_class = Frontier

    def __init__(
        self,
        tie_rule: str = "det",
        seed: int | None = None,
        cap: int | None = None,
        frontier_limit: int | None = None,
        record_trace: bool = False,
    ):
        settings = load_config().section("solver")
        self.rule = TieRule.parse(tie_rule, seed)
        self.cap = settings.get("cap", 10_000_000) if cap is None else cap
        self.frontier_limit = settings.get("frontier_limit", 5_000_000) if frontier_limit is None else frontier_limit
        if self.cap < 1:
            raise ParameterError(f"cap must be >= 1, got {self.cap}")
        if self.frontier_limit < 1:
            raise ParameterError(f"frontier_limit must be >= 1, got {self.frontier_limit}")
        self.record_trace = record_trace
        self.trace: List[BBNode] = []

    def _capped(self, g: Graph, reason: str, expansions: int, checks: int, peak: int) -> SolveReport:
        log.warning(f"bb: n={g.n} capped ({reason}) after {expansions} expansions")
        return SolveReport(
            algorithm=self.name,
            n=g.n,
            expansions=expansions,
            capped=True,
            cap_reason=reason,
            tie_rule=self.rule.mode,
            seed=self.rule.seed,
            feasibility_checks=checks,
            max_frontier=peak,
        )

    def solve(self, g: Graph) -> SolveReport:
        self._require_vertices(g)
        n = g.n
        closed_lists = [g.neighbors(v) + [v] for v in range(n)]
        self.trace = []

        frontier = self.frontier_class(self.rule)
        root_counts = tuple(len(nb) for nb in closed_lists)
        frontier.push(BBNode.root(), LEFT, root_counts)

        expansions = 0
        checks = 0
        peak = 1
        while frontier:
            if expansions >= self.cap:
                return self._capped(g, "cap", expansions, checks, peak)

            node, counts = frontier.pop()
            expansions += 1
            if self.record_trace:
                self.trace.append(node)

            if node.depth == n:
                opt = node_set(node, n).to_list()
                report = SolveReport(
                    algorithm=self.name,
                    n=n,
                    opt_size=len(opt),
                    opt_set=opt,
                    expansions=expansions,
                    tie_rule=self.rule.mode,
                    seed=self.rule.seed,
                    feasibility_checks=checks,
                    max_frontier=peak,
                )
                self._log_report(report)
                return report

            d = node.depth
            # left: same implied set, feasible because the parent is
            frontier.push(BBNode(node.prefix | (1 << d), d + 1), LEFT, counts)
            checks += 1

            right_counts = list(counts)
            feasible = True
            for u in closed_lists[d]:
                right_counts[u] -= 1
                if right_counts[u] == 0:
                    feasible = False
                    break
            if feasible:
                frontier.push(BBNode(node.prefix, d + 1), RIGHT, tuple(right_counts))

            if len(frontier) > peak:
                peak = len(frontier)
                if peak > self.frontier_limit:
                    return self._capped(g, "frontier_overflow", expansions, checks, peak)
                if peak % 100_000 == 0:
                    log.debug(f"bb: frontier reached {peak} nodes after {expansions} expansions")

        raise AssertionError("frontier emptied without reaching depth n")  # left spine is always feasible


def bb_solve(
    g: Graph,
    tie_rule: str = "det",
    seed: int | None = None,
    cap: int | None = None,
    frontier_limit: int | None = None,
) -> SolveReport:
    """Run best-first branch-and-bound on ``g``."""
    return BranchAndBoundSolver(tie_rule, seed, cap, frontier_limit).solve(g)


def solve_with_trace(
    g: Graph,
    tie_rule: str = "det",
    seed: int | None = None,
    cap: int | None = None,
) -> Tuple[SolveReport, List[BBNode]]:
    """Run the solver and return its report with the ordered list of expanded nodes."""
    solver = BranchAndBoundSolver(tie_rule, seed, cap, record_trace=True)
    report = solver.solve(g)
    return report, solver.trace


def replay_visited(g: Graph, steps: int, tie_rule: str = "det", seed: int | None = None) -> Set[BBNode]:
    """Nodes visited after the first ``steps`` expansions of a run."""
    if steps < 0:
        raise ParameterError(f"steps must be >= 0, got {steps}")
    # the root counts as visited before the first step
    _, trace = solve_with_trace(g, tie_rule, seed, cap=steps + 1)
    return set(trace[:steps + 1])
