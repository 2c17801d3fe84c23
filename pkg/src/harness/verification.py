# src/harness/verification.py
"""Cross-check every solver against the brute-force oracle.

All labeled graphs up to ``max_n`` vertices are checked, followed by a
seeded battery of G(n, p) graphs with 6 <= n <= 12. On each graph the
deterministic and randomized branch-and-bound runs, the exhaustive search
and the oracle must agree on the domination number, every returned set
must dominate, and no expanded node may have a potential above it. The
greedy maximal independent set is checked to be independent, dominating
and no smaller than the domination number.
"""

from typing import List, Sequence

from ..core.config import load_config
from ..core.errors import GuardLimitError
from ..core.logger import get_logger
from ..core.schemas import SolveReport, VerifySummary
from ..core.seeding import derive_seed
from ..graphs import (
    Graph,
    VertexSet,
    all_graphs,
    domination_number_oracle,
    gnp_sample,
    is_dominating,
    is_independent,
    maximal_independent_set,
)
from ..solvers.branch_bound import solve_with_trace
from ..solvers.exhaustive import exhaustive_solve
from ..solvers.oracle import OracleSolver
from ..solvers.tree import potential

log = get_logger(__name__)

BATTERY_SIZES = range(6, 13)
BATTERY_PROBABILITIES = (0.1, 0.3, 0.5, 0.7, 0.9)


def check_graph(g: Graph, rand_seeds: Sequence[int], label: str, summary: VerifySummary) -> None:
    """Run every solver on ``g`` and record disagreements in ``summary``."""
    gamma, _ = domination_number_oracle(g)
    mis = maximal_independent_set(g, range(g.n))
    if not (is_independent(g, mis) and is_dominating(g, mis)) or len(mis) < gamma:
        summary.failures.append(f"{label}: greedy independent set {mis.to_list()} breaks gamma <= |MIS|")
    runs: List[tuple[str, SolveReport, list]] = []

    report, trace = solve_with_trace(g, "det")
    runs.append(("bb-det", report, trace))
    for s in rand_seeds:
        report, trace = solve_with_trace(g, "rand", s)
        runs.append((f"bb-rand[{s}]", report, trace))
    runs.append(("exhaustive", exhaustive_solve(g), []))
    runs.append(("oracle", OracleSolver().solve(g), []))

    for algo, report, trace in runs:
        summary.checks += 1
        if report.capped or report.opt_size != gamma:
            summary.failures.append(f"{label}: {algo} returned {report.opt_size}, oracle says {gamma}")
            continue
        if not is_dominating(g, VertexSet.of(g.n, report.opt_set)):
            summary.failures.append(f"{label}: {algo} returned a non-dominating set {report.opt_set}")
        over = [node for node in trace if potential(node, g.n) > gamma]
        if over:
            summary.pruning_violations += len(over)
            summary.failures.append(f"{label}: {algo} expanded {len(over)} nodes with potential > {gamma}")


def verify_all(
    max_n: int = 5,
    battery: int | None = None,
    master_seed: int | None = None,
    rand_seeds: Sequence[int] = (1, 2, 3),
) -> VerifySummary:
    config = load_config()
    limit = config.value("guards", "verify_max_n", 5)
    if max_n > limit:
        raise GuardLimitError("verify_all", max_n, limit)
    settings = config.section("harness")
    battery = settings.get("battery_size", 300) if battery is None else battery
    master_seed = settings.get("master_seed", 0) if master_seed is None else master_seed

    summary = VerifySummary(max_n=max_n, battery=battery)
    for n in range(1, max_n + 1):
        count = 0
        for g in all_graphs(n):
            check_graph(g, rand_seeds, f"n={n} edges={g.edges()}", summary)
            count += 1
        summary.graphs_per_n[n] = count
        log.info(f"verify: all {count} graphs on {n} vertices checked")

    sizes = list(BATTERY_SIZES)
    for i in range(battery):
        n = sizes[i % len(sizes)]
        p = BATTERY_PROBABILITIES[(i // len(sizes)) % len(BATTERY_PROBABILITIES)]
        seed = derive_seed(master_seed, "verify", i)
        check_graph(gnp_sample(n, p, seed), rand_seeds, f"battery #{i} n={n} p={p} seed={seed}", summary)

    if summary.passed:
        log.info(f"verify: passed {summary.checks} checks")
    else:
        log.error(f"verify: {len(summary.failures)} failures, first: {summary.failures[0]}")
    return summary
