# src/harness/analysis.py
"""Growth-rate estimation and Monte Carlo checks of E[#S(G)]."""

import math
from collections import defaultdict
from typing import Dict, Iterable, List

import numpy as np

from ..core.config import load_config
from ..core.errors import GuardLimitError, ParameterError
from ..core.logger import get_logger
from ..core.schemas import ExperimentRecord, GrowthEstimate, GrowthPoint, MonteCarloEstimate
from ..core.seeding import derive_seed
from ..graphs import all_graphs, gnp_sample
from ..solvers.exhaustive import count_dominating_sets

log = get_logger(__name__)


def growth_rate(records: Iterable[ExperimentRecord], capped_fraction_limit: float | None = None) -> GrowthEstimate:
    """Per-n mean log2(expansions)/n and the slope of mean log2(expansions) against n.

    Capped trials are excluded and counted. An n whose capped fraction exceeds
    the limit is marked invalid and left out of the fit.
    """
    if capped_fraction_limit is None:
        capped_fraction_limit = load_config().value("harness", "capped_fraction_limit", 0.2)

    by_n: Dict[int, List[ExperimentRecord]] = defaultdict(list)
    for r in records:
        by_n[r.n].append(r)

    points = []
    excluded = 0
    for n in sorted(by_n):
        group = by_n[n]
        capped = sum(r.capped for r in group)
        excluded += capped
        fraction = capped / len(group)
        logs = [math.log2(r.expansions) for r in group if not r.capped]
        point = GrowthPoint(n=n, trials=len(group), capped=capped, capped_fraction=fraction,
                            valid=bool(logs) and fraction <= capped_fraction_limit)
        if logs:
            point.mean_log2_expansions = float(np.mean(logs))
            point.rate = point.mean_log2_expansions / n
        points.append(point)

    fit = [pt for pt in points if pt.valid]
    if len(fit) < 2:
        reason = "all records capped" if points and all(pt.mean_log2_expansions is None for pt in points) \
            else "fewer than 2 valid n groups"
        log.warning(f"growth_rate: no estimate ({reason})")
        return GrowthEstimate(points=points, excluded_capped=excluded, reason=reason)

    slope, intercept = np.polyfit([pt.n for pt in fit], [pt.mean_log2_expansions for pt in fit], 1)
    return GrowthEstimate(points=points, slope=float(slope), intercept=float(intercept),
                          excluded_capped=excluded)


def _monte_carlo_guard(n: int) -> None:
    limit = load_config().value("guards", "monte_carlo_max_n", 15)
    if n > limit:
        raise GuardLimitError("monte_carlo_expected_ds", n, limit)


def monte_carlo_expected_ds(n: int, p: float, samples: int, master_seed: int) -> MonteCarloEstimate:
    """Sample mean and standard error of the number of dominating sets of G(n, p)."""
    _monte_carlo_guard(n)
    if samples < 1:
        raise ParameterError(f"samples must be >= 1, got {samples}")
    counts = np.array([
        count_dominating_sets(gnp_sample(n, p, derive_seed(master_seed, "mc", n, float(p), i)))
        for i in range(samples)
    ], dtype=float)
    stderr = float(counts.std(ddof=1) / math.sqrt(samples)) if samples > 1 else 0.0
    return MonteCarloEstimate(n=n, p=p, samples=samples, mean=float(counts.mean()), stderr=stderr)


def exact_expected_ds(n: int, p: float) -> float:
    """E[#S(G)] averaged exactly over all labeled graphs, weighted by p^m (1-p)^(N-m)."""
    if n > 5:
        raise GuardLimitError("exact_expected_ds", n, 5)
    pairs = n * (n - 1) // 2
    total = 0.0
    for g in all_graphs(n):
        m = g.edge_count()
        total += count_dominating_sets(g) * p ** m * (1.0 - p) ** (pairs - m)
    return total
