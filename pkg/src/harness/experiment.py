# src/harness/experiment.py
"""Seeded trials and sweeps over (regime, n) grids.

Each trial's graph seed is ``derive_seed(master_seed, kind, param, f_name, n, trial)``
(see ``core.seeding``), so a trial can be re-run on its own. The random tie
rule, when used, is seeded with ``derive_seed(graph_seed, "tie")``.
Trials run on a thread pool; results are sorted by (n, trial) afterwards, so
the output does not depend on scheduling.
"""

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Tuple

import numpy as np

from ..core.config import load_config
from ..core.errors import ParameterError
from ..core.logger import get_logger
from ..core.schemas import ExperimentRecord, Regime
from ..core.seeding import derive_seed
from ..graphs import gnp_sample
from ..solvers import get_solver

log = get_logger(__name__)


def trial_seed(master_seed: int, regime: Regime, n: int, trial: int) -> int:
    return derive_seed(master_seed, regime.kind, float(regime.param), regime.f_name or "", n, trial)


def run_trial(
    regime: Regime,
    n: int,
    trial: int,
    master_seed: int,
    algo: str = "bb",
    cap: int | None = None,
    tie_rule: str = "det",
) -> ExperimentRecord:
    """Sample one G(n, p) for the regime and solve it."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    p = regime.resolve_p(n)
    seed = trial_seed(master_seed, regime, n, trial)
    g = gnp_sample(n, p, seed)

    options = {}
    if algo == "bb":
        options = {"tie_rule": tie_rule, "cap": cap,
                   "seed": derive_seed(seed, "tie") if tie_rule == "rand" else None}
    report = get_solver(algo, **options).solve(g)

    log.debug(f"trial {regime.label} n={n} #{trial}: expansions={report.expansions} capped={report.capped}")
    return ExperimentRecord(
        regime=regime.label,
        param=regime.param,
        n=n,
        p=p,
        trial=trial,
        seed=seed,
        algorithm=algo,
        expansions=report.expansions,
        opt_size=report.opt_size,
        capped=report.capped,
    )


def sweep(
    regime: Regime,
    n_list: Iterable[int],
    trials: int,
    master_seed: int,
    algo: str = "bb",
    cap: int | None = None,
    tie_rule: str = "det",
    workers: int | None = None,
    shuffle_seed: int | None = None,
) -> List[ExperimentRecord]:
    """Run every (n, trial) pair and return the records sorted by (n, trial).

    ``shuffle_seed`` permutes the submission order; the result is unchanged.
    """
    n_list = list(n_list)
    if not n_list:
        raise ParameterError("n_list must not be empty")
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    workers = load_config().value("harness", "workers", 4) if workers is None else workers

    jobs: List[Tuple[int, int]] = [(n, t) for n in n_list for t in range(trials)]
    if shuffle_seed is not None:
        order = np.random.Generator(np.random.PCG64(shuffle_seed)).permutation(len(jobs))
        jobs = [jobs[i] for i in order]

    log.info(f"Sweep {regime.label} param={regime.param} n={n_list} trials={trials} algo={algo}")
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = [pool.submit(run_trial, regime, n, t, master_seed, algo, cap, tie_rule) for n, t in jobs]
        records = [f.result() for f in futures]

    records.sort(key=lambda r: (r.n, r.trial))
    totals = Counter(r.n for r in records)
    capped = Counter(r.n for r in records if r.capped)
    for n in sorted(totals):
        log.info(f"Sweep {regime.label} n={n}: capped fraction {capped[n] / totals[n]:.3f}")
    return records
