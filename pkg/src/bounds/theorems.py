# src/bounds/theorems.py
"""Numeric checks of the upper- and lower-bound theorems.

f(eps) = (eps^-eps (1 - eps)^-(1 - eps))^2 exp(-c eps^2 / 2) is the per-n base
of C(n, eps n)^2 (1 - p)^(eps^2 n^2 / 2) when p = c / n; the (1 + o(1))
exponent is taken as 1.
"""

import math
from typing import List, Sequence, Tuple

import numpy as np
from scipy.special import entr

from ..core.config import load_config
from ..core.errors import DomainError, ParameterError
from ..core.schemas import IntervalCheck
from .combinatorics import entropy_base

# (interval, stated bound on f over it) for c = 20
TEXT_ROW: Tuple[Tuple[float, float], float] = ((1 / 10, 1 / 8), 1.99)
INTERVAL_TABLE: Sequence[Tuple[Tuple[float, float], float]] = (
    ((1 / 8, 1 / 7), 1.943),
    ((1 / 7, 0.15), 1.9),
    ((0.15, 0.17), 1.988),
    ((0.17, 0.19), 1.981),
    ((0.19, 0.21), 1.95),
    ((0.21, 0.25), 1.982),
    ((0.25, 0.35), 1.955),
    ((0.35, 0.5), 1.2),
)


def _log_f_eps(eps, c: float):
    eps = np.asarray(eps, dtype=float)
    return 2.0 * (entr(eps) + entr(1.0 - eps)) - c * eps ** 2 / 2.0


def f_eps(eps: float, c: float) -> float:
    if not 0.0 <= eps < 1.0:
        raise DomainError(f"f_eps needs eps in (0, 1), got {eps}")
    if not c > 0:
        raise ParameterError(f"f_eps needs c > 0, got {c}")
    return float(np.exp(_log_f_eps(eps, c)))


def interval_endpoint_bound(lo: float, hi: float, c: float) -> float:
    """Bound f on [lo, hi] by the increasing factor at hi and the decreasing one at lo.

    Valid for hi <= 1/2, where the entropy factor increases.
    """
    if not 0.0 < lo <= hi <= 0.5:
        raise ParameterError(f"need 0 < lo <= hi <= 1/2, got [{lo}, {hi}]")
    return entropy_base(hi) ** 2 * math.exp(-c * lo * lo / 2.0)


def verify_interval_table(c: float = 20.0, points: int | None = None,
                          include_text_row: bool = False) -> List[IntervalCheck]:
    """Grid maximum of f_eps on each tabulated interval against its stated bound.

    The eight tabulated rows are always checked; ``include_text_row`` prepends
    the [1/10, 1/8] case argued in prose with bound 1.99.
    """
    points = load_config().value("bounds", "grid_points", 1000) if points is None else points
    rows = ([TEXT_ROW] if include_text_row else []) + list(INTERVAL_TABLE)
    checks = []
    for (lo, hi), stated in rows:
        grid = np.linspace(lo, hi, points)
        values = np.exp(_log_f_eps(grid, c))
        at = int(np.argmax(values))
        grid_max = float(values[at])
        checks.append(IntervalCheck(
            lo=lo,
            hi=hi,
            grid_max=grid_max,
            argmax=float(grid[at]),
            stated_bound=stated,
            endpoint_bound=interval_endpoint_bound(lo, hi, c),
            passed=grid_max < stated,
        ))
    return checks


def theorem2_eps(c: float) -> float:
    """eps = max(0.99, 1 - 1/(10 c))."""
    if not c > 0:
        raise ParameterError(f"c must be > 0, got {c}")
    return max(0.99, 1.0 - 1.0 / (10.0 * c))


def theorem2_inner(c: float, eps: float) -> float:
    """(1 - e^(-2 c (1 - eps)))^eps; the theorem needs it below 1/2."""
    if not c > 0:
        raise ParameterError(f"c must be > 0, got {c}")
    if not 0.0 < eps <= 1.0:
        raise DomainError(f"eps must be in (0, 1], got {eps}")
    return (-math.expm1(-2.0 * c * (1.0 - eps))) ** eps


def theorem2_prob_bound(c: float, eps: float) -> float:
    """Per-n base 2 (1 - e^(-2 c (1 - eps)))^eps of Pr[gamma <= n - eps n]."""
    return 2.0 * theorem2_inner(c, eps)


def theorem2_lower_base(eps: float) -> float:
    """(1/eps)^eps, the per-n base of the lower bound on expansions."""
    if not 0.0 < eps <= 1.0:
        raise DomainError(f"eps must be in (0, 1], got {eps}")
    return (1.0 / eps) ** eps


def exhaustive_upper_c(c: float, variant: str = "proof") -> float:
    """Per-n base of the exhaustive-search bound for p = c/n, c > 1.

    ``statement`` uses 2 (1 - e^(-2c))^(1/3); ``proof`` uses the
    2 (1 - e^(-4c/3))^(1/3) that the derivation actually reaches.
    """
    if not c > 1:
        raise ParameterError(f"c must be > 1, got {c}")
    rate = {"statement": 2.0, "proof": 4.0 / 3.0}.get(variant)
    if rate is None:
        raise ParameterError(f"variant must be 'statement' or 'proof', got {variant!r}")
    return max(1.99, 2.0 * (-math.expm1(-rate * c)) ** (1.0 / 3.0))
