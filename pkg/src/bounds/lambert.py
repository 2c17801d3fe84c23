# src/bounds/lambert.py
"""Principal-branch Lambert W and the growth functions built on it.

W is computed with Halley's method on f(w) = w e^w - x. Initial guesses:
log1p(x) for x >= -1/4, and the branch-point series
-1 + s - s^2/3 + 11 s^3/72 with s = sqrt(2 (e x + 1)) below that.
"""

import math

import numpy as np
from scipy.optimize import minimize_scalar

from ..core.config import load_config
from ..core.errors import DomainError
from ..core.logger import get_logger
from ..core.schemas import BoundEval

log = get_logger(__name__)

BRANCH_POINT = -1.0 / math.e


def lambert_w(x: float, tol: float | None = None, max_iter: int | None = None) -> float:
    """W0(x): the w >= -1 with w e^w = x, for x >= -1/e."""
    if math.isnan(x):
        raise DomainError("lambert_w is undefined for NaN")
    if x < BRANCH_POINT:
        if x < BRANCH_POINT - 1e-15:
            raise DomainError(f"lambert_w needs x >= -1/e, got {x}")
        x = BRANCH_POINT
    if x == BRANCH_POINT:
        return -1.0
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf

    settings = load_config().section("bounds")
    tol = settings.get("lambert_tol", 1e-12) if tol is None else tol
    max_iter = settings.get("lambert_max_iter", 100) if max_iter is None else max_iter

    if x >= -0.25:
        w = math.log1p(x)
    else:
        s = math.sqrt(2.0 * (math.e * x + 1.0))
        w = -1.0 + s - s * s / 3.0 + 11.0 * s ** 3 / 72.0

    scale = max(1.0, abs(x))
    for _ in range(max_iter):
        ew = math.exp(w)
        f = w * ew - x
        if abs(f) <= tol * scale:
            break
        wp1 = w + 1.0
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= step
        if abs(step) <= 4e-16 * (1.0 + abs(w)):
            break
    else:
        log.debug(f"lambert_w({x}) stopped after {max_iter} iterations")
    return w


def g_plus(j: float) -> float:
    """exp(1 - W(j) / j), with the limit value 1 at j = 0."""
    if j < 0:
        raise DomainError(f"g_plus needs j >= 0, got {j}")
    if j == 0:
        return 1.0
    if math.isinf(j):
        return math.e
    return math.exp(1.0 - lambert_w(j) / j)


def g_minus(j: float) -> float:
    """exp(1/e - W(j e^(-j - 1 + j/e)) / j)."""
    if not j > 0:
        raise DomainError(f"g_minus needs j > 0, got {j}")
    if math.isinf(j):
        return math.exp(1.0 / math.e)
    # exponent is computed first so the argument underflows to 0 instead of overflowing
    arg = math.exp(math.log(j) - j - 1.0 + j / math.e)
    return math.exp(1.0 / math.e - lambert_w(arg) / j)


def log_tnp_base(i, j: float):
    """ln of (e (1 - e^(j (i - 1))) / i)^i, the per-n base of the exhaustive-search bound at k = i n."""
    i = np.asarray(i, dtype=float)
    return i * (1.0 + np.log(-np.expm1(j * (i - 1.0))) - np.log(i))


def tnp_upper_grid(n: int, j: float, points: int | None = None, refine: bool = True) -> BoundEval:
    """Maximize the per-n base of the exhaustive-search bound over i in (0, 1) on a grid.

    ``per_n_base`` is the grid maximum and ``value`` is ln(n^2 base^n). The
    closed-form candidate i* = 1 - W(j)/j, where 1 - e^(j(i - 1)) = i, is
    reported next to it: the base there equals e^(1 - W(j)/j) = g_plus(j).
    """
    if not j > 0:
        raise DomainError(f"tnp_upper_grid needs j > 0, got {j}")
    if n < 1:
        raise DomainError(f"tnp_upper_grid needs n >= 1, got {n}")
    points = load_config().value("bounds", "tnp_grid_points", 10_000) if points is None else points

    grid = np.linspace(0.0, 1.0, points + 2)[1:-1]
    logs = log_tnp_base(grid, j)
    at = int(np.argmax(logs))
    best_log, best_i = float(logs[at]), float(grid[at])

    extra = {"argmax": best_i, "grid_points": points}
    if refine:
        lo = float(grid[max(at - 1, 0)])
        hi = float(grid[min(at + 1, points - 1)])
        res = minimize_scalar(lambda t: -float(log_tnp_base(t, j)), bounds=(lo, hi),
                              method="bounded", options={"xatol": 1e-12})
        extra["refined_argmax"] = float(res.x)
        extra["refined_max"] = math.exp(max(-float(res.fun), best_log))

    i_star = 1.0 - lambert_w(j) / j
    extra["closed_form_argmax"] = i_star
    extra["closed_form_value"] = g_plus(j)
    extra["closed_form_point_value"] = math.exp(float(log_tnp_base(i_star, j))) if 0 < i_star < 1 else None
    extra["stationarity_residual"] = 1.0 - math.exp(j * (i_star - 1.0)) - i_star

    base = math.exp(best_log)
    return BoundEval(
        name="tnp_upper_grid",
        params={"n": n, "j": j},
        value=2.0 * math.log(n) + n * best_log,
        log_scale=True,
        per_n_base=base,
        extra=extra,
    )
