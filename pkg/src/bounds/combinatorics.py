# src/bounds/combinatorics.py
"""Log-scale combinatorics: binomials, entropy, the M-bound and E[#S(G)].

Everything is computed in natural-log space; (1 + o(1)) factors are taken as 1.
"""

import math
from typing import Dict

import numpy as np
from scipy.special import betaln, entr, logsumexp

from ..core.errors import DomainError, ParameterError
from ..core.schemas import BoundEval

LN2 = math.log(2.0)


def _check_probability(p: float, *, open_left: bool = False) -> None:
    low_ok = p > 0.0 if open_left else p >= 0.0
    if not (low_ok and p <= 1.0):
        interval = "(0, 1]" if open_left else "[0, 1]"
        raise ParameterError(f"p must be in {interval}, got {p}")


def log_binomial(n: int, k: int) -> float:
    """ln C(n, k) via the log-beta function."""
    if not 0 <= k <= n:
        raise ParameterError(f"need 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return 0.0
    # C(n, k) = 1 / ((n + 1) B(n - k + 1, k + 1))
    return float(-math.log(n + 1) - betaln(n - k + 1, k + 1))


def _log_binomial_row(n: int) -> np.ndarray:
    k = np.arange(n + 1)
    row = -np.log(n + 1) - betaln(n - k + 1, k + 1)
    row[0] = row[-1] = 0.0
    return row


def binary_entropy(eps: float) -> float:
    """H(eps) in bits; 0 at both endpoints."""
    if not 0.0 <= eps <= 1.0:
        raise DomainError(f"binary entropy needs eps in [0, 1], got {eps}")
    return float((entr(eps) + entr(1.0 - eps)) / LN2)


def entropy_base(eps: float) -> float:
    """eps^-eps (1 - eps)^-(1 - eps) = 2^H(eps)."""
    if not 0.0 <= eps <= 1.0:
        raise DomainError(f"entropy base needs eps in [0, 1], got {eps}")
    return float(np.exp(entr(eps) + entr(1.0 - eps)))


def m_upper(n: int, k: int, p: float) -> float:
    """ln of C(n, x)^2 exp(-p x (x - 1) / 2) with x = n - k, an upper bound on M."""
    if not 1 <= k <= n:
        raise ParameterError(f"need 1 <= k <= n, got n={n}, k={k}")
    _check_probability(p, open_left=True)
    x = n - k
    return 2.0 * log_binomial(n, x) - p * x * (x - 1) / 2.0


def bb_complexity_upper(n: int, p: float) -> BoundEval:
    """ln of n * max_k M-bound: the branch-and-bound expansion bound for G(n, p)."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    _check_probability(p, open_left=True)
    x = np.arange(n)                      # x = n - k for k = n..1
    logs = 2.0 * _log_binomial_row(n)[:n] - p * x * (x - 1) / 2.0
    i = int(np.argmax(logs))
    value = math.log(n) + float(logs[i])
    return BoundEval(
        name="bb_complexity_upper",
        params={"n": n, "p": p},
        value=value,
        log_scale=True,
        per_n_base=math.exp(value / n),
        extra={"argmax_k": n - i, "max_log_m": float(logs[i])},
    )


def subexp_base(n: int, x: int, p: float) -> float:
    """(e n / x)^2 exp(-p (x - 1) / 2); M <= subexp_base^x, so a base < 1 makes M vanish."""
    if not 1 <= x <= n:
        raise ParameterError(f"need 1 <= x <= n, got n={n}, x={x}")
    _check_probability(p, open_left=True)
    return (math.e * n / x) ** 2 * math.exp(-p * (x - 1) / 2.0)


def _log_es_terms(n: int, p: float) -> np.ndarray:
    """ln of C(n, k)(1 - (1 - p)^(n - k))^k for k = 0..n, with 0^0 = 1."""
    k = np.arange(n + 1)
    m = n - k
    if p < 1.0:
        inner = -np.expm1(m * math.log1p(-p))
    else:
        inner = np.where(m == 0, 0.0, 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        powered = np.where(k == 0, 0.0, k * np.log(inner))
    return _log_binomial_row(n) + powered


def log_expected_dominating_sets(n: int, p: float) -> float:
    """ln E[#S(G)] for G(n, p)."""
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    _check_probability(p)
    return float(logsumexp(_log_es_terms(n, p)))


def expected_dominating_sets(n: int, p: float) -> float:
    """E[#S(G)] = sum_k C(n, k)(1 - (1 - p)^(n - k))^k."""
    return math.exp(log_expected_dominating_sets(n, p))


def exhaustive_complexity_chain(n: int, p: float) -> Dict[str, float]:
    """ln of E[#S], n E[#S] and n^2 max_k term, the chain bounding exhaustive search."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    _check_probability(p)
    terms = _log_es_terms(n, p)
    i = int(np.argmax(terms))
    log_es = float(logsumexp(terms))
    return {
        "log_es": log_es,
        "log_n_es": math.log(n) + log_es,
        "log_max_term": float(terms[i]),
        "log_n2_max_term": 2.0 * math.log(n) + float(terms[i]),
        "argmax_k": i,
    }
