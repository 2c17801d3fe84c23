# src/bounds/__init__.py
"""Closed-form bounds: combinatorics, Lambert-W growth functions and theorem checks."""

from .combinatorics import (
    log_binomial,
    binary_entropy,
    entropy_base,
    m_upper,
    bb_complexity_upper,
    subexp_base,
    expected_dominating_sets,
    log_expected_dominating_sets,
    exhaustive_complexity_chain,
)
from .lambert import lambert_w, g_plus, g_minus, log_tnp_base, tnp_upper_grid
from .theorems import (
    INTERVAL_TABLE,
    f_eps,
    interval_endpoint_bound,
    verify_interval_table,
    theorem2_eps,
    theorem2_inner,
    theorem2_prob_bound,
    theorem2_lower_base,
    exhaustive_upper_c,
)
from .catalog import CATALOG, evaluate

__all__ = [
    "log_binomial",
    "binary_entropy",
    "entropy_base",
    "m_upper",
    "bb_complexity_upper",
    "subexp_base",
    "expected_dominating_sets",
    "log_expected_dominating_sets",
    "exhaustive_complexity_chain",
    "lambert_w",
    "g_plus",
    "g_minus",
    "log_tnp_base",
    "tnp_upper_grid",
    "INTERVAL_TABLE",
    "f_eps",
    "interval_endpoint_bound",
    "verify_interval_table",
    "theorem2_eps",
    "theorem2_inner",
    "theorem2_prob_bound",
    "theorem2_lower_base",
    "exhaustive_upper_c",
    "CATALOG",
    "evaluate",
]
