# src/bounds/catalog.py
"""Name-based dispatch over every bound, used by the ``bounds`` CLI subcommand."""

import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, List

from ..core.errors import ParameterError
from ..core.logger import get_logger
from ..core.schemas import BoundEval
from . import combinatorics as comb
from . import lambert, theorems

log = get_logger(__name__)


@dataclass(frozen=True)
class BoundSpec:
    func: Callable[..., List[BoundEval]]
    params: Dict[str, type]
    help: str
    defaults: Dict[str, Any] | None = None


def _scalar(name: str, fn: Callable[..., float], log_scale: bool = False, base_of: str | None = None):
    """Wrap a float-valued bound; ``base_of`` names the n parameter for per-n bases."""
    def run(**params) -> List[BoundEval]:
        value = fn(**params)
        per_n = None
        if base_of is not None and params.get(base_of):
            per_n = math.exp(value / params[base_of]) if log_scale else value ** (1.0 / params[base_of])
        return [BoundEval(name=name, params=params, value=value, log_scale=log_scale, per_n_base=per_n)]
    return run


def _per_n(name: str, fn: Callable[..., float]):
    """Wrap a bound whose value is itself a per-n base."""
    def run(**params) -> List[BoundEval]:
        value = fn(**params)
        return [BoundEval(name=name, params=params, value=value, per_n_base=value)]
    return run


def _feps_table(c: float, with_text_row: bool = False) -> List[BoundEval]:
    rows = theorems.verify_interval_table(c, include_text_row=with_text_row)
    return [
        BoundEval(
            name="feps_table",
            params={"c": c, "lo": row.lo, "hi": row.hi},
            value=row.grid_max,
            extra={
                "argmax": row.argmax,
                "stated_bound": row.stated_bound,
                "endpoint_bound": row.endpoint_bound,
                "pass": row.passed,
            },
        )
        for row in rows
    ]


def _theorem2_prob(c: float, eps: float | None = None) -> List[BoundEval]:
    eps = theorems.theorem2_eps(c) if eps is None else eps
    base = theorems.theorem2_prob_bound(c, eps)
    return [BoundEval(
        name="theorem2_prob_bound",
        params={"c": c, "eps": eps},
        value=base,
        per_n_base=base,
        extra={"inner": theorems.theorem2_inner(c, eps)},
    )]


def _expected_ds(n: int, p: float) -> List[BoundEval]:
    log_value = comb.log_expected_dominating_sets(n, p)
    return [BoundEval(
        name="expected_dominating_sets",
        params={"n": n, "p": p},
        value=math.exp(log_value) if log_value < 700 else math.inf,
        per_n_base=math.exp(log_value / n) if n else None,
        extra={"log_value": log_value},
    )]


def _es_chain(n: int, p: float) -> List[BoundEval]:
    chain = comb.exhaustive_complexity_chain(n, p)
    return [BoundEval(
        name="exhaustive_complexity_chain",
        params={"n": n, "p": p},
        value=chain["log_n_es"],
        log_scale=True,
        per_n_base=math.exp(chain["log_n_es"] / n),
        extra=chain,
    )]


CATALOG: Dict[str, BoundSpec] = {
    "log-binomial": BoundSpec(_scalar("log_binomial", comb.log_binomial, True, "n"), {"n": int, "k": int},
                              "ln C(n, k)"),
    "m-upper": BoundSpec(_scalar("m_upper", comb.m_upper, True, "n"), {"n": int, "k": int, "p": float},
                         "ln of the M-bound C(n, x)^2 exp(-p x (x-1)/2), x = n - k"),
    "bb-upper": BoundSpec(lambda **kw: [comb.bb_complexity_upper(**kw)], {"n": int, "p": float},
                          "ln of n * max_k M-bound"),
    "subexp-base": BoundSpec(_per_n("subexp_base", comb.subexp_base), {"n": int, "x": int, "p": float},
                             "(e n / x)^2 exp(-p (x - 1)/2)"),
    "entropy": BoundSpec(_scalar("binary_entropy", comb.binary_entropy), {"eps": float},
                         "binary entropy H(eps) in bits"),
    "entropy-base": BoundSpec(_per_n("entropy_base", comb.entropy_base), {"eps": float},
                              "eps^-eps (1-eps)^-(1-eps)"),
    "feps": BoundSpec(_per_n("f_eps", theorems.f_eps), {"eps": float, "c": float},
                      "f(eps) for p = c/n", {"c": 20.0}),
    "feps-table": BoundSpec(_feps_table, {"c": float, "with_text_row": bool},
                            "interval table of f(eps) maxima", {"c": 20.0, "with_text_row": False}),
    "theorem2-eps": BoundSpec(_scalar("theorem2_eps", theorems.theorem2_eps), {"c": float},
                              "max(0.99, 1 - 1/(10c))"),
    "theorem2-prob": BoundSpec(_theorem2_prob, {"c": float, "eps": float},
                               "per-n base of Pr[gamma <= n - eps n]", {"eps": None}),
    "theorem2-lower": BoundSpec(_per_n("theorem2_lower_base", theorems.theorem2_lower_base), {"eps": float},
                                "(1/eps)^eps"),
    "expected-ds": BoundSpec(_expected_ds, {"n": int, "p": float}, "E[#S(G)] for G(n, p)"),
    "es-chain": BoundSpec(_es_chain, {"n": int, "p": float}, "ln E[#S], n E[#S], n^2 max term"),
    "lambertw": BoundSpec(_scalar("lambert_w", lambert.lambert_w), {"x": float}, "principal Lambert W"),
    "gplus": BoundSpec(_per_n("g_plus", lambert.g_plus), {"j": float}, "exp(1 - W(j)/j)"),
    "gminus": BoundSpec(_per_n("g_minus", lambert.g_minus), {"j": float}, "exp(1/e - W(j e^(-j-1+j/e))/j)"),
    "tnp-grid": BoundSpec(lambda **kw: [lambert.tnp_upper_grid(**kw)], {"n": int, "j": float},
                          "grid max of the exhaustive-search per-n base", {"n": 1}),
    "exhaustive-upper": BoundSpec(_per_n("exhaustive_upper_c", theorems.exhaustive_upper_c),
                                  {"c": float, "variant": str}, "per-n base for p = c/n",
                                  {"variant": "proof"}),
}


def evaluate(name: str, **params) -> List[BoundEval]:
    """Evaluate the bound registered as ``name``; returns one or more records."""
    spec = CATALOG.get(name)
    if spec is None:
        raise ParameterError(f"unknown bound {name!r}; known bounds: {', '.join(sorted(CATALOG))}")
    merged = dict(spec.defaults or {})
    merged.update({k: v for k, v in params.items() if v is not None})
    missing = [k for k in spec.params if k not in merged]
    if missing:
        raise ParameterError(f"bound {name!r} needs {', '.join(missing)}")
    unknown = [k for k in merged if k not in spec.params]
    if unknown:
        raise ParameterError(f"bound {name!r} does not take {', '.join(unknown)}")
    log.debug(f"evaluating {name} with {merged}")
    return spec.func(**merged)
