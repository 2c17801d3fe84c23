# src/core/schemas.py
"""Pydantic models for every value that crosses a module or process boundary."""

import json
import math
from typing import Any, Dict, List, Literal

from pydantic import BaseModel, Field, model_validator

RegimeKind = Literal["fixed_p", "c_over_n", "f_over_n"]
GrowthFunction = Literal["log", "sqrt"]
CapReason = Literal["cap", "frontier_overflow"]

_GROWTH_FUNCTIONS = {"log": math.log, "sqrt": math.sqrt}


class SolveReport(BaseModel):
    """Outcome of one solver run."""
    algorithm: str
    n: int
    opt_size: int | None = None
    opt_set: List[int] | None = None
    expansions: int = 0
    capped: bool = False
    cap_reason: CapReason | None = None
    tie_rule: str | None = None
    seed: int | None = None
    # secondary counters; which ones are set depends on the algorithm
    feasibility_checks: int | None = None
    max_frontier: int | None = None
    dominating_subsets: int | None = None

    @model_validator(mode="after")
    def _check_outcome(self):
        if self.capped:
            if self.opt_size is not None or self.opt_set is not None:
                raise ValueError("capped report must not carry an optimum")
            if self.cap_reason is None:
                raise ValueError("capped report needs a cap_reason")
        else:
            if self.opt_size is None or self.opt_set is None:
                raise ValueError("uncapped report needs opt_size and opt_set")
            if self.opt_size != len(self.opt_set):
                raise ValueError(f"opt_size {self.opt_size} != |opt_set| {len(self.opt_set)}")
            if self.opt_set != sorted(self.opt_set):
                raise ValueError("opt_set must be sorted")
        return self

    def to_record(self) -> str:
        """Single-line JSON record; unset secondary counters are omitted."""
        data = self.model_dump()
        for key in ("feasibility_checks", "max_frontier", "dominating_subsets"):
            if data[key] is None:
                del data[key]
        return json.dumps(data, separators=(",", ":"))


class Regime(BaseModel):
    """Rule mapping n to an edge probability p."""
    kind: RegimeKind
    param: float = 1.0
    f_name: GrowthFunction | None = None

    @model_validator(mode="after")
    def _check_param(self):
        if self.kind == "fixed_p" and not 0.0 < self.param <= 1.0:
            raise ValueError(f"fixed_p needs param in (0, 1], got {self.param}")
        if self.kind in ("c_over_n", "f_over_n") and not self.param > 0.0:
            raise ValueError(f"{self.kind} needs param > 0, got {self.param}")
        if self.kind == "f_over_n" and self.f_name is None:
            raise ValueError("f_over_n needs f_name (log or sqrt)")
        if self.kind != "f_over_n" and self.f_name is not None:
            raise ValueError(f"f_name only applies to f_over_n, not {self.kind}")
        return self

    @property
    def label(self) -> str:
        """Value of the ``regime`` CSV column."""
        return f"{self.kind}:{self.f_name}" if self.kind == "f_over_n" else self.kind

    @classmethod
    def from_label(cls, label: str, param: float = 1.0) -> "Regime":
        """Parse ``fixed_p``, ``c-over-n``, ``f_over_n:log`` and similar labels."""
        kind, _, f_name = label.strip().replace("-", "_").partition(":")
        return cls(kind=kind, param=param, f_name=f_name or None)

    def resolve_p(self, n: int) -> float:
        """Edge probability for graphs on n vertices, clamped to (0, 1]."""
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        if self.kind == "fixed_p":
            return self.param
        if self.kind == "c_over_n":
            p = self.param / n
        else:
            # n=1 has no vertex pairs, so any p is equivalent
            p = self.param * _GROWTH_FUNCTIONS[self.f_name](n) / n if n > 1 else 1.0
        return min(1.0, p)


class ExperimentRecord(BaseModel):
    """One harness trial row."""
    regime: str
    param: float
    n: int
    p: float
    trial: int
    seed: int
    algorithm: str
    expansions: int
    opt_size: int | None = None
    capped: bool = False

    @model_validator(mode="after")
    def _check_capped(self):
        if self.capped and self.opt_size is not None:
            raise ValueError("capped record must have an empty opt_size")
        if not self.capped and self.opt_size is None:
            raise ValueError("uncapped record needs opt_size")
        return self


class BoundEval(BaseModel):
    """One evaluated closed-form expression."""
    name: str
    params: Dict[str, Any] = Field(default_factory=dict)
    value: float
    log_scale: bool = False
    per_n_base: float | None = None
    extra: Dict[str, Any] = Field(default_factory=dict)

    def to_record(self) -> str:
        return json.dumps(self.model_dump(), separators=(",", ":"))


class IntervalCheck(BaseModel):
    """One row of the f(eps) interval table."""
    lo: float
    hi: float
    grid_max: float
    argmax: float
    stated_bound: float
    endpoint_bound: float
    passed: bool


class GrowthPoint(BaseModel):
    n: int
    trials: int
    capped: int
    capped_fraction: float
    mean_log2_expansions: float | None = None
    rate: float | None = None
    valid: bool = True


class GrowthEstimate(BaseModel):
    """Per-n normalized rates plus the least-squares slope of mean log2 expansions vs n."""
    points: List[GrowthPoint]
    slope: float | None = None
    intercept: float | None = None
    excluded_capped: int = 0
    reason: str | None = None

    @property
    def has_estimate(self) -> bool:
        return self.slope is not None

    def rates(self) -> Dict[int, float]:
        return {pt.n: pt.rate for pt in self.points if pt.valid and pt.rate is not None}


class MonteCarloEstimate(BaseModel):
    n: int
    p: float
    samples: int
    mean: float
    stderr: float


class VerifySummary(BaseModel):
    """Result of the cross-solver verification battery."""
    max_n: int
    graphs_per_n: Dict[int, int] = Field(default_factory=dict)
    battery: int = 0
    checks: int = 0
    pruning_violations: int = 0
    failures: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.pruning_violations == 0
