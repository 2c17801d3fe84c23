# src/harness/__init__.py
"""Experiment harness: seeded sweeps, growth estimates, CSV storage and verification."""

from .experiment import run_trial, sweep, trial_seed
from .analysis import growth_rate, monte_carlo_expected_ds, exact_expected_ds
from .storage import COLUMNS, write_csv, read_csv
from .verification import check_graph, verify_all

__all__ = [
    "run_trial",
    "sweep",
    "trial_seed",
    "growth_rate",
    "monte_carlo_expected_ds",
    "exact_expected_ds",
    "COLUMNS",
    "write_csv",
    "read_csv",
    "check_graph",
    "verify_all",
]
