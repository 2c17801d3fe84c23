# src/solvers/__init__.py
"""Solver package initialization.

This module automatically discovers and registers all solver implementations
by scanning the solvers directory for modules containing BaseSolver subclasses.
"""

import importlib
import inspect
import pkgutil
from pathlib import Path
from typing import Dict, Type

from ..core.errors import ParameterError
from ..core.logger import get_logger
from .base import BaseSolver

log = get_logger(__name__)

_registry: Dict[str, Type[BaseSolver]] | None = None


def get_all_solvers() -> Dict[str, Type[BaseSolver]]:
    """Automatically discover every solver class, keyed by its ``name``.

    Scans the solvers directory for modules containing classes that inherit
    from BaseSolver. The result is cached after the first scan.
    """
    global _registry
    if _registry is not None:
        return dict(_registry)

    found: Dict[str, Type[BaseSolver]] = {}
    solvers_dir = Path(__file__).parent

    for importer, modname, ispkg in pkgutil.iter_modules([str(solvers_dir)]):
        if modname == 'base':
            continue
        try:
            module = importlib.import_module(f'.{modname}', package=__name__)
        except Exception as e:
            # Log but don't crash if a solver module fails to load
            log.warning(f"Failed to load solver module {modname}: {e}")
            continue

        for _, obj in inspect.getmembers(module, inspect.isclass):
            if issubclass(obj, BaseSolver) and obj is not BaseSolver and not inspect.isabstract(obj):
                found.setdefault(obj.name, obj)

    _registry = found
    log.debug(f"Registered solvers: {sorted(found)}")
    return dict(found)


def get_solver(name: str, **options) -> BaseSolver:
    """Instantiate the solver registered under ``name``."""
    solvers = get_all_solvers()
    if name not in solvers:
        raise ParameterError(f"unknown solver {name!r}; known solvers: {', '.join(sorted(solvers))}")
    return solvers[name](**options)


__all__ = ["BaseSolver", "get_all_solvers", "get_solver"]
