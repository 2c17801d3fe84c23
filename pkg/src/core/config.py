# src/core/config.py
"""Configuration management module.

Defaults for solvers, enumeration guards, the experiment harness and the bound
evaluators live in ``config.yaml``. Command-line flags override them.
"""

import copy
import os
import yaml
from typing import Dict, Any
from ..core.logger import get_logger

log = get_logger(__name__)

# Used when config.yaml is missing or lacks a key.
DEFAULTS: Dict[str, Dict[str, Any]] = {
    "solver": {
        "cap": 10_000_000,
        "frontier_limit": 5_000_000,
        "tie_rule": "det",
    },
    "guards": {
        "oracle_max_n": 25,
        "exhaustive_max_n": 25,
        "classify_max_n": 15,
        "monte_carlo_max_n": 15,
        "verify_max_n": 5,
    },
    "harness": {
        "workers": 4,
        "capped_fraction_limit": 0.2,
        "master_seed": 20240607,
        "battery_size": 300,
    },
    "bounds": {
        "grid_points": 1000,
        "tnp_grid_points": 10_000,
        "lambert_tol": 1.0e-12,
        "lambert_max_iter": 100,
    },
}

class Config:
    """Application configuration loaded from config.yaml."""

    _instance = None
    _config_data = {}

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Config, cls).__new__(cls)
            cls._instance._load_config()
        return cls._instance

    @classmethod
    def reset(cls) -> None:
        """Drop the singleton so the next access reloads the file."""
        cls._instance = None

    def _load_config(self, config_path: str = "config.yaml"):
        """Load configuration from YAML file, merged over DEFAULTS."""
        data: Dict[str, Any] = {}
        try:
            potential_paths = [
                os.getenv("DOMSET_CONFIG", ""),
                os.path.join(os.getcwd(), config_path),
                os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(__file__))), config_path),
            ]
            found = next((p for p in potential_paths if p and os.path.exists(p)), None)
            if found is None:
                log.warning(f"No {config_path} found; using built-in defaults")
            else:
                with open(found, 'r') as f:
                    data = yaml.safe_load(f) or {}
                log.info(f"Loaded configuration from {found}")
        except Exception as e:
            log.error(f"Failed to load configuration: {e}")
            data = {}

        merged = copy.deepcopy(DEFAULTS)
        for section, values in data.items():
            if isinstance(values, dict):
                merged.setdefault(section, {}).update(values)
            else:
                merged[section] = values
        self._config_data = merged

    def get(self, key: str, default: Any = None) -> Any:
        """Get a top-level configuration value."""
        return self._config_data.get(key, default)

    def section(self, name: str) -> Dict[str, Any]:
        """Get one configuration section as a dict (empty if absent)."""
        value = self._config_data.get(name, {})
        return dict(value) if isinstance(value, dict) else {}

    def value(self, section: str, key: str, default: Any = None) -> Any:
        """Get a single setting from a section."""
        return self.section(section).get(key, default)

    def as_dict(self) -> Dict[str, Any]:
        """Deep copy of the merged configuration."""
        return copy.deepcopy(self._config_data)

def load_config() -> Config:
    """Factory function to get the Config singleton."""
    return Config()
