# src/core/logger.py
"""Logging setup shared by the solvers, the harness and the CLI.

Import ``log = get_logger(__name__)`` in every module. Records go to
``$LOG_DIR/app.log`` (default ``logs/`` at the repository root) through a
rotating handler, 5 MB per file with 5 backups. WARNING and above are also
written to stderr, because stdout carries the CLI's JSON and CSV output.
``LOG_LEVEL`` sets the root level (default INFO).
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler

LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

LOG_DIR = os.getenv("LOG_DIR") or os.path.abspath(
    os.path.join(os.path.dirname(__file__), "..", "..", "logs")
)
LOG_FILE = os.path.join(LOG_DIR, "app.log")

_configured = False


def _configure() -> None:
    global _configured
    if _configured:
        return
    os.makedirs(LOG_DIR, exist_ok=True)
    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    file_handler = RotatingFileHandler(LOG_FILE, maxBytes=5 * 1024 * 1024, backupCount=5)
    file_handler.setFormatter(formatter)

    stderr_handler = logging.StreamHandler(sys.stderr)
    stderr_handler.setLevel(logging.WARNING)
    stderr_handler.setFormatter(formatter)

    root = logging.getLogger()
    level = os.getenv("LOG_LEVEL", "INFO").upper()
    root.setLevel(getattr(logging, level, logging.INFO))
    root.addHandler(file_handler)
    root.addHandler(stderr_handler)
    _configured = True


def get_logger(name: str) -> logging.Logger:
    """Return the named logger, configuring the root handlers on first use."""
    _configure()
    return logging.getLogger(name)
