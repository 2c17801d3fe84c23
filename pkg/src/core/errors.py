# src/core/errors.py
"""Exception hierarchy shared by every package.

Reaching a solver cap is not an error; solvers return a capped report instead.
"""


class DomsetError(Exception):
    """Root of all errors raised by this project."""


class ParameterError(DomsetError, ValueError):
    """An argument is outside its documented range."""


class DomainError(ParameterError):
    """An argument is outside a mathematical function's domain."""


class GuardLimitError(ParameterError):
    """An instance is too large for an enumeration-based routine."""

    def __init__(self, what: str, n: int, limit: int):
        super().__init__(f"{what} refuses n={n}: enumeration guard is n <= {limit}")
        self.n = n
        self.limit = limit


class FormatError(DomsetError):
    """A graph file or CSV row could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line = line
